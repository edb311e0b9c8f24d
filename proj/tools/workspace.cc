// Copyright 2026 The minmodel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "workspace.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

#include "minmodel/error.h"

namespace minmodel::tool {

namespace {

struct Line {
  int number = 0;
  std::string text;
};

struct Section {
  int line = 0;
  std::string kind;
  std::string header;  // text after the kind
  std::vector<Line> body;
};

std::string_view Trim(std::string_view text) {
  size_t begin = text.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  size_t end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

std::vector<std::string> Words(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream stream{std::string(text)};
  for (std::string word; stream >> word;) words.push_back(word);
  return words;
}

[[noreturn]] void ParseFail(int line, const std::string& expected) {
  throw Error(ErrorKind::kParseError,
              "line " + std::to_string(line) + ": expected " + expected);
}

// Splits "key: rest" at the first colon.
std::pair<std::string, std::string> SplitColon(const Line& line,
                                               const std::string& expected) {
  size_t colon = line.text.find(':');
  if (colon == std::string::npos) ParseFail(line.number, expected);
  return {std::string(Trim(line.text.substr(0, colon))),
          std::string(Trim(line.text.substr(colon + 1)))};
}

// "a->x b->y" into pairs.
std::vector<std::pair<std::string, std::string>> ParseGraph(
    const Line& line, const std::string& text) {
  std::vector<std::pair<std::string, std::string>> graph;
  for (const std::string& word : Words(text)) {
    size_t arrow = word.find("->");
    if (arrow == std::string::npos || arrow == 0 ||
        arrow + 2 == word.size()) {
      ParseFail(line.number, "'from->to' pairs, got '" + word + "'");
    }
    graph.emplace_back(word.substr(0, arrow), word.substr(arrow + 2));
  }
  return graph;
}

int ParseInt(const Line& line, std::string_view text) {
  int value = 0;
  auto [end, error] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (error != std::errc() || end != text.data() + text.size()) {
    ParseFail(line.number, "an integer, got '" + std::string(text) + "'");
  }
  return value;
}

// Re-raises a validation error with the section it came from.
[[noreturn]] void Rethrow(const Error& error, const Section& section) {
  throw Error(error.kind(), "[" + section.kind + " " + section.header +
                                "] at line " + std::to_string(section.line) +
                                ": " + error.detail());
}

std::vector<Section> SplitSections(std::string_view text) {
  std::vector<Section> sections;
  int number = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    if (size_t hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    std::string_view line = Trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') ParseFail(number, "']' closing the header");
      std::string_view inner = Trim(line.substr(1, line.size() - 2));
      size_t space = inner.find_first_of(" \t");
      Section section;
      section.line = number;
      section.kind = std::string(inner.substr(0, space));
      if (space != std::string_view::npos) {
        section.header = std::string(Trim(inner.substr(space)));
      }
      sections.push_back(std::move(section));
      continue;
    }
    if (sections.empty()) ParseFail(number, "a section header");
    sections.back().body.push_back({number, std::string(line)});
  }
  return sections;
}

void ParseBase(const Section& section, Workspace& workspace) {
  BaseDescription& description = workspace.base_description;
  workspace.base_name = section.header.empty() ? "base" : section.header;
  for (const Line& line : section.body) {
    std::vector<std::string> words = Words(line.text);
    const std::string& keyword = words.front();
    if (keyword == "objects:") {
      description.objects.assign(words.begin() + 1, words.end());
    } else if (keyword == "identity") {
      // identity v: id_v
      auto [head, name] = SplitColon(line, "'identity OBJ: NAME'");
      std::vector<std::string> object = Words(head);
      if (object.size() != 2 || Words(name).size() != 1) {
        ParseFail(line.number, "'identity OBJ: NAME'");
      }
      description.identities.push_back({object[1], name});
    } else if (keyword == "morphism") {
      // morphism sigma: v -> e
      auto [head, rest] = SplitColon(line, "'morphism NAME: DOM -> COD'");
      std::vector<std::string> name = Words(head);
      std::vector<std::string> ends = Words(rest);
      if (name.size() != 2 || ends.size() != 3 || ends[1] != "->") {
        ParseFail(line.number, "'morphism NAME: DOM -> COD'");
      }
      description.morphisms.push_back({name[1], ends[0], ends[2]});
    } else if (keyword == "compose") {
      // compose f g = h
      if (words.size() != 5 || words[3] != "=") {
        ParseFail(line.number, "'compose FIRST SECOND = RESULT'");
      }
      description.compositions.push_back({words[1], words[2], words[4]});
    } else {
      ParseFail(line.number,
                "'objects:', 'identity', 'morphism' or 'compose'");
    }
  }
  try {
    workspace.base = BaseCategory::Load(description);
  } catch (const Error& error) {
    Rethrow(error, section);
  }
}

void ParsePresheaf(const Section& section, Workspace& workspace) {
  std::vector<std::string> name = Words(section.header);
  if (name.size() != 1) ParseFail(section.line, "'[presheaf NAME]'");
  PresheafData data;
  for (const Line& line : section.body) {
    auto [head, rest] = SplitColon(line, "'OBJ: elements' or 'action M: ...'");
    std::vector<std::string> words = Words(head);
    if (words.size() == 2 && words[0] == "action") {
      data.actions.emplace_back(words[1], ParseGraph(line, rest));
    } else if (words.size() == 1) {
      data.carriers.emplace_back(words[0], Words(rest));
    } else {
      ParseFail(line.number, "'OBJ: elements' or 'action M: ...'");
    }
  }
  for (const NamedPresheaf& existing : workspace.presheaves) {
    if (existing.name == name[0]) {
      throw Error(ErrorKind::kDuplicateName,
                  "presheaf '" + name[0] + "' declared twice");
    }
  }
  try {
    workspace.presheaves.push_back(
        {name[0], Presheaf::Validate(workspace.base, data, name[0])});
  } catch (const Error& error) {
    Rethrow(error, section);
  }
}

void ParseMap(const Section& section, Workspace& workspace) {
  // NAME : SRC -> DST
  std::vector<std::string> words = Words(section.header);
  if (words.size() != 5 || words[1] != ":" || words[3] != "->") {
    ParseFail(section.line, "'[map NAME : SRC -> DST]'");
  }
  for (const WorkspaceMap& existing : workspace.maps) {
    if (existing.name == words[0]) {
      throw Error(ErrorKind::kDuplicateName,
                  "map '" + words[0] + "' declared twice");
    }
  }
  MapData data;
  for (const Line& line : section.body) {
    auto [head, rest] = SplitColon(line, "'component OBJ: a->x ...'");
    std::vector<std::string> key = Words(head);
    if (key.size() != 2 || key[0] != "component") {
      ParseFail(line.number, "'component OBJ: a->x ...'");
    }
    data.components.emplace_back(key[1], ParseGraph(line, rest));
  }
  try {
    const PresheafPtr& source = workspace.Presheaf(words[2]);
    const PresheafPtr& target = workspace.Presheaf(words[4]);
    workspace.maps.push_back({words[0], words[2], words[4],
                              PresheafMap::FromData(source, target, data)});
  } catch (const Error& error) {
    Rethrow(error, section);
  }
}

void ParseSet(const Section& section, Workspace& workspace) {
  std::vector<std::string> name = Words(section.header);
  if (name.size() != 1) ParseFail(section.line, "'[genset NAME]'");
  for (const GeneratingSet& existing : workspace.sets) {
    if (existing.label == name[0]) {
      throw Error(ErrorKind::kDuplicateName,
                  "generating set '" + name[0] + "' declared twice");
    }
  }
  GeneratingSet set;
  set.label = name[0];
  for (const Line& line : section.body) {
    auto [head, rest] = SplitColon(line, "'maps: NAME ...'");
    if (head != "maps") ParseFail(line.number, "'maps: NAME ...'");
    for (const std::string& map_name : Words(rest)) {
      try {
        set.maps.push_back(workspace.Map(map_name).map);
      } catch (const Error& error) {
        Rethrow(error, section);
      }
      set.names.push_back(map_name);
    }
  }
  workspace.sets.push_back(std::move(set));
}

void ParseConfig(const Section& section, Workspace& workspace) {
  for (const Line& line : section.body) {
    size_t equals = line.text.find('=');
    if (equals == std::string::npos) ParseFail(line.number, "'key = value'");
    std::string key(Trim(line.text.substr(0, equals)));
    std::string value(Trim(line.text.substr(equals + 1)));
    if (key == "fuel") {
      workspace.config.fuel = ParseInt(line, value);
    } else if (key == "bound") {
      workspace.config.bound = value;
    } else if (key == "cross_check") {
      if (value != "true" && value != "false") {
        ParseFail(line.number, "'true' or 'false'");
      }
      workspace.config.cross_check = value == "true";
    } else {
      ParseFail(line.number, "'fuel', 'bound' or 'cross_check'");
    }
  }
}

void AppendGraph(std::string& out,
                 const std::vector<std::pair<std::string, std::string>>& graph) {
  for (const auto& [from, to] : graph) out += " " + from + "->" + to;
}

}  // namespace

const PresheafPtr& Workspace::Presheaf(std::string_view name) const {
  for (const NamedPresheaf& entry : presheaves) {
    if (entry.name == name) return entry.presheaf;
  }
  throw Error(ErrorKind::kUnknownName,
              "no presheaf named '" + std::string(name) + "'");
}

const WorkspaceMap& Workspace::Map(std::string_view name) const {
  for (const WorkspaceMap& entry : maps) {
    if (entry.name == name) return entry;
  }
  throw Error(ErrorKind::kUnknownName,
              "no map named '" + std::string(name) + "'");
}

const GeneratingSet& Workspace::Set(std::string_view name) const {
  for (const GeneratingSet& entry : sets) {
    if (entry.label == name) return entry;
  }
  throw Error(ErrorKind::kUnknownName,
              "no generating set named '" + std::string(name) + "'");
}

Workspace ParseWorkspace(std::string_view text) {
  std::vector<Section> sections = SplitSections(text);
  Workspace workspace;
  bool have_base = false;
  // Sections are processed kind by kind so that later kinds may refer to
  // earlier ones regardless of file order.
  for (const Section& section : sections) {
    if (section.kind != "base") continue;
    if (have_base) ParseFail(section.line, "a single [base] section");
    ParseBase(section, workspace);
    have_base = true;
  }
  if (!have_base) {
    throw Error(ErrorKind::kParseError, "line 1: expected a [base] section");
  }
  const std::string kinds[] = {"presheaf", "map", "genset", "config"};
  for (const std::string& kind : kinds) {
    for (const Section& section : sections) {
      if (section.kind != kind) continue;
      if (kind == "presheaf") ParsePresheaf(section, workspace);
      if (kind == "map") ParseMap(section, workspace);
      if (kind == "genset") ParseSet(section, workspace);
      if (kind == "config") ParseConfig(section, workspace);
    }
  }
  for (const Section& section : sections) {
    if (section.kind != "base" && section.kind != "presheaf" &&
        section.kind != "map" && section.kind != "genset" &&
        section.kind != "config") {
      ParseFail(section.line,
                "a section kind of base, presheaf, map, genset or config");
    }
  }
  if (!workspace.config.bound.empty()) {
    ParseBound(workspace.config.bound, *workspace.base);
  }
  return workspace;
}

Workspace LoadWorkspace(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kParseError, "cannot read workspace '" + path + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return ParseWorkspace(text.str());
}

std::string SerializeWorkspace(const Workspace& workspace) {
  std::string out = "[base " + workspace.base_name + "]\nobjects:";
  const BaseDescription description = workspace.base->Describe();
  for (const std::string& object : description.objects) out += " " + object;
  out += "\n";
  for (const auto& identity : description.identities) {
    out += "identity " + identity.object + ": " + identity.name + "\n";
  }
  for (const auto& arrow : description.morphisms) {
    out += "morphism " + arrow.name + ": " + arrow.dom + " -> " + arrow.cod +
           "\n";
  }
  for (const auto& entry : description.compositions) {
    out += "compose " + entry.first + " " + entry.second + " = " +
           entry.result + "\n";
  }
  for (const NamedPresheaf& entry : workspace.presheaves) {
    out += "\n[presheaf " + entry.name + "]\n";
    PresheafData data = entry.presheaf->Describe();
    for (const auto& [object, elements] : data.carriers) {
      out += object + ":";
      for (const std::string& element : elements) out += " " + element;
      out += "\n";
    }
    for (const auto& [morphism, graph] : data.actions) {
      out += "action " + morphism + ":";
      AppendGraph(out, graph);
      out += "\n";
    }
  }
  for (const WorkspaceMap& entry : workspace.maps) {
    out += "\n[map " + entry.name + " : " + entry.source + " -> " +
           entry.target + "]\n";
    for (const auto& [object, graph] : entry.map.Describe().components) {
      out += "component " + object + ":";
      AppendGraph(out, graph);
      out += "\n";
    }
  }
  for (const GeneratingSet& set : workspace.sets) {
    out += "\n[genset " + set.label + "]\nmaps:";
    for (size_t k = 0; k < set.maps.size(); ++k) out += " " + set.NameOf(k);
    out += "\n";
  }
  out += "\n[config]\nfuel = " + std::to_string(workspace.config.fuel) + "\n";
  if (!workspace.config.bound.empty()) {
    out += "bound = " + workspace.config.bound + "\n";
  }
  out += std::string("cross_check = ") +
         (workspace.config.cross_check ? "true" : "false") + "\n";
  return out;
}

Bound ParseBound(std::string_view text, const BaseCategory& base) {
  const Line line{0, std::string(text)};
  std::vector<std::string> words = Words(text);
  if (words.size() == 1 && words[0].find(':') == std::string::npos) {
    return Bound::Uniform(base, ParseInt(line, words[0]));
  }
  Bound bound{std::vector<int>(base.num_objects(), -1)};
  for (const std::string& word : words) {
    size_t colon = word.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorKind::kParseError,
                  "bound: expected 'OBJ:SIZE', got '" + word + "'");
    }
    int object = base.FindObject(word.substr(0, colon));
    if (object < 0) {
      throw Error(ErrorKind::kUnknownName,
                  "bound names unknown object '" + word.substr(0, colon) +
                      "'");
    }
    bound.per_object[object] = ParseInt(line, word.substr(colon + 1));
  }
  for (int size : bound.per_object) {
    if (size < 0) {
      throw Error(ErrorKind::kParseError,
                  "bound: expected a size for every object");
    }
  }
  return bound;
}

}  // namespace minmodel::tool
