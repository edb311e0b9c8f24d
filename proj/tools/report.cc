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

#include "report.h"

namespace minmodel::tool {

namespace {

Json Graph(const std::vector<std::pair<std::string, std::string>>& graph) {
  Json pairs = Json::array();
  for (const auto& [from, to] : graph) pairs.push_back(Json::array({from, to}));
  return pairs;
}

}  // namespace

Json PresheafJson(const Presheaf& presheaf) {
  PresheafData data = presheaf.Describe();
  Json out;
  out["label"] = presheaf.label();
  Json carriers = Json::object();
  for (const auto& [object, elements] : data.carriers) {
    carriers[object] = elements;
  }
  out["carriers"] = std::move(carriers);
  Json actions = Json::object();
  for (const auto& [morphism, graph] : data.actions) {
    actions[morphism] = Graph(graph);
  }
  out["actions"] = std::move(actions);
  return out;
}

Json MapComponentsJson(const PresheafMap& map) {
  Json components = Json::object();
  for (const auto& [object, graph] : map.Describe().components) {
    components[object] = Graph(graph);
  }
  return components;
}

Json MapJson(const PresheafMap& map) {
  Json out;
  out["source"] = PresheafJson(*map.source());
  out["target"] = PresheafJson(*map.target());
  out["components"] = MapComponentsJson(map);
  return out;
}

Json VerdictJson(const VerdictReport& report) {
  Json out;
  out["check"] = report.check;
  out["verdict"] = std::string(OutcomeName(report.outcome));
  if (!report.scope.empty()) out["scope"] = report.scope;
  if (!report.counterexample.empty()) {
    Json counterexample = Json::array();
    for (const NamedMap& entry : report.counterexample) {
      Json item;
      item["role"] = entry.role;
      item["map"] = MapJson(entry.map);
      counterexample.push_back(std::move(item));
    }
    out["counterexample"] = std::move(counterexample);
  }
  if (!report.notes.empty()) out["notes"] = report.notes;
  if (!report.stats.empty()) {
    Json stats = Json::object();
    for (const auto& [name, value] : report.stats) stats[name] = value;
    out["searched"] = std::move(stats);
  }
  if (!report.parts.empty()) {
    Json parts = Json::array();
    for (const VerdictReport& part : report.parts) {
      parts.push_back(VerdictJson(part));
    }
    out["parts"] = std::move(parts);
  }
  return out;
}

Json FactorizationJson(const CellFactorization& factorization,
                       const GeneratingSet& set) {
  Json out;
  out["status"] = factorization.complete() ? "complete" : "fuel_exhausted";
  out["attachments"] = factorization.fuel_used;
  out["rounds"] = factorization.rounds;
  out["middle"] = PresheafJson(*factorization.left.target());
  out["left"] = MapComponentsJson(factorization.left);
  out["right"] = MapComponentsJson(factorization.right);
  Json log = Json::array();
  for (const Attachment& cell : factorization.log) {
    Json entry;
    entry["generator"] = set.NameOf(cell.generator);
    entry["round"] = cell.round;
    entry["attaching"] = MapJson(cell.attaching);
    entry["result"] = PresheafJson(*cell.result);
    log.push_back(std::move(entry));
  }
  out["log"] = std::move(log);
  return out;
}

Json CylinderJson(const CylinderObject& cylinder, const GeneratingSet& set) {
  Json out;
  out["glued"] = PresheafJson(*cylinder.glued);
  out["apex"] = PresheafJson(*cylinder.apex);
  out["incl0"] = MapComponentsJson(cylinder.incl0);
  out["incl1"] = MapComponentsJson(cylinder.incl1);
  out["collapse"] = MapComponentsJson(cylinder.collapse);
  out["factorization"] = FactorizationJson(cylinder.provenance, set);
  return out;
}

std::string TruthText(Truth truth) { return std::string(TruthName(truth)); }

std::string RenderReport(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace minmodel::tool
