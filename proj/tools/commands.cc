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

#include "commands.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <utility>

#include "CLI11.hpp"
#include "minmodel/colimits.h"
#include "minmodel/error.h"
#include "minmodel/hom_search.h"
#include "workspace.h"

namespace minmodel::tool {

namespace {

struct Context {
  Workspace workspace;
  int fuel = 0;
  Bound bound;
  std::string bound_text;
  bool cross_check = false;
  std::unique_ptr<ModelAnalyzer> analyzer;

  ModelAnalyzer& Analyzer(const std::string& set_name) {
    if (!analyzer) {
      AnalyzerConfig config{bound, fuel, cross_check};
      analyzer = std::make_unique<ModelAnalyzer>(
          workspace.base, workspace.Set(set_name), config);
    }
    return *analyzer;
  }
};

struct CommandOutcome {
  Outcome outcome = Outcome::kPass;
  Json witnesses = Json::object();
};

void ExpectArgs(const Invocation& invocation, size_t count,
                const std::string& usage) {
  if (invocation.args.size() != count) {
    throw Error(ErrorKind::kValidationError,
                "usage: " + invocation.command + " " + usage);
  }
}

CommandOutcome Validate(Context& context) {
  const Workspace& ws = context.workspace;
  CommandOutcome result;
  result.witnesses["base"] = ws.base_name;
  result.witnesses["objects"] = ws.base->num_objects();
  result.witnesses["morphisms"] = ws.base->num_morphisms();
  Json presheaves = Json::array();
  for (const NamedPresheaf& entry : ws.presheaves) {
    presheaves.push_back(entry.name);
  }
  Json maps = Json::array();
  for (const WorkspaceMap& entry : ws.maps) maps.push_back(entry.name);
  Json sets = Json::array();
  for (const GeneratingSet& set : ws.sets) sets.push_back(set.label);
  result.witnesses["presheaves"] = std::move(presheaves);
  result.witnesses["maps"] = std::move(maps);
  result.witnesses["sets"] = std::move(sets);
  return result;
}

CommandOutcome Factor(Context& context, const Invocation& invocation) {
  ExpectArgs(invocation, 2, "MAP SET");
  const PresheafMap& f = context.workspace.Map(invocation.args[0]).map;
  const GeneratingSet& set = context.workspace.Set(invocation.args[1]);
  CellFactorization factorization = SoaFactorize(f, set, context.fuel);
  CommandOutcome result;
  result.witnesses["factorization"] = FactorizationJson(factorization, set);
  if (!factorization.complete()) {
    result.outcome = Outcome::kInconclusive;
    return result;
  }
  ReplayResult replay = Replay(factorization.log, f.source());
  result.witnesses["replay_matches"] =
      SamePresheaf(replay.apex, factorization.left.target()) &&
      replay.left == factorization.left;
  result.witnesses["right_in_inj"] = InInj(factorization.right, set);
  return result;
}

CommandOutcome Cylinder(Context& context, const Invocation& invocation) {
  ExpectArgs(invocation, 2, "MAP SET");
  const PresheafMap& i = context.workspace.Map(invocation.args[0]).map;
  const GeneratingSet& set = context.workspace.Set(invocation.args[1]);
  CommandOutcome result;
  try {
    CylinderPtr cylinder = BuildCylinder(i, set, context.fuel);
    result.witnesses["cylinder"] = CylinderJson(*cylinder, set);
  } catch (const FuelExhausted& error) {
    result.outcome = Outcome::kInconclusive;
    result.witnesses["notes"] = Json::array({error.what()});
  }
  return result;
}

CommandOutcome Homotopic(Context& context, const Invocation& invocation) {
  const std::vector<std::string>& args = invocation.args;
  if (!(args.size() == 3 || (args.size() == 5 && args[2] == "rel"))) {
    throw Error(ErrorKind::kValidationError,
                "usage: homotopic MAP MAP [rel MAP] SET");
  }
  const Workspace& ws = context.workspace;
  const PresheafMap& f0 = ws.Map(args[0]).map;
  const PresheafMap& f1 = ws.Map(args[1]).map;
  PresheafMap rel = args.size() == 5 ? ws.Map(args[3]).map
                                     : FromInitial(f0.source());
  HomotopyEngine& engine = context.Analyzer(args.back()).homotopy();
  CommandOutcome result;
  result.witnesses["relative_to"] = args.size() == 5 ? args[3] : "initial";
  try {
    auto witness = engine.Homotopic(f0, f1, rel);
    if (witness) {
      result.witnesses["cylinder_apex"] = PresheafJson(*witness->cylinder->apex);
      result.witnesses["homotopy"] = MapComponentsJson(witness->homotopy);
    } else {
      result.outcome = Outcome::kFail;
      result.witnesses["counterexample"] =
          Json::array({MapJson(f0), MapJson(f1)});
    }
  } catch (const FuelExhausted& error) {
    result.outcome = Outcome::kInconclusive;
    result.witnesses["notes"] = Json::array({error.what()});
  }
  return result;
}

CommandOutcome Classify(Context& context, const Invocation& invocation) {
  ExpectArgs(invocation, 2, "MAP SET");
  const PresheafMap& f = context.workspace.Map(invocation.args[0]).map;
  MapClassification c = context.Analyzer(invocation.args[1]).Classify(f);
  CommandOutcome result;
  Json& w = result.witnesses;
  w["cofibration"] = TruthText(c.cofibration);
  w["fibration"] = TruthText(c.fibration);
  w["weak_equivalence"] = TruthText(c.weak_equivalence);
  w["trivial_cofibration"] = TruthText(c.trivial_cofibration);
  w["trivial_fibration"] = TruthText(c.trivial_fibration);
  w["pure"] = std::string(OutcomeName(c.pure));
  w["strong_deformation_retract"] = TruthText(c.strong_deformation_retract);
  w["consistent"] = c.consistent;
  if (!c.notes.empty()) w["notes"] = c.notes;
  bool undecided = c.pure == Outcome::kInconclusive;
  for (Truth t : {c.cofibration, c.fibration, c.weak_equivalence,
                  c.strong_deformation_retract}) {
    undecided = undecided || t == Truth::kInconclusive;
  }
  if (!c.consistent) {
    result.outcome = Outcome::kFail;
  } else if (undecided) {
    result.outcome = Outcome::kInconclusive;
  }
  return result;
}

CommandOutcome FromVerdict(const VerdictReport& report) {
  CommandOutcome result;
  result.outcome = report.outcome;
  result.witnesses["report"] = VerdictJson(report);
  return result;
}

CommandOutcome VerifyAxioms(Context& context, const Invocation& invocation) {
  ExpectArgs(invocation, 1, "SET");
  ModelAnalyzer& analyzer = context.Analyzer(invocation.args[0]);
  try {
    const GeneratingSet& j = analyzer.JSet();
    return FromVerdict(analyzer.VerifyAxioms(j, analyzer.WeakEquivalences()));
  } catch (const FuelExhausted& error) {
    CommandOutcome result;
    result.outcome = Outcome::kInconclusive;
    result.witnesses["notes"] = Json::array({error.what()});
    return result;
  }
}

CommandOutcome EnumerateWe(Context& context, const Invocation& invocation) {
  ExpectArgs(invocation, 1, "SET");
  ModelAnalyzer& analyzer = context.Analyzer(invocation.args[0]);
  const BoundedUniverse& universe = analyzer.universe();
  CommandOutcome result;
  Json objects = Json::array();
  for (const PresheafPtr& object : universe.objects()) {
    objects.push_back(PresheafJson(*object));
  }
  Json maps = Json::array();
  int members = 0;
  int undecided = 0;
  for (const WeEntry& entry : analyzer.EnumerateWe()) {
    const PresheafMap& f = universe.maps()[entry.map_index].map;
    Json item;
    item["source"] = f.source()->label();
    item["target"] = f.target()->label();
    item["components"] = MapComponentsJson(f);
    item["weak_equivalence"] = TruthText(entry.verdict);
    maps.push_back(std::move(item));
    if (entry.verdict == Truth::kTrue) ++members;
    if (entry.verdict == Truth::kInconclusive) ++undecided;
  }
  result.witnesses["scope"] = analyzer.Scope();
  result.witnesses["weak_equivalences"] = members;
  result.witnesses["undecided"] = undecided;
  result.witnesses["objects"] = std::move(objects);
  result.witnesses["maps"] = std::move(maps);
  if (undecided > 0) result.outcome = Outcome::kInconclusive;
  return result;
}

CommandOutcome Dispatch(Context& context, const Invocation& invocation) {
  const std::string& command = invocation.command;
  if (command == "validate") {
    ExpectArgs(invocation, 0, "");
    return Validate(context);
  }
  if (command == "factor") return Factor(context, invocation);
  if (command == "cylinder") return Cylinder(context, invocation);
  if (command == "homotopic") return Homotopic(context, invocation);
  if (command == "classify") return Classify(context, invocation);
  if (command == "verify-axioms") return VerifyAxioms(context, invocation);
  if (command == "enumerate-we") return EnumerateWe(context, invocation);
  if (command == "check-appropriate" || command == "check-main" ||
      command == "check-properness") {
    ExpectArgs(invocation, 1, "SET");
    ModelAnalyzer& analyzer = context.Analyzer(invocation.args[0]);
    if (command == "check-appropriate") {
      return FromVerdict(analyzer.CheckAppropriate());
    }
    if (command == "check-main") return FromVerdict(analyzer.CheckMainCondition());
    return FromVerdict(analyzer.CheckPropernessCondition());
  }
  throw Error(ErrorKind::kUnknownCommand, "unknown command '" + command + "'");
}

int ExitCodeFor(Outcome outcome) {
  switch (outcome) {
    case Outcome::kPass: return kExitPass;
    case Outcome::kFail: return kExitFail;
    case Outcome::kInconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

}  // namespace

CommandResult RunCommand(const Invocation& invocation) {
  const SearchStats before = ThreadSearchStats();
  Json parameters;
  parameters["workspace"] =
      std::filesystem::path(invocation.workspace_path).filename().string();
  parameters["arguments"] = invocation.args;

  CommandResult result;
  Json verdict;
  Json witnesses = Json::object();
  Json bounds = Json::object();
  try {
    Context context;
    context.workspace = LoadWorkspace(invocation.workspace_path);
    const Workspace& ws = context.workspace;
    context.fuel = invocation.fuel.value_or(ws.config.fuel);
    context.bound_text = invocation.bound.value_or(
        ws.config.bound.empty() ? std::string("3") : ws.config.bound);
    context.bound = ParseBound(context.bound_text, *ws.base);
    context.cross_check = invocation.cross_check || ws.config.cross_check;
    parameters["fuel"] = context.fuel;
    parameters["bound"] = context.bound.ToString(*ws.base);
    parameters["cross_check"] = context.cross_check;

    CommandOutcome outcome = Dispatch(context, invocation);
    if (context.analyzer && context.cross_check) {
      const auto& disagreements = context.analyzer->CrossCheckDisagreements();
      outcome.witnesses["cylinder_disagreements"] = disagreements;
      if (!disagreements.empty() && outcome.outcome == Outcome::kPass) {
        outcome.outcome = Outcome::kInconclusive;
      }
    }
    verdict = std::string(OutcomeName(outcome.outcome));
    witnesses = std::move(outcome.witnesses);
    result.exit_code = ExitCodeFor(outcome.outcome);
    bounds["universe"] = context.bound.ToString(*ws.base);
    bounds["fuel_per_factorization"] = context.fuel;
    if (context.analyzer) {
      bounds["scope"] = context.analyzer->Scope();
    }
  } catch (const Error& error) {
    verdict = "error";
    Json detail;
    detail["kind"] = std::string(ErrorKindName(error.kind()));
    detail["message"] = error.detail();
    witnesses["error"] = std::move(detail);
    result.exit_code = kExitUsage;
  }
  const SearchStats& after = ThreadSearchStats();
  Json timing;
  timing["unit"] = "search work counters";
  timing["searches"] = after.searches - before.searches;
  timing["nodes"] = after.nodes - before.nodes;
  timing["solutions"] = after.solutions - before.solutions;

  result.report["command"] = invocation.command;
  result.report["parameters"] = std::move(parameters);
  result.report["verdict"] = std::move(verdict);
  result.report["witnesses"] = std::move(witnesses);
  result.report["bounds"] = std::move(bounds);
  result.report["fuel_used"] = after.attachments - before.attachments;
  result.report["timing"] = std::move(timing);
  return result;
}

int ToolMain(int argc, char** argv) {
  CLI::App app{"Minimal model structures on finite presheaf categories"};
  Invocation invocation;
  std::string out;
  int fuel = 0;
  std::string bound;
  app.add_option("workspace", invocation.workspace_path, "Workspace file")
      ->required();
  app.add_option("command", invocation.command,
                 "validate | factor | cylinder | homotopic | classify | "
                 "check-appropriate | check-main | check-properness | "
                 "verify-axioms | enumerate-we")
      ->required();
  app.add_option("args", invocation.args, "Command arguments");
  auto* fuel_option =
      app.add_option("--fuel", fuel, "Attachments per factorization");
  auto* bound_option =
      app.add_option("--bound", bound, "Universe bound: N or OBJ:N ...");
  app.add_flag("--cross-check", invocation.cross_check,
               "Build alternative cylinders and flag disagreements");
  app.add_option("--out", out, "Write the report here instead of stdout");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    int code = app.exit(error);
    return code == 0 ? kExitPass : kExitUsage;
  }
  if (*fuel_option) invocation.fuel = fuel;
  if (*bound_option) invocation.bound = bound;

  CommandResult result = RunCommand(invocation);
  const std::string text = RenderReport(result.report);
  if (out.empty()) {
    std::cout << text;
    return result.exit_code;
  }
  const std::string temporary = out + ".tmp";
  {
    std::ofstream file(temporary, std::ios::binary | std::ios::trunc);
    file << text;
    if (!file) {
      std::cerr << "cannot write " << temporary << "\n";
      return kExitUsage;
    }
  }
  std::error_code error;
  std::filesystem::rename(temporary, out, error);
  if (error) {
    std::cerr << "cannot write " << out << ": " << error.message() << "\n";
    return kExitUsage;
  }
  return result.exit_code;
}

}  // namespace minmodel::tool
