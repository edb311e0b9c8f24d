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

#ifndef MINMODEL_ANALYZER_H_
#define MINMODEL_ANALYZER_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "minmodel/factorization.h"
#include "minmodel/homotopy.h"
#include "minmodel/presheaf.h"
#include "minmodel/universe.h"

namespace minmodel {

enum class Outcome { kPass, kFail, kInconclusive };
std::string_view OutcomeName(Outcome outcome);

struct NamedMap {
  std::string role;
  PresheafMap map;
};

// Result of a check. A Pass over a universe holds only within its bound,
// which `scope` states.
struct VerdictReport {
  std::string check;
  Outcome outcome = Outcome::kPass;
  std::vector<NamedMap> counterexample;
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, int64_t>> stats;
  std::vector<VerdictReport> parts;
  std::string scope;

  void AddStat(const std::string& name, int64_t value);
};

// Conjunction: Fail if some part fails (the first failing part supplies the
// counterexample), else Inconclusive if some part is, else Pass.
VerdictReport Conjoin(std::string check, std::vector<VerdictReport> parts);

// A decided class of maps with memoized verdicts.
class WeClass {
 public:
  WeClass(std::string name, std::function<Truth(const PresheafMap&)> decide);

  const std::string& name() const { return name_; }
  Truth Contains(const PresheafMap& f);

 private:
  std::string name_;
  std::function<Truth(const PresheafMap&)> decide_;
  std::unordered_map<PresheafMap, Truth, PresheafMapHash> memo_;
};

struct AnalyzerConfig {
  Bound bound;
  // Attachments allowed per factorization.
  int fuel = 1024;
  // Also build every cylinder with the reversed generator order and flag
  // homotopy verdicts that depend on the choice.
  bool cross_check = false;
};

struct MapClassification {
  Truth cofibration = Truth::kInconclusive;
  Truth fibration = Truth::kInconclusive;
  Truth weak_equivalence = Truth::kInconclusive;
  Truth trivial_cofibration = Truth::kInconclusive;
  Truth trivial_fibration = Truth::kInconclusive;
  Outcome pure = Outcome::kInconclusive;
  Truth strong_deformation_retract = Truth::kInconclusive;
  // For a cofibration: trivial cofibration iff strong deformation retract.
  bool consistent = true;
  std::vector<std::string> notes;
};

struct WeEntry {
  int map_index = 0;
  Truth verdict = Truth::kInconclusive;
};

// Decides the model-structure conditions for a generating set I of
// monomorphisms, exhaustively over a bounded universe where a condition
// quantifies over all presheaves.
class ModelAnalyzer {
 public:
  ModelAnalyzer(BasePtr base, GeneratingSet generators, AnalyzerConfig config);

  const BasePtr& base() const { return base_; }
  const GeneratingSet& generators() const { return generators_; }
  const AnalyzerConfig& config() const { return config_; }
  HomotopyEngine& homotopy() { return engine_; }
  const BoundedUniverse& universe();
  std::string Scope();

  // Class predicates, memoized.
  Truth Cofibration(const PresheafMap& f);
  bool TrivialFibration(const PresheafMap& f);
  Truth Fibration(const PresheafMap& f);
  Truth WeakEquivalence(const PresheafMap& f);
  WeClass& WeakEquivalences() { return we_; }

  // J_I: incl0 of the cylinder over each generator. Throws FuelExhausted.
  const GeneratingSet& JSet();

  VerdictReport IsWeakEquivalence(const PresheafMap& f);
  VerdictReport IsPure(const PresheafMap& f);
  VerdictReport CheckAppropriate();
  VerdictReport CheckMainCondition();
  VerdictReport CheckPropernessCondition();
  VerdictReport VerifyAxioms(const GeneratingSet& j, WeClass& we);
  MapClassification Classify(const PresheafMap& f);
  std::vector<WeEntry> EnumerateWe();

  // Universe indices.
  const std::vector<int>& CofibrantObjects();
  // Cofibrations between cofibrant objects with no retraction.
  const std::vector<int>& NonSplitCofibrations();
  const std::vector<int>& TrivialFibrationsBetweenCofibrant();
  int UndecidedCofibrations();

  // Homotopy verdicts that differed between the two cylinder choices.
  const std::vector<std::string>& CrossCheckDisagreements() const {
    return disagreements_;
  }

 private:
  RelationOracle Relation();
  void ClassifyUniverse();
  VerdictReport Inconclusive(std::string check, std::string why);
  Truth CofibrantObject(const PresheafPtr& x);

  BasePtr base_;
  GeneratingSet generators_;
  AnalyzerConfig config_;
  HomotopyEngine engine_;
  std::unique_ptr<HomotopyEngine> reverse_engine_;
  LiftingMemo memo_;
  WeClass we_;
  std::optional<BoundedUniverse> universe_;
  std::optional<GeneratingSet> jset_;
  bool jset_exhausted_ = false;
  std::unique_ptr<LiftingMemo> j_memo_;
  std::unordered_map<PresheafMap, Truth, PresheafMapHash> cof_;
  bool classified_ = false;
  std::vector<int> cofibrant_objects_;
  std::vector<int> non_split_cofibrations_;
  std::vector<int> trivial_fibrations_;
  int undecided_cofibrations_ = 0;
  std::vector<std::string> disagreements_;
};

}  // namespace minmodel

#endif  // MINMODEL_ANALYZER_H_
