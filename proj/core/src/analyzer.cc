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

#include "minmodel/analyzer.h"

#include <utility>

#include "minmodel/colimits.h"
#include "minmodel/error.h"
#include "minmodel/hom_search.h"
#include "minmodel/lifting.h"
#include "minmodel/morphism_properties.h"

namespace minmodel {

std::string_view OutcomeName(Outcome outcome) {
  switch (outcome) {
    case Outcome::kPass: return "pass";
    case Outcome::kFail: return "fail";
    case Outcome::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

void VerdictReport::AddStat(const std::string& name, int64_t value) {
  for (auto& [key, total] : stats) {
    if (key == name) {
      total += value;
      return;
    }
  }
  stats.emplace_back(name, value);
}

VerdictReport Conjoin(std::string check, std::vector<VerdictReport> parts) {
  VerdictReport report;
  report.check = std::move(check);
  bool inconclusive = false;
  for (const VerdictReport& part : parts) {
    if (part.outcome == Outcome::kFail &&
        report.outcome != Outcome::kFail) {
      report.outcome = Outcome::kFail;
      report.counterexample = part.counterexample;
    }
    if (part.outcome == Outcome::kInconclusive) inconclusive = true;
    if (report.scope.empty()) report.scope = part.scope;
  }
  if (report.outcome != Outcome::kFail && inconclusive) {
    report.outcome = Outcome::kInconclusive;
  }
  report.parts = std::move(parts);
  return report;
}

WeClass::WeClass(std::string name,
                 std::function<Truth(const PresheafMap&)> decide)
    : name_(std::move(name)), decide_(std::move(decide)) {}

Truth WeClass::Contains(const PresheafMap& f) {
  if (auto it = memo_.find(f); it != memo_.end()) return it->second;
  Truth verdict = decide_(f);
  memo_.emplace(f, verdict);
  return verdict;
}

namespace {

Truth FromBool(bool value) { return value ? Truth::kTrue : Truth::kFalse; }

Truth And(Truth a, Truth b) {
  if (a == Truth::kFalse || b == Truth::kFalse) return Truth::kFalse;
  if (a == Truth::kInconclusive || b == Truth::kInconclusive) {
    return Truth::kInconclusive;
  }
  return Truth::kTrue;
}

void AddSquare(VerdictReport& report, const LiftingProblem& square) {
  report.counterexample.push_back({"square_left", square.left});
  report.counterexample.push_back({"square_right", square.right});
  report.counterexample.push_back({"square_top", square.top});
  report.counterexample.push_back({"square_bottom", square.bottom});
}

void Fail(VerdictReport& report, std::vector<NamedMap> counterexample,
          std::string note) {
  report.outcome = Outcome::kFail;
  report.counterexample = std::move(counterexample);
  report.notes.push_back(std::move(note));
}

// Records fuel exhaustion without overriding an earlier Fail.
void MarkInconclusive(VerdictReport& report, const std::string& why) {
  if (report.outcome == Outcome::kPass) report.outcome = Outcome::kInconclusive;
  report.notes.push_back(why);
}

bool FitsInside(const Presheaf& small, const Presheaf& large) {
  for (int o = 0; o < small.base()->num_objects(); ++o) {
    if (small.size(o) > large.size(o)) return false;
  }
  return true;
}

}  // namespace

ModelAnalyzer::ModelAnalyzer(BasePtr base, GeneratingSet generators,
                             AnalyzerConfig config)
    : base_(std::move(base)),
      generators_(std::move(generators)),
      config_(std::move(config)),
      engine_(generators_, config_.fuel),
      we_("W_" + generators_.label, [this](const PresheafMap& f) {
        switch (IsWeakEquivalence(f).outcome) {
          case Outcome::kPass: return Truth::kTrue;
          case Outcome::kFail: return Truth::kFalse;
          case Outcome::kInconclusive: return Truth::kInconclusive;
        }
        return Truth::kInconclusive;
      }) {
  if (config_.bound.per_object.empty()) {
    config_.bound = Bound::Uniform(*base_, 2);
  }
  if (config_.cross_check) {
    FactorOptions reversed;
    reversed.reverse_order = true;
    reverse_engine_ =
        std::make_unique<HomotopyEngine>(generators_, config_.fuel, reversed);
  }
}

const BoundedUniverse& ModelAnalyzer::universe() {
  if (!universe_) universe_ = BoundedUniverse::Enumerate(base_, config_.bound);
  return *universe_;
}

std::string ModelAnalyzer::Scope() {
  return "within bound " + config_.bound.ToString(*base_);
}

RelationOracle ModelAnalyzer::Relation() {
  if (!reverse_engine_) return engine_.RelativeHomotopy();
  RelationOracle oracle;
  oracle.kind = RelationKind::kHomotopyRelLeft;
  oracle.tag = "homotopy rel left map (cross-checked)";
  oracle.decide = [this](const PresheafMap& a, const PresheafMap& b,
                         const PresheafMap& left) {
    bool primary = engine_.IsHomotopic(a, b, left);
    bool alternative = reverse_engine_->IsHomotopic(a, b, left);
    if (primary != alternative) {
      disagreements_.push_back("homotopy of two maps '" + a.source()->label() +
                               "' -> '" + a.target()->label() +
                               "' rel a map from '" + left.source()->label() +
                               "' depends on the cylinder");
    }
    return RelationResult{primary, std::nullopt};
  };
  return oracle;
}

Truth ModelAnalyzer::Cofibration(const PresheafMap& f) {
  if (auto it = cof_.find(f); it != cof_.end()) return it->second;
  Truth verdict = InCof(f, generators_, config_.fuel, &memo_);
  cof_.emplace(f, verdict);
  return verdict;
}

Truth ModelAnalyzer::CofibrantObject(const PresheafPtr& x) {
  return Cofibration(FromInitial(x));
}

bool ModelAnalyzer::TrivialFibration(const PresheafMap& f) {
  return InInj(f, generators_, &memo_);
}

Truth ModelAnalyzer::Fibration(const PresheafMap& f) {
  try {
    const GeneratingSet& j = JSet();
    return FromBool(InInj(f, j, j_memo_.get()));
  } catch (const FuelExhausted&) {
    return Truth::kInconclusive;
  }
}

Truth ModelAnalyzer::WeakEquivalence(const PresheafMap& f) {
  return we_.Contains(f);
}

const GeneratingSet& ModelAnalyzer::JSet() {
  if (jset_) return *jset_;
  if (jset_exhausted_) {
    throw FuelExhausted("J set construction ran out of fuel (cached)");
  }
  GeneratingSet j;
  j.label = "J_" + generators_.label;
  try {
    for (size_t k = 0; k < generators_.maps.size(); ++k) {
      j.maps.push_back(engine_.Cylinder(generators_.maps[k])->incl0);
      j.names.push_back("j(" + generators_.NameOf(k) + ")");
    }
  } catch (const FuelExhausted&) {
    jset_exhausted_ = true;
    throw;
  }
  jset_ = std::move(j);
  j_memo_ = std::make_unique<LiftingMemo>();
  return *jset_;
}

VerdictReport ModelAnalyzer::Inconclusive(std::string check, std::string why) {
  VerdictReport report;
  report.check = std::move(check);
  report.outcome = Outcome::kInconclusive;
  report.notes.push_back(std::move(why));
  report.scope = Scope();
  return report;
}

VerdictReport ModelAnalyzer::IsWeakEquivalence(const PresheafMap& f) {
  VerdictReport report;
  report.check = "is_weak_equivalence";
  const RelationOracle relation = Relation();
  try {
    for (size_t k = 0; k < generators_.maps.size(); ++k) {
      const PresheafMap& i = generators_.maps[k];
      report.AddStat("generators_checked", 1);
      if (auto square = FindUnliftableSquareUpTo(i, f, relation)) {
        report.outcome = Outcome::kFail;
        AddSquare(report, *square);
        report.notes.push_back("no lift up to homotopy rel " +
                               generators_.NameOf(k));
        return report;
      }
    }
  } catch (const FuelExhausted& error) {
    MarkInconclusive(report, error.what());
  }
  return report;
}

void ModelAnalyzer::ClassifyUniverse() {
  if (classified_) return;
  classified_ = true;
  const BoundedUniverse& u = universe();
  std::vector<bool> cofibrant(u.objects().size(), false);
  for (size_t x = 0; x < u.objects().size(); ++x) {
    Truth verdict = CofibrantObject(u.objects()[x]);
    if (verdict == Truth::kTrue) {
      cofibrant[x] = true;
      cofibrant_objects_.push_back(static_cast<int>(x));
    } else if (verdict == Truth::kInconclusive) {
      ++undecided_cofibrations_;
    }
  }
  for (size_t m = 0; m < u.maps().size(); ++m) {
    const UniverseMap& entry = u.maps()[m];
    if (!cofibrant[entry.source] || !cofibrant[entry.target]) continue;
    if (TrivialFibration(entry.map)) {
      trivial_fibrations_.push_back(static_cast<int>(m));
    }
    if (IsSplitMono(entry.map)) continue;
    Truth verdict = Cofibration(entry.map);
    if (verdict == Truth::kTrue) {
      non_split_cofibrations_.push_back(static_cast<int>(m));
    } else if (verdict == Truth::kInconclusive) {
      ++undecided_cofibrations_;
    }
  }
}

const std::vector<int>& ModelAnalyzer::CofibrantObjects() {
  ClassifyUniverse();
  return cofibrant_objects_;
}

const std::vector<int>& ModelAnalyzer::NonSplitCofibrations() {
  ClassifyUniverse();
  return non_split_cofibrations_;
}

const std::vector<int>& ModelAnalyzer::TrivialFibrationsBetweenCofibrant() {
  ClassifyUniverse();
  return trivial_fibrations_;
}

int ModelAnalyzer::UndecidedCofibrations() {
  ClassifyUniverse();
  return undecided_cofibrations_;
}

VerdictReport ModelAnalyzer::IsPure(const PresheafMap& f) {
  VerdictReport report;
  report.check = "is_pure";
  report.scope = Scope();
  const BoundedUniverse& u = universe();
  // Split cofibrations never fail: u == (u ∘ r) ∘ i for a retraction r.
  for (int index : NonSplitCofibrations()) {
    const PresheafMap& i = u.maps()[index].map;
    report.AddStat("cofibrations", 1);
    bool failed = false;
    ForEachMap(i.source(), f.source(), {}, [&](const PresheafMap& top) {
      report.AddStat("squares", 1);
      MapConstraints through;
      through.fixed.push_back({i, top});
      if (FindMap(i.target(), f.source(), through)) return true;
      MapConstraints square;
      square.fixed.push_back({i, Compose(top, f)});
      if (auto bottom = FindMap(i.target(), f.target(), square)) {
        Fail(report,
             {{"cofibration", i}, {"top", top}, {"bottom", *bottom},
              {"map", f}},
             "top map does not factor through the cofibration");
        failed = true;
        return false;
      }
      return true;
    });
    if (failed) return report;
  }
  if (UndecidedCofibrations() > 0) {
    MarkInconclusive(report, std::to_string(UndecidedCofibrations()) +
                                 " cofibration verdicts ran out of fuel");
  }
  return report;
}

VerdictReport ModelAnalyzer::CheckAppropriate() {
  VerdictReport report;
  report.check = "check_appropriate";
  report.scope = Scope();
  report.notes.push_back(
      "an unadorned homotopy relation is read as homotopy rel 0 -> Y");
  const BoundedUniverse& u = universe();
  const RelationOracle relation = Relation();
  std::vector<bool> cofibrant(u.objects().size(), false);
  for (int x : CofibrantObjects()) cofibrant[x] = true;
  try {
    for (int t_index : TrivialFibrationsBetweenCofibrant()) {
      const UniverseMap& t = u.maps()[t_index];
      report.AddStat("trivial_fibrations", 1);
      for (int c_index : u.MapsFrom(t.source)) {
        const PresheafMap& c = u.maps()[c_index].map;
        if (Cofibration(c) != Truth::kTrue) continue;
        report.AddStat("pushouts", 1);
        // Z <-c- X -t-> Y; t' : Z -> Z ⊔_X Y.
        PushoutResult pushout = Pushout(c, t.map);
        const PresheafMap& pushed = pushout.leg_from_b;
        VerdictReport pure = IsPure(pushed);
        if (pure.outcome == Outcome::kFail) {
          std::vector<NamedMap> witness = {{"trivial_fibration", t.map},
                                           {"cofibration", c}};
          for (auto& entry : pure.counterexample) witness.push_back(entry);
          Fail(report, std::move(witness), "pushed-out map is not pure");
          return report;
        }
        if (pure.outcome == Outcome::kInconclusive) {
          MarkInconclusive(report, "purity undecided for a pushout");
        }
        for (size_t v = 0; v < u.objects().size(); ++v) {
          if (!cofibrant[v]) continue;
          report.AddStat("object_lifting_checks", 1);
          auto square = FindUnliftableSquareUpTo(
              FromInitial(u.objects()[v]), pushed, relation);
          if (square) {
            std::vector<NamedMap> witness = {{"trivial_fibration", t.map},
                                             {"cofibration", c}};
            Fail(report, std::move(witness),
                 "pushed-out map has no lift up to homotopy against "
                 "cofibrant object '" +
                     u.objects()[v]->label() + "'");
            AddSquare(report, *square);
            return report;
          }
        }
      }
    }
  } catch (const FuelExhausted& error) {
    MarkInconclusive(report, error.what());
  }
  return report;
}

VerdictReport ModelAnalyzer::CheckMainCondition() {
  std::vector<VerdictReport> parts;
  parts.push_back(CheckAppropriate());

  VerdictReport cells;
  cells.check = "j_cell_lifting";
  cells.scope = Scope();
  cells.notes.push_back(
      "smallness holds by finiteness; J-cell maps are checked as single "
      "pushouts of J maps along universe maps");
  try {
    const GeneratingSet& j = JSet();
    const BoundedUniverse& u = universe();
    const RelationOracle relation = Relation();
    std::vector<PresheafMap> domains;
    for (const PresheafMap& i : generators_.maps) {
      bool seen = false;
      for (const PresheafMap& d : domains) {
        seen = seen || SamePresheaf(d.target(), i.source());
      }
      if (!seen) domains.push_back(FromInitial(i.source()));
    }
    for (size_t k = 0; k < j.maps.size() && cells.outcome != Outcome::kFail;
         ++k) {
      const PresheafMap& jk = j.maps[k];
      for (size_t x = 0; x < u.objects().size(); ++x) {
        bool failed = false;
        ForEachMap(jk.source(), u.objects()[x], {},
                   [&](const PresheafMap& along) {
                     cells.AddStat("pushouts", 1);
                     PushoutResult pushout = Pushout(jk, along);
                     const PresheafMap& cell = pushout.leg_from_c;
                     for (const PresheafMap& domain : domains) {
                       cells.AddStat("object_lifting_checks", 1);
                       auto square =
                           FindUnliftableSquareUpTo(domain, cell, relation);
                       if (square) {
                         Fail(cells,
                              {{"j_map", jk}, {"along", along},
                               {"cell", cell}},
                              "J-cell map " + j.NameOf(k) +
                                  " pushout has no lift up to homotopy "
                                  "against a generator domain");
                         AddSquare(cells, *square);
                         failed = true;
                         return false;
                       }
                     }
                     return true;
                   });
        if (failed) break;
      }
    }
  } catch (const FuelExhausted& error) {
    MarkInconclusive(cells, error.what());
  }
  parts.push_back(std::move(cells));
  return Conjoin("check_main_condition", std::move(parts));
}

VerdictReport ModelAnalyzer::CheckPropernessCondition() {
  const BoundedUniverse& u = universe();
  std::vector<VerdictReport> parts;

  VerdictReport coproducts;
  coproducts.check = "trivial_fibration_coproducts";
  coproducts.scope = Scope();
  const std::vector<int>& trivial = TrivialFibrationsBetweenCofibrant();
  for (size_t a = 0; a < trivial.size() &&
                     coproducts.outcome != Outcome::kFail;
       ++a) {
    for (size_t b = 0; b < trivial.size(); ++b) {
      const PresheafMap& t1 = u.maps()[trivial[a]].map;
      const PresheafMap& t2 = u.maps()[trivial[b]].map;
      coproducts.AddStat("pairs", 1);
      CoproductResult sources = Coproduct(t1.source(), t2.source());
      CoproductResult targets = Coproduct(t1.target(), t2.target());
      PresheafMap sum = sources.Mediate(Compose(t1, targets.left),
                                        Compose(t2, targets.right));
      if (!TrivialFibration(sum)) {
        Fail(coproducts, {{"first", t1}, {"second", t2}, {"coproduct", sum}},
             "coproduct of trivial fibrations is not a trivial fibration");
        break;
      }
    }
  }
  parts.push_back(std::move(coproducts));

  VerdictReport pushouts;
  pushouts.check = "pushout_weak_equivalences";
  pushouts.scope = Scope();
  std::vector<std::vector<int>> trivial_from(u.objects().size());
  for (size_t m = 0; m < u.maps().size(); ++m) {
    if (TrivialFibration(u.maps()[m].map)) {
      trivial_from[u.maps()[m].source].push_back(static_cast<int>(m));
    }
  }
  for (size_t k = 0; k < generators_.maps.size(); ++k) {
    const PresheafMap& i = generators_.maps[k];
    bool failed = false;
    for (size_t x = 0; x < u.objects().size() && !failed; ++x) {
      ForEachMap(i.source(), u.objects()[x], {}, [&](const PresheafMap& along) {
        PushoutResult before = Pushout(along, i);
        for (int p_index : trivial_from[x]) {
          const PresheafMap& p = u.maps()[p_index].map;
          pushouts.AddStat("induced_maps", 1);
          PushoutResult after = Pushout(Compose(along, p), i);
          PresheafMap induced =
              before.Mediate(Compose(p, after.leg_from_b), after.leg_from_c);
          Truth verdict = WeakEquivalence(induced);
          if (verdict == Truth::kFalse) {
            Fail(pushouts,
                 {{"generator", i}, {"along", along},
                  {"trivial_fibration", p}, {"induced", induced}},
                 "induced map of pushouts along " + generators_.NameOf(k) +
                     " is not a weak equivalence");
            failed = true;
            return false;
          }
          if (verdict == Truth::kInconclusive) {
            MarkInconclusive(pushouts, "weak equivalence undecided");
          }
        }
        return true;
      });
    }
    if (failed) break;
  }
  parts.push_back(std::move(pushouts));
  return Conjoin("check_properness_condition", std::move(parts));
}

VerdictReport ModelAnalyzer::VerifyAxioms(const GeneratingSet& j, WeClass& we) {
  const BoundedUniverse& u = universe();
  const std::vector<UniverseMap>& maps = u.maps();
  LiftingMemo j_memo;
  std::vector<VerdictReport> parts;

  VerdictReport a1;
  a1.check = "A1_small_object_argument";
  a1.scope = Scope();
  a1.notes.push_back(
      "finite presheaves are small relative to any set of maps; satisfied "
      "statically");
  parts.push_back(std::move(a1));

  std::vector<Truth> in_we(maps.size());
  for (size_t m = 0; m < maps.size(); ++m) in_we[m] = we.Contains(maps[m].map);

  VerdictReport two_of_three;
  two_of_three.check = "A2_two_out_of_three";
  two_of_three.scope = Scope();
  for (size_t a = 0; a < maps.size() &&
                     two_of_three.outcome != Outcome::kFail;
       ++a) {
    for (int b : u.MapsFrom(maps[a].target)) {
      two_of_three.AddStat("composable_pairs", 1);
      PresheafMap composite = Compose(maps[a].map, maps[b].map);
      Truth f = in_we[a];
      Truth g = in_we[b];
      Truth gf = we.Contains(composite);
      int known = 0;
      int in = 0;
      for (Truth t : {f, g, gf}) {
        if (t != Truth::kInconclusive) ++known;
        if (t == Truth::kTrue) ++in;
      }
      if (known == 3 && in == 2) {
        Fail(two_of_three,
             {{"first", maps[a].map}, {"second", maps[b].map},
              {"composite", composite}},
             "two of f, g, g o f are weak equivalences but the third is not");
        break;
      }
      if (known < 3) MarkInconclusive(two_of_three, "membership undecided");
    }
  }
  parts.push_back(std::move(two_of_three));

  VerdictReport retracts;
  retracts.check = "A2_retracts";
  retracts.scope = Scope();
  for (size_t a = 0; a < maps.size() && retracts.outcome != Outcome::kFail;
       ++a) {
    if (in_we[a] != Truth::kFalse) continue;
    const PresheafMap& f = maps[a].map;
    for (size_t b = 0; b < maps.size(); ++b) {
      if (in_we[b] != Truth::kTrue) continue;
      const PresheafMap& g = maps[b].map;
      if (!FitsInside(*f.source(), *g.source()) ||
          !FitsInside(*f.target(), *g.target())) {
        continue;
      }
      retracts.AddStat("pairs", 1);
      if (auto witness = IsRetractOf(f, g)) {
        Fail(retracts,
             {{"retract", f},
              {"weak_equivalence", g},
              {"section_dom", witness->section_dom},
              {"retraction_dom", witness->retraction_dom},
              {"section_cod", witness->section_cod},
              {"retraction_cod", witness->retraction_cod}},
             "a retract of a weak equivalence is not a weak equivalence");
        break;
      }
    }
  }
  for (Truth t : in_we) {
    if (t == Truth::kInconclusive) {
      MarkInconclusive(retracts, "membership undecided");
      break;
    }
  }
  parts.push_back(std::move(retracts));

  VerdictReport a3;
  a3.check = "A3_trivial_fibrations";
  a3.scope = Scope();
  for (size_t m = 0; m < maps.size(); ++m) {
    if (!TrivialFibration(maps[m].map)) continue;
    a3.AddStat("trivial_fibrations", 1);
    if (in_we[m] == Truth::kFalse) {
      Fail(a3, {{"map", maps[m].map}},
           "a map with the right lifting property against I is not a weak "
           "equivalence");
      break;
    }
    if (in_we[m] == Truth::kInconclusive) {
      MarkInconclusive(a3, "membership undecided");
    }
  }
  parts.push_back(std::move(a3));

  VerdictReport a4;
  a4.check = "A4_j_cell";
  a4.scope = Scope();
  for (size_t k = 0; k < j.maps.size() && a4.outcome != Outcome::kFail; ++k) {
    const PresheafMap& jk = j.maps[k];
    for (size_t x = 0; x < u.objects().size(); ++x) {
      bool failed = false;
      ForEachMap(jk.source(), u.objects()[x], {},
                 [&](const PresheafMap& along) {
                   a4.AddStat("pushouts", 1);
                   PresheafMap cell = Pushout(jk, along).leg_from_c;
                   Truth verdict = And(we.Contains(cell), Cofibration(cell));
                   if (verdict == Truth::kFalse) {
                     Fail(a4, {{"j_map", jk}, {"along", along}, {"cell", cell}},
                          "pushout of " + j.NameOf(k) +
                              " is not a trivial cofibration");
                     failed = true;
                     return false;
                   }
                   if (verdict == Truth::kInconclusive) {
                     MarkInconclusive(a4, "membership undecided");
                   }
                   return true;
                 });
      if (failed) break;
    }
  }
  parts.push_back(std::move(a4));

  VerdictReport a5;
  a5.check = "A5_first_disjunct";
  a5.scope = Scope();
  a5.notes.push_back("second disjunct not evaluated");
  for (size_t m = 0; m < maps.size(); ++m) {
    if (in_we[m] == Truth::kFalse) continue;
    if (!InInj(maps[m].map, j, &j_memo)) continue;
    a5.AddStat("j_injective_weak_equivalences", 1);
    if (in_we[m] == Truth::kInconclusive) {
      MarkInconclusive(a5, "membership undecided");
      continue;
    }
    if (!TrivialFibration(maps[m].map)) {
      Fail(a5, {{"map", maps[m].map}},
           "a J-injective weak equivalence is not I-injective");
      break;
    }
  }
  parts.push_back(std::move(a5));

  VerdictReport report = Conjoin("verify_axioms", std::move(parts));
  report.notes.push_back("weak equivalences: " + we.name());
  return report;
}

MapClassification ModelAnalyzer::Classify(const PresheafMap& f) {
  MapClassification result;
  result.cofibration = Cofibration(f);
  result.fibration = Fibration(f);
  result.weak_equivalence = WeakEquivalence(f);
  result.trivial_cofibration = And(result.cofibration, result.weak_equivalence);
  result.trivial_fibration = FromBool(TrivialFibration(f));
  result.pure = IsPure(f).outcome;
  try {
    result.strong_deformation_retract =
        engine_.IsStrongDeformationRetract(f).verdict;
  } catch (const FuelExhausted& error) {
    result.strong_deformation_retract = Truth::kInconclusive;
    result.notes.push_back(error.what());
  }
  if (result.cofibration == Truth::kTrue &&
      result.trivial_cofibration != Truth::kInconclusive &&
      result.strong_deformation_retract != Truth::kInconclusive &&
      result.trivial_cofibration != result.strong_deformation_retract) {
    result.consistent = false;
    result.notes.push_back(
        "engine inconsistency: trivial cofibration and strong deformation "
        "retract verdicts differ");
  }
  return result;
}

std::vector<WeEntry> ModelAnalyzer::EnumerateWe() {
  const BoundedUniverse& u = universe();
  std::vector<WeEntry> entries;
  entries.reserve(u.maps().size());
  for (size_t m = 0; m < u.maps().size(); ++m) {
    entries.push_back({static_cast<int>(m), WeakEquivalence(u.maps()[m].map)});
  }
  return entries;
}

}  // namespace minmodel
