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

#include <gtest/gtest.h>

#include "builders.h"
#include "conversions.h"
#include "minmodel/analyzer.h"
#include "minmodel/colimits.h"
#include "minmodel/hom_search.h"
#include "minmodel/morphism_properties.h"
#include "set_oracle.h"

namespace minmodel {
namespace {

using testing::Set;
using testing::SetMap;

AnalyzerConfig AtBound(const BasePtr& base, int size) {
  AnalyzerConfig config;
  config.bound = Bound::Uniform(*base, size);
  return config;
}

ModelAnalyzer Sets(const GeneratingSet& set, int bound) {
  return ModelAnalyzer(testing::FinSetBase(), set,
                       AtBound(testing::FinSetBase(), bound));
}

GeneratingSet EmptySet() { return {"none", {}, {}}; }

const NamedMap* Role(const VerdictReport& report, const std::string& role) {
  for (const auto& entry : report.counterexample) {
    if (entry.role == role) return &entry;
  }
  return nullptr;
}

const VerdictReport* Part(const VerdictReport& report,
                          const std::string& check) {
  for (const auto& part : report.parts) {
    if (part.check == check) return &part;
  }
  return nullptr;
}

TEST(ConjoinTest, FirstFailureWins) {
  VerdictReport pass{"a"};
  VerdictReport open{"b", Outcome::kInconclusive};
  VerdictReport fail{"c", Outcome::kFail};
  fail.counterexample.push_back({"map", Identity(Set(1))});
  VerdictReport fail2{"d", Outcome::kFail};
  EXPECT_EQ(Conjoin("x", {pass, pass}).outcome, Outcome::kPass);
  EXPECT_EQ(Conjoin("x", {pass, open}).outcome, Outcome::kInconclusive);
  VerdictReport both = Conjoin("x", {open, fail, fail2});
  EXPECT_EQ(both.outcome, Outcome::kFail);
  ASSERT_EQ(both.counterexample.size(), 1u);
  EXPECT_EQ(both.parts.size(), 3u);
  EXPECT_EQ(Conjoin("x", {}).outcome, Outcome::kPass);
}

TEST(JSetTest, FinSetAndGraphGenerators) {
  ModelAnalyzer i1 = Sets(testing::SetsI1(), 2);
  ASSERT_EQ(i1.JSet().maps.size(), 1u);
  EXPECT_EQ(i1.JSet().maps[0].source()->size(0), 1);
  EXPECT_EQ(i1.JSet().maps[0].target()->size(0), 2);

  ModelAnalyzer i2 = Sets(testing::SetsI2(), 2);
  ASSERT_EQ(i2.JSet().maps.size(), 2u);
  EXPECT_TRUE(IsIsomorphism(i2.JSet().maps[0]));
  EXPECT_EQ(i2.JSet().maps[0].target()->size(0), 1);

  ModelAnalyzer ig(testing::GraphBase(), testing::GraphsIG(),
                   AtBound(testing::GraphBase(), 1));
  const GeneratingSet& j = ig.JSet();
  ASSERT_EQ(j.maps.size(), 2u);
  EXPECT_EQ(j.maps[0].target()->size(0), 2);
  EXPECT_EQ(j.maps[0].target()->size(1), 0);
  EXPECT_EQ(j.maps[1].target()->size(0), 2);
  EXPECT_EQ(j.maps[1].target()->size(1), 2);
  EXPECT_EQ(j.label, "J_IG");
}

TEST(WeakEquivalenceTest, IdentitiesPass) {
  ModelAnalyzer analyzer(testing::GraphBase(), testing::GraphsIG(),
                         AtBound(testing::GraphBase(), 2));
  for (const auto& object : analyzer.universe().objects()) {
    EXPECT_EQ(analyzer.IsWeakEquivalence(Identity(object)).outcome,
              Outcome::kPass);
  }
}

TEST(WeakEquivalenceTest, MatchesSetOracle) {
  for (const GeneratingSet& set : {testing::SetsI1(), testing::SetsI2()}) {
    std::vector<testing::sets::Fn> fns;
    for (const auto& i : set.maps) fns.push_back(testing::AsFn(i));
    ModelAnalyzer analyzer = Sets(set, 3);
    for (const auto& entry : analyzer.universe().maps()) {
      bool expected =
          testing::sets::WeakEquivalence(testing::AsFn(entry.map), fns);
      VerdictReport report = analyzer.IsWeakEquivalence(entry.map);
      EXPECT_EQ(report.outcome, expected ? Outcome::kPass : Outcome::kFail);
      if (!expected) EXPECT_NE(Role(report, "square_left"), nullptr);
    }
  }
}

TEST(WeakEquivalenceTest, I1FormulaAndI2Bijections) {
  ModelAnalyzer i1 = Sets(testing::SetsI1(), 3);
  ModelAnalyzer i2 = Sets(testing::SetsI2(), 3);
  for (const auto& entry : i1.universe().maps()) {
    const int x = entry.map.source()->size(0);
    const int y = entry.map.target()->size(0);
    EXPECT_EQ(i1.WeakEquivalence(entry.map) == Truth::kTrue, x > 0 || y == 0);
    EXPECT_EQ(i2.WeakEquivalence(entry.map) == Truth::kTrue,
              IsIsomorphism(entry.map));
  }
}

TEST(PurityTest, SplitMonosArePure) {
  ModelAnalyzer analyzer = Sets(testing::SetsI1(), 3);
  for (const auto& entry : analyzer.universe().maps()) {
    if (!FindRetraction(entry.map)) continue;
    EXPECT_EQ(analyzer.IsPure(entry.map).outcome, Outcome::kPass);
  }
}

TEST(PurityTest, SurjectionsFromNonemptySetsArePure) {
  ModelAnalyzer analyzer = Sets(testing::SetsI1(), 3);
  for (const auto& entry : analyzer.universe().maps()) {
    if (entry.map.source()->size(0) == 0) continue;
    if (!testing::sets::Surjective(testing::AsFn(entry.map))) continue;
    EXPECT_EQ(analyzer.IsPure(entry.map).outcome, Outcome::kPass);
  }
}

TEST(PurityTest, EmptyInclusionIsImpure) {
  ModelAnalyzer analyzer = Sets(testing::SetsI1(), 3);
  PresheafMap e0 = SetMap(Set(0), Set(1), {});
  VerdictReport report = analyzer.IsPure(e0);
  ASSERT_EQ(report.outcome, Outcome::kFail);
  ASSERT_NE(Role(report, "cofibration"), nullptr);
  EXPECT_EQ(Role(report, "cofibration")->map, e0);
  EXPECT_EQ(Role(report, "top")->map.source()->size(0), 0);
  EXPECT_TRUE(IsIsomorphism(Role(report, "bottom")->map));
  EXPECT_NE(report.scope.find("within bound"), std::string::npos);
}

TEST(CheckAppropriateTest, FinSetPasses) {
  for (const GeneratingSet& set : {testing::SetsI1(), testing::SetsI2()}) {
    ModelAnalyzer analyzer = Sets(set, 3);
    VerdictReport report = analyzer.CheckAppropriate();
    EXPECT_EQ(report.outcome, Outcome::kPass) << set.label;
    EXPECT_FALSE(report.notes.empty());
  }
}

TEST(CheckAppropriateTest, EmptyGeneratingSetIsVacuous) {
  ModelAnalyzer analyzer = Sets(EmptySet(), 2);
  EXPECT_EQ(analyzer.CheckAppropriate().outcome, Outcome::kPass);
  EXPECT_EQ(analyzer.CheckPropernessCondition().outcome, Outcome::kPass);
}

TEST(CheckMainTest, FinSetPasses) {
  for (const GeneratingSet& set : {testing::SetsI1(), testing::SetsI2()}) {
    ModelAnalyzer analyzer = Sets(set, 3);
    VerdictReport report = analyzer.CheckMainCondition();
    EXPECT_EQ(report.outcome, Outcome::kPass) << set.label;
    EXPECT_NE(Part(report, "check_appropriate"), nullptr);
    EXPECT_NE(Part(report, "j_cell_lifting"), nullptr);
  }
}

TEST(CheckMainTest, GraphsFailAppropriateness) {
  ModelAnalyzer analyzer(testing::GraphBase(), testing::GraphsIG(),
                         AnalyzerConfig{Bound{{2, 2}}});
  VerdictReport report = analyzer.CheckMainCondition();
  ASSERT_EQ(report.outcome, Outcome::kFail);
  EXPECT_EQ(Part(report, "check_appropriate")->outcome, Outcome::kFail);
  EXPECT_EQ(Part(report, "j_cell_lifting")->outcome, Outcome::kPass);
  const NamedMap* t = Role(report, "trivial_fibration");
  ASSERT_NE(t, nullptr);
  EXPECT_TRUE(analyzer.TrivialFibration(t->map));
}

TEST(CheckMainTest, FuelStarvedChecksAreInconclusive) {
  AnalyzerConfig config = AtBound(testing::FinSetBase(), 2);
  config.fuel = 0;
  ModelAnalyzer analyzer(testing::FinSetBase(), testing::SetsI2(), config);
  EXPECT_EQ(analyzer.CheckMainCondition().outcome, Outcome::kInconclusive);
}

TEST(CheckPropernessTest, FinSetPassesAtBoundTwo) {
  for (const GeneratingSet& set : {testing::SetsI1(), testing::SetsI2()}) {
    ModelAnalyzer analyzer = Sets(set, 2);
    VerdictReport report = analyzer.CheckPropernessCondition();
    EXPECT_EQ(report.outcome, Outcome::kPass) << set.label;
    EXPECT_EQ(report.parts.size(), 2u);
  }
}

TEST(VerifyAxiomsTest, FinSetPasses) {
  for (const GeneratingSet& set : {testing::SetsI1(), testing::SetsI2()}) {
    ModelAnalyzer analyzer = Sets(set, 3);
    VerdictReport report =
        analyzer.VerifyAxioms(analyzer.JSet(), analyzer.WeakEquivalences());
    EXPECT_EQ(report.outcome, Outcome::kPass) << set.label;
    for (const auto& part : report.parts) {
      EXPECT_EQ(part.outcome, Outcome::kPass) << part.check;
    }
    EXPECT_EQ(report.parts.size(), 6u);
  }
}

TEST(VerifyAxiomsTest, AllMapsAsWeakEquivalencesBreaksFirstDisjunct) {
  ModelAnalyzer analyzer = Sets(testing::SetsI1(), 3);
  WeClass everything("all maps",
                     [](const PresheafMap&) { return Truth::kTrue; });
  VerdictReport report = analyzer.VerifyAxioms(analyzer.JSet(), everything);
  ASSERT_EQ(report.outcome, Outcome::kFail);
  const VerdictReport* a5 = Part(report, "A5_first_disjunct");
  ASSERT_NE(a5, nullptr);
  ASSERT_EQ(a5->outcome, Outcome::kFail);
  const NamedMap* map = Role(*a5, "map");
  ASSERT_NE(map, nullptr);
  EXPECT_TRUE(InInj(map->map, analyzer.JSet()));
  EXPECT_FALSE(InInj(map->map, testing::SetsI1()));
  EXPECT_FALSE(testing::sets::Surjective(testing::AsFn(map->map)));
}

TEST(ClassifyTest, IdentityIsEverything) {
  ModelAnalyzer analyzer = Sets(testing::SetsI1(), 2);
  MapClassification c = analyzer.Classify(Identity(Set(2)));
  EXPECT_EQ(c.cofibration, Truth::kTrue);
  EXPECT_EQ(c.fibration, Truth::kTrue);
  EXPECT_EQ(c.weak_equivalence, Truth::kTrue);
  EXPECT_EQ(c.trivial_cofibration, Truth::kTrue);
  EXPECT_EQ(c.trivial_fibration, Truth::kTrue);
  EXPECT_EQ(c.pure, Outcome::kPass);
  EXPECT_EQ(c.strong_deformation_retract, Truth::kTrue);
  EXPECT_TRUE(c.consistent);
}

TEST(ClassifyTest, CoproductInclusionOverI1) {
  ModelAnalyzer analyzer = Sets(testing::SetsI1(), 3);
  MapClassification c = analyzer.Classify(SetMap(Set(1), Set(2), {0}));
  EXPECT_EQ(c.cofibration, Truth::kTrue);
  EXPECT_EQ(c.weak_equivalence, Truth::kTrue);
  EXPECT_EQ(c.trivial_cofibration, Truth::kTrue);
  EXPECT_EQ(c.strong_deformation_retract, Truth::kTrue);
  EXPECT_EQ(c.trivial_fibration, Truth::kFalse);
  EXPECT_TRUE(c.consistent);
}

TEST(ClassifyTest, EmptyInclusionOverI1) {
  ModelAnalyzer analyzer = Sets(testing::SetsI1(), 3);
  MapClassification c = analyzer.Classify(SetMap(Set(0), Set(1), {}));
  EXPECT_EQ(c.cofibration, Truth::kTrue);
  EXPECT_EQ(c.weak_equivalence, Truth::kFalse);
  EXPECT_EQ(c.pure, Outcome::kFail);
}

TEST(EnumerateWeTest, CoversUniverseInOrder) {
  ModelAnalyzer analyzer = Sets(testing::SetsI1(), 3);
  std::vector<WeEntry> entries = analyzer.EnumerateWe();
  ASSERT_EQ(entries.size(), analyzer.universe().maps().size());
  int passing = 0;
  for (size_t k = 0; k < entries.size(); ++k) {
    EXPECT_EQ(entries[k].map_index, static_cast<int>(k));
    if (entries[k].verdict == Truth::kTrue) ++passing;
  }
  EXPECT_EQ(passing, 57);
}

TEST(CrossCheckTest, FinSetHasNoDisagreements) {
  AnalyzerConfig config = AtBound(testing::FinSetBase(), 3);
  config.cross_check = true;
  for (const GeneratingSet& set : {testing::SetsI1(), testing::SetsI2()}) {
    ModelAnalyzer analyzer(testing::FinSetBase(), set, config);
    EXPECT_EQ(analyzer.CheckMainCondition().outcome, Outcome::kPass);
    EXPECT_TRUE(analyzer.CrossCheckDisagreements().empty());
  }
}

}  // namespace
}  // namespace minmodel
