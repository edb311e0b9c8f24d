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
#include "minmodel/colimits.h"
#include "minmodel/error.h"
#include "minmodel/factorization.h"
#include "minmodel/hom_search.h"
#include "minmodel/homotopy.h"
#include "minmodel/morphism_properties.h"
#include "minmodel/universe.h"
#include "set_oracle.h"

namespace minmodel {
namespace {

using testing::Graph;
using testing::GraphBase;
using testing::GraphMap;
using testing::Set;
using testing::SetMap;

GeneratingSet JFor(HomotopyEngine& engine) {
  GeneratingSet j;
  j.label = "J";
  for (const auto& i : engine.generating_set().maps) {
    j.maps.push_back(engine.Cylinder(i)->incl0);
  }
  return j;
}

const BoundedUniverse& SmallGraphs() {
  static const BoundedUniverse* universe = new BoundedUniverse(
      BoundedUniverse::Enumerate(GraphBase(), Bound{{2, 1}}));
  return *universe;
}

void ExpectCylinderLaws(const CylinderObject& cylinder,
                        const GeneratingSet& set) {
  const PresheafPtr& y = cylinder.over.target();
  EXPECT_EQ(Compose(cylinder.incl0, cylinder.collapse), Identity(y));
  EXPECT_EQ(Compose(cylinder.incl1, cylinder.collapse), Identity(y));
  EXPECT_EQ(Compose(cylinder.over, cylinder.incl0),
            Compose(cylinder.over, cylinder.incl1));
  EXPECT_TRUE(InInj(cylinder.collapse, set));
  EXPECT_TRUE(SamePresheaf(cylinder.provenance.left.target(), cylinder.apex));
  ReplayResult replay = Replay(cylinder.provenance.log, cylinder.glued);
  EXPECT_EQ(replay.left, cylinder.provenance.left);
}

TEST(CylinderTest, EmptyRelativeCylinderOverI1IsCoproduct) {
  HomotopyEngine engine(testing::SetsI1(), 1024);
  CylinderPtr cylinder = engine.Cylinder(SetMap(Set(0), Set(2), {}));
  EXPECT_EQ(cylinder->apex->size(0), 4);
  EXPECT_EQ(cylinder->provenance.fuel_used, 0);
  EXPECT_EQ(cylinder->incl0.component(0), (std::vector<int>{0, 1}));
  EXPECT_EQ(cylinder->incl1.component(0), (std::vector<int>{2, 3}));
  EXPECT_EQ(cylinder->collapse.component(0), (std::vector<int>{0, 1, 0, 1}));
}

TEST(CylinderTest, PointCylinderOverI2IsPoint) {
  HomotopyEngine engine(testing::SetsI2(), 1024);
  CylinderPtr cylinder = engine.Cylinder(testing::SetsI2().maps[0]);
  EXPECT_EQ(cylinder->apex->size(0), 1);
  EXPECT_EQ(cylinder->provenance.fuel_used, 1);
}

TEST(CylinderTest, BoundaryCylinderIsParallelPair) {
  HomotopyEngine engine(testing::GraphsIG(), 1024);
  CylinderPtr cylinder = engine.Cylinder(testing::GraphsIG().maps[1]);
  EXPECT_EQ(cylinder->apex->size(0), 2);
  EXPECT_EQ(cylinder->apex->size(1), 2);
  EXPECT_EQ(cylinder->provenance.fuel_used, 0);
  EXPECT_TRUE(IsIsomorphism(cylinder->provenance.left));
}

TEST(CylinderTest, LawsHoldOnAllSmallMaps) {
  for (const GeneratingSet& set : {testing::SetsI1(), testing::SetsI2()}) {
    HomotopyEngine engine(set, 1024);
    BoundedUniverse universe = BoundedUniverse::Enumerate(
        testing::FinSetBase(), Bound::Uniform(*testing::FinSetBase(), 3));
    for (const auto& entry : universe.maps()) {
      ExpectCylinderLaws(*engine.Cylinder(entry.map), set);
    }
  }
  HomotopyEngine engine(testing::GraphsIG(), 1024);
  for (const auto& entry : SmallGraphs().maps()) {
    ExpectCylinderLaws(*engine.Cylinder(entry.map), testing::GraphsIG());
  }
}

TEST(CylinderTest, MatchesSetOracleCylinderSize) {
  for (const GeneratingSet& set : {testing::SetsI1(), testing::SetsI2()}) {
    std::vector<testing::sets::Fn> fns;
    for (const auto& i : set.maps) fns.push_back(testing::AsFn(i));
    HomotopyEngine engine(set, 1024);
    for (int x = 0; x <= 2; ++x) {
      for (int y = 0; y <= 3; ++y) {
        for (const auto& fn : testing::sets::AllFns(x, y)) {
          if (!testing::sets::Injective(fn)) continue;
          EXPECT_EQ(engine.Cylinder(testing::FromFn(fn))->apex->size(0),
                    testing::sets::FindCylinder(fn, fns).size);
        }
      }
    }
  }
}

TEST(HomotopicTest, ReflexiveWithCollapseWitness) {
  HomotopyEngine engine(testing::SetsI1(), 1024);
  PresheafMap i = SetMap(Set(1), Set(2), {0});
  PresheafMap f = SetMap(Set(2), Set(3), {1, 2});
  auto witness = engine.Homotopic(f, f, i);
  ASSERT_TRUE(witness.has_value());
  EXPECT_EQ(witness->homotopy, Compose(witness->cylinder->collapse, f));
}

TEST(HomotopicTest, AbsoluteRelationIsTotalOverI1) {
  HomotopyEngine engine(testing::SetsI1(), 1024);
  for (int y = 1; y <= 2; ++y) {
    for (int z = 1; z <= 3; ++z) {
      for (const auto& f0 : HomEnumerate(Set(y), Set(z))) {
        for (const auto& f1 : HomEnumerate(Set(y), Set(z))) {
          auto witness = engine.HomotopicAbsolute(f0, f1);
          ASSERT_TRUE(witness.has_value());
          EXPECT_EQ(Compose(witness->cylinder->incl0, witness->homotopy), f0);
          EXPECT_EQ(Compose(witness->cylinder->incl1, witness->homotopy), f1);
        }
      }
    }
  }
}

TEST(HomotopicTest, AbsoluteRelationIsEqualityOverI2) {
  HomotopyEngine engine(testing::SetsI2(), 1024);
  for (const auto& f0 : HomEnumerate(Set(1), Set(2))) {
    for (const auto& f1 : HomEnumerate(Set(1), Set(2))) {
      EXPECT_EQ(engine.HomotopicAbsolute(f0, f1).has_value(), f0 == f1);
    }
  }
}

TEST(HomotopicTest, RejectsPairsDisagreeingOnRelativePart) {
  HomotopyEngine engine(testing::SetsI1(), 1024);
  try {
    engine.Homotopic(SetMap(Set(2), Set(2), {0, 1}),
                     SetMap(Set(2), Set(2), {1, 1}),
                     SetMap(Set(1), Set(2), {0}));
    ADD_FAILURE() << "no error";
  } catch (const Error& error) {
    EXPECT_EQ(error.kind(), ErrorKind::kIncompatibleOnRelativePart);
  }
}

// Relative homotopy against the set oracle for every mono i between small
// sets and every compatible pair.
TEST(HomotopicTest, MatchesSetOracle) {
  for (const GeneratingSet& set : {testing::SetsI1(), testing::SetsI2()}) {
    std::vector<testing::sets::Fn> fns;
    for (const auto& i : set.maps) fns.push_back(testing::AsFn(i));
    HomotopyEngine engine(set, 1024);
    for (int x = 0; x <= 2; ++x) {
      for (int y = 0; y <= 2; ++y) {
        for (const auto& i : testing::sets::AllFns(x, y)) {
          if (!testing::sets::Injective(i)) continue;
          testing::sets::Cylinder cylinder =
              testing::sets::FindCylinder(i, fns);
          for (int z = 0; z <= 2; ++z) {
            for (const auto& f0 : testing::sets::AllFns(y, z)) {
              for (const auto& f1 : testing::sets::AllFns(y, z)) {
                if (testing::sets::Then(i, f0).images !=
                    testing::sets::Then(i, f1).images) {
                  continue;
                }
                EXPECT_EQ(engine.IsHomotopic(testing::FromFn(f0),
                                             testing::FromFn(f1),
                                             testing::FromFn(i)),
                          testing::sets::Homotopic(f0, f1, cylinder));
              }
            }
          }
        }
      }
    }
  }
}

TEST(HomotopicTest, SymmetricAndPostCompositionClosedOnGraphs) {
  HomotopyEngine engine(testing::GraphsIG(), 1024);
  const BoundedUniverse& universe = SmallGraphs();
  const auto& maps = universe.maps();
  for (const auto& i : testing::GraphsIG().maps) {
    // Relative to each generator, over graphs containing its codomain.
    for (size_t t = 0; t < universe.objects().size(); ++t) {
      std::vector<PresheafMap> parallel =
          HomEnumerate(i.target(), universe.objects()[t]);
      for (const auto& f0 : parallel) {
        for (const auto& f1 : parallel) {
          if (!(Compose(i, f0) == Compose(i, f1))) continue;
          bool forward = engine.IsHomotopic(f0, f1, i);
          EXPECT_EQ(forward, engine.IsHomotopic(f1, f0, i));
          if (!forward) continue;
          for (int g : universe.MapsFrom(static_cast<int>(t))) {
            EXPECT_TRUE(engine.IsHomotopic(Compose(f0, maps[g].map),
                                           Compose(f1, maps[g].map), i));
          }
        }
      }
    }
  }
}

TEST(HomotopicTest, ReverseOrderCylindersGiveSameVerdicts) {
  FactorOptions reverse;
  reverse.reverse_order = true;
  HomotopyEngine forward(testing::SetsI2(), 1024);
  HomotopyEngine backward(testing::SetsI2(), 1024, reverse);
  BoundedUniverse universe = BoundedUniverse::Enumerate(
      testing::FinSetBase(), Bound::Uniform(*testing::FinSetBase(), 2));
  for (const auto& i : universe.maps()) {
    for (const auto& f0 : HomEnumerate(i.map.target(), Set(2))) {
      for (const auto& f1 : HomEnumerate(i.map.target(), Set(2))) {
        if (!(Compose(i.map, f0) == Compose(i.map, f1))) continue;
        EXPECT_EQ(forward.IsHomotopic(f0, f1, i.map),
                  backward.IsHomotopic(f0, f1, i.map));
      }
    }
  }
}

TEST(DeformationRetractTest, IdentityIsStrongDeformationRetract) {
  HomotopyEngine engine(testing::SetsI1(), 1024);
  DeformationRetractResult result =
      engine.IsStrongDeformationRetract(Identity(Set(2)));
  EXPECT_EQ(result.verdict, Truth::kTrue);
  ASSERT_TRUE(result.retraction.has_value());
  EXPECT_EQ(*result.retraction, Identity(Set(2)));
}

TEST(DeformationRetractTest, CoproductInclusionIsStrongOverI1) {
  HomotopyEngine engine(testing::SetsI1(), 1024);
  PresheafMap iota0 = SetMap(Set(1), Set(2), {0});
  DeformationRetractResult result = engine.IsStrongDeformationRetract(iota0);
  EXPECT_EQ(result.verdict, Truth::kTrue);
  ASSERT_TRUE(result.retraction.has_value());
  EXPECT_EQ(result.retraction->component(0), (std::vector<int>{0, 0}));
  ASSERT_TRUE(result.homotopy.has_value());
  const HomotopyWitness& h = *result.homotopy;
  EXPECT_EQ(Compose(h.cylinder->incl0, h.homotopy),
            Compose(*result.retraction, iota0));
  EXPECT_EQ(Compose(h.cylinder->incl1, h.homotopy), Identity(Set(2)));
  EXPECT_EQ(engine.IsDeformationRetract(iota0).verdict, Truth::kTrue);
}

TEST(DeformationRetractTest, EmptyInclusionHasNoRetraction) {
  HomotopyEngine engine(testing::SetsI1(), 1024);
  DeformationRetractResult result =
      engine.IsDeformationRetract(SetMap(Set(0), Set(1), {}));
  EXPECT_EQ(result.verdict, Truth::kFalse);
  EXPECT_EQ(result.retractions_tried, 0);
}

TEST(PathObjectTest, PointPathObjectOverJ1IsPoint) {
  HomotopyEngine engine(testing::SetsI1(), 1024);
  GeneratingSet j = JFor(engine);
  ASSERT_EQ(j.maps.size(), 1u);
  EXPECT_EQ(j.maps[0].target()->size(0), 2);
  PathObject path = BuildPathObject(Set(1), j, 1024);
  EXPECT_EQ(path.apex->size(0), 1);
  EXPECT_EQ(path.provenance.fuel_used, 0);
  EXPECT_EQ(Compose(path.into, path.proj0), Identity(Set(1)));
  EXPECT_EQ(Compose(path.into, path.proj1), Identity(Set(1)));
}

TEST(PathObjectTest, DegenerateObjects) {
  HomotopyEngine engine(testing::GraphsIG(), 1024);
  GeneratingSet j = JFor(engine);
  PathObject terminal = BuildPathObject(Terminal(GraphBase()), j, 1024);
  EXPECT_EQ(terminal.apex->total_size(), 2);
  PathObject empty = BuildPathObject(Initial(GraphBase()), j, 1024);
  EXPECT_EQ(empty.apex->total_size(), 0);
  auto witness = RightHomotopic(Identity(Initial(GraphBase())),
                                Identity(Initial(GraphBase())), std::nullopt,
                                empty);
  EXPECT_TRUE(witness.has_value());
}

TEST(PathObjectTest, LawsHoldOverSmallSets) {
  for (const GeneratingSet& set : {testing::SetsI1(), testing::SetsI2()}) {
    HomotopyEngine engine(set, 1024);
    GeneratingSet j = JFor(engine);
    for (int n = 0; n <= 3; ++n) {
      PathObject path = BuildPathObject(Set(n), j, 1024);
      EXPECT_EQ(Compose(path.into, path.proj0), Identity(Set(n)));
      EXPECT_EQ(Compose(path.into, path.proj1), Identity(Set(n)));
      EXPECT_TRUE(InInj(path.projections, j));
    }
  }
}

TEST(RightHomotopicTest, EqualMapsUseInto) {
  HomotopyEngine engine(testing::SetsI1(), 1024);
  PathObject path = BuildPathObject(Set(2), JFor(engine), 1024);
  PresheafMap f = SetMap(Set(1), Set(2), {1});
  auto witness = RightHomotopic(f, f, std::nullopt, path);
  ASSERT_TRUE(witness.has_value());
  EXPECT_EQ(Compose(*witness, path.proj0), f);
  EXPECT_EQ(Compose(*witness, path.proj1), f);
}

TEST(RightHomotopicTest, AgreesWithLeftOnSmallSets) {
  for (const GeneratingSet& set : {testing::SetsI1(), testing::SetsI2()}) {
    HomotopyEngine engine(set, 1024);
    GeneratingSet j = JFor(engine);
    for (int z = 1; z <= 2; ++z) {
      PathObject path = BuildPathObject(Set(z), j, 1024);
      for (int y = 0; y <= 2; ++y) {
        for (const auto& f0 : HomEnumerate(Set(y), Set(z))) {
          for (const auto& f1 : HomEnumerate(Set(y), Set(z))) {
            EXPECT_EQ(engine.HomotopicAbsolute(f0, f1).has_value(),
                      RightHomotopic(f0, f1, std::nullopt, path).has_value());
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace minmodel
