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
#include "graph_oracle.h"
#include "minmodel/colimits.h"
#include "minmodel/error.h"
#include "minmodel/factorization.h"
#include "minmodel/hom_search.h"
#include "minmodel/homotopy.h"
#include "minmodel/lifting.h"
#include "minmodel/universe.h"
#include "set_oracle.h"

namespace minmodel {
namespace {

using testing::Graph;
using testing::GraphBase;
using testing::GraphMap;
using testing::Set;
using testing::SetMap;

std::vector<PresheafMap> SetMapsUpTo(int size) {
  BoundedUniverse universe = BoundedUniverse::Enumerate(
      testing::FinSetBase(), Bound::Uniform(*testing::FinSetBase(), size));
  std::vector<PresheafMap> out;
  for (const auto& entry : universe.maps()) out.push_back(entry.map);
  return out;
}

const BoundedUniverse& SmallGraphs() {
  static const BoundedUniverse* universe = new BoundedUniverse(
      BoundedUniverse::Enumerate(GraphBase(), Bound{{2, 2}}));
  return *universe;
}

TEST(LiftingTest, IdentityLeftLiftsByTop) {
  PresheafMap right = SetMap(Set(3), Set(2), {0, 1, 1});
  for (const auto& top : HomEnumerate(Set(2), Set(3))) {
    LiftingProblem problem{Identity(Set(2)), right, top, Compose(top, right)};
    auto lift = SolveLifting(problem);
    ASSERT_TRUE(lift.has_value());
    EXPECT_EQ(*lift, top);
  }
}

TEST(LiftingTest, PointLiftsAgainstCollapseWithFirstChoice) {
  LiftingProblem problem{SetMap(Set(0), Set(1), {}),
                         SetMap(Set(2), Set(1), {0, 0}),
                         SetMap(Set(0), Set(2), {}), Identity(Set(1))};
  auto lift = SolveLifting(problem);
  ASSERT_TRUE(lift.has_value());
  EXPECT_EQ(lift->component(0), (std::vector<int>{0}));
}

TEST(LiftingTest, CollapseDoesNotLiftAgainstFold) {
  CoproductResult two = Coproduct(Set(1), Set(1));
  PresheafMap fold = two.Mediate(Identity(Set(1)), Identity(Set(1)));
  LiftingProblem problem{SetMap(Set(2), Set(1), {0, 0}), fold,
                         SetMap(Set(2), two.apex, {0, 1}), Identity(Set(1))};
  EXPECT_FALSE(SolveLifting(problem).has_value());
}

TEST(LiftingTest, RejectsNonCommutingSquare) {
  LiftingProblem problem{SetMap(Set(1), Set(1), {0}),
                         SetMap(Set(2), Set(2), {0, 1}),
                         SetMap(Set(1), Set(2), {0}),
                         SetMap(Set(1), Set(2), {1})};
  try {
    SolveLifting(problem);
    ADD_FAILURE() << "no error";
  } catch (const Error& error) {
    EXPECT_EQ(error.kind(), ErrorKind::kNonCommutingSquare);
  }
}

// Brute force over every map B -> C against the solver, on all squares
// between small graph maps whose left map is mono.
TEST(LiftingTest, SolverIsCompleteOnGraphSquares) {
  const auto& maps = SmallGraphs().maps();
  int squares = 0;
  for (const auto& left : maps) {
    if (left.map.source()->total_size() > 2) continue;
    for (size_t r = 0; r < maps.size(); r += 7) {
      const PresheafMap& right = maps[r].map;
      ForEachSquare(left.map, right, [&](const LiftingProblem& problem) {
        ++squares;
        bool exists = false;
        for (const auto& h : HomEnumerate(left.map.target(), right.source())) {
          if (Compose(left.map, h) == problem.top &&
              Compose(h, right) == problem.bottom) {
            exists = true;
            break;
          }
        }
        auto lift = SolveLifting(problem);
        EXPECT_EQ(lift.has_value(), exists);
        if (lift) {
          EXPECT_EQ(Compose(left.map, *lift), problem.top);
          EXPECT_EQ(Compose(*lift, right), problem.bottom);
        }
        return true;
      });
    }
  }
  EXPECT_GT(squares, 1000);
}

TEST(LiftingTest, SquaresAreEnumeratedOncePerPair) {
  PresheafMap left = SetMap(Set(1), Set(2), {0});
  PresheafMap right = SetMap(Set(3), Set(2), {0, 1, 1});
  int expected = 0;
  for (const auto& top : HomEnumerate(Set(1), Set(3))) {
    for (const auto& bottom : HomEnumerate(Set(2), Set(2))) {
      if (Compose(top, right) == Compose(left, bottom)) ++expected;
    }
  }
  int seen = 0;
  ForEachSquare(left, right, [&](const LiftingProblem& problem) {
    EXPECT_NO_THROW(ValidateSquare(problem));
    ++seen;
    return true;
  });
  EXPECT_EQ(seen, expected);
}

TEST(LiftingTest, RlpAgainstI1IsSurjectivity) {
  GeneratingSet i1 = testing::SetsI1();
  for (const auto& f : SetMapsUpTo(3)) {
    EXPECT_EQ(HasRlp(f, i1.maps), testing::sets::Surjective(testing::AsFn(f)));
  }
}

TEST(LiftingTest, RlpAgainstI2IsBijectivity) {
  GeneratingSet i2 = testing::SetsI2();
  for (const auto& f : SetMapsUpTo(3)) {
    auto fn = testing::AsFn(f);
    EXPECT_EQ(HasRlp(f, i2.maps),
              testing::sets::Surjective(fn) && testing::sets::Injective(fn));
  }
}

TEST(LiftingTest, IdentitiesHaveEveryRlp) {
  for (const auto& object : SmallGraphs().objects()) {
    EXPECT_TRUE(HasRlp(Identity(object), testing::GraphsIG().maps));
  }
}

TEST(LiftingTest, RlpIsMonotoneInTheSet) {
  GeneratingSet ig = testing::GraphsIG();
  for (const auto& entry : SmallGraphs().maps()) {
    if (!HasRlp(entry.map, ig.maps)) continue;
    EXPECT_TRUE(HasRlp(entry.map, {ig.maps[0]}));
    EXPECT_TRUE(HasRlp(entry.map, {ig.maps[1]}));
  }
}

TEST(LiftingTest, RlpMatchesGraphOracle) {
  for (const auto& entry : SmallGraphs().maps()) {
    EXPECT_EQ(HasRlp(entry.map, testing::GraphsIG().maps),
              testing::graphs::TrivialFibration(testing::AsHom(entry.map)));
  }
}

TEST(LiftingTest, MemoDoesNotChangeAnswers) {
  LiftingMemo memo;
  GeneratingSet ig = testing::GraphsIG();
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& entry : SmallGraphs().maps()) {
      EXPECT_EQ(HasRlp(entry.map, ig.maps, &memo), HasRlp(entry.map, ig.maps));
    }
  }
  EXPECT_GT(memo.size(), 0u);
}

TEST(LiftingUpToTest, EqualityDegeneratesToExactLifting) {
  GeneratingSet i2 = testing::SetsI2();
  for (const auto& f : SetMapsUpTo(3)) {
    EXPECT_EQ(HasRlpUpTo(f, i2.maps, EqualityRelation()), HasRlp(f, i2.maps));
  }
  for (const auto& entry : SmallGraphs().maps()) {
    for (const auto& i : testing::GraphsIG().maps) {
      ForEachSquare(i, entry.map, [&](const LiftingProblem& problem) {
        EXPECT_EQ(SolveLiftingUpTo(problem, EqualityRelation()).has_value(),
                  SolveLifting(problem).has_value());
        return true;
      });
    }
  }
}

TEST(LiftingUpToTest, NeverRelationAdmitsNoLift) {
  GeneratingSet i1 = testing::SetsI1();
  for (const auto& f : SetMapsUpTo(2)) {
    ForEachSquare(i1.maps[0], f, [&](const LiftingProblem& problem) {
      EXPECT_FALSE(SolveLiftingUpTo(problem, NeverRelation()).has_value());
      return true;
    });
  }
}

TEST(LiftingUpToTest, PointLiftsUpToHomotopyFromNonemptyDomain) {
  HomotopyEngine engine(testing::SetsI1(), 1024);
  RelationOracle relation = engine.RelativeHomotopy();
  PresheafMap point = SetMap(Set(0), Set(1), {});
  for (const auto& f : SetMapsUpTo(3)) {
    const int x = f.source()->size(0);
    const int y = f.target()->size(0);
    EXPECT_EQ(HasRlpUpToObject(f, Set(1), relation), x > 0 || y == 0);
    if (x == 0) continue;
    ForEachSquare(point, f, [&](const LiftingProblem& problem) {
      EXPECT_TRUE(SolveLiftingUpTo(problem, relation).has_value());
      return true;
    });
  }
}

// An edge g(x0) -> g(x1) downstairs forces an edge x0 -> x1 upstairs.
bool EdgesReflect(const testing::graphs::Hom& g) {
  for (int x0 = 0; x0 < g.from.vertices; ++x0) {
    for (int x1 = 0; x1 < g.from.vertices; ++x1) {
      bool below = false;
      for (const auto& [s, t] : g.to.edges) {
        below = below || (s == g.vertex[x0] && t == g.vertex[x1]);
      }
      bool above = false;
      for (const auto& [s, t] : g.from.edges) {
        above = above || (s == x0 && t == x1);
      }
      if (below && !above) return false;
    }
  }
  return true;
}

TEST(LiftingUpToTest, BoundaryLiftingUpToHomotopyReflectsEdges) {
  HomotopyEngine engine(testing::GraphsIG(), 1024);
  PresheafMap boundary = testing::GraphsIG().maps[1];
  int reflecting = 0;
  for (const auto& entry : SmallGraphs().maps()) {
    bool expected = EdgesReflect(testing::AsHom(entry.map));
    if (expected) ++reflecting;
    EXPECT_EQ(HasRlpUpTo(entry.map, {boundary}, engine.RelativeHomotopy()),
              expected);
  }
  EXPECT_GT(reflecting, 0);
}

}  // namespace
}  // namespace minmodel
