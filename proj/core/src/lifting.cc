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

#include "minmodel/lifting.h"

#include "minmodel/colimits.h"
#include "minmodel/error.h"
#include "minmodel/hom_search.h"

namespace minmodel {

void ValidateSquare(const LiftingProblem& p) {
  if (!SamePresheaf(p.left.source(), p.top.source()) ||
      !SamePresheaf(p.top.target(), p.right.source()) ||
      !SamePresheaf(p.left.target(), p.bottom.source()) ||
      !SamePresheaf(p.bottom.target(), p.right.target())) {
    throw Error(ErrorKind::kNonCommutingSquare,
                "square edges do not share endpoints");
  }
  if (!(Compose(p.top, p.right) == Compose(p.left, p.bottom))) {
    throw Error(ErrorKind::kNonCommutingSquare,
                "right ∘ top != bottom ∘ left");
  }
}

std::optional<PresheafMap> SolveLifting(const LiftingProblem& p) {
  ValidateSquare(p);
  MapConstraints constraints;
  constraints.fixed.push_back({p.left, p.top});
  constraints.over = p.right;
  constraints.under = p.bottom;
  return FindMap(p.left.target(), p.top.target(), constraints);
}

RelationOracle EqualityRelation() {
  RelationOracle oracle;
  oracle.kind = RelationKind::kEquality;
  oracle.tag = "equality";
  oracle.decide = [](const PresheafMap& a, const PresheafMap& b,
                     const PresheafMap&) {
    return RelationResult{a == b, std::nullopt};
  };
  return oracle;
}

RelationOracle NeverRelation() {
  RelationOracle oracle;
  oracle.kind = RelationKind::kNever;
  oracle.tag = "never";
  oracle.decide = [](const PresheafMap&, const PresheafMap&,
                     const PresheafMap&) { return RelationResult{}; };
  return oracle;
}

std::optional<LiftUpTo> SolveLiftingUpTo(const LiftingProblem& p,
                                         const RelationOracle& relation) {
  ValidateSquare(p);
  MapConstraints constraints;
  constraints.fixed.push_back({p.left, p.top});
  std::optional<LiftUpTo> found;
  ForEachMap(p.left.target(), p.top.target(), constraints,
             [&](const PresheafMap& h) {
               RelationResult r =
                   relation.decide(Compose(h, p.right), p.bottom, p.left);
               if (r.holds) {
                 found = LiftUpTo{h, std::move(r)};
                 return false;
               }
               return true;
             });
  return found;
}

bool ForEachSquare(const PresheafMap& left, const PresheafMap& right,
                   const std::function<bool(const LiftingProblem&)>& visit) {
  return ForEachMap(
      left.source(), right.source(), {}, [&](const PresheafMap& top) {
        MapConstraints bottoms;
        bottoms.fixed.push_back({left, Compose(top, right)});
        return ForEachMap(left.target(), right.target(), bottoms,
                          [&](const PresheafMap& bottom) {
                            return visit(LiftingProblem{left, right, top,
                                                        bottom});
                          });
      });
}

std::optional<bool> LiftingMemo::Lookup(const PresheafMap& left,
                                        const PresheafMap& right) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = table_.find(Key{left, right});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void LiftingMemo::Store(const PresheafMap& left, const PresheafMap& right,
                        bool value) {
  std::lock_guard<std::mutex> lock(mutex_);
  table_.emplace(Key{left, right}, value);
}

size_t LiftingMemo::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return table_.size();
}

std::optional<LiftingProblem> FindUnliftableSquare(const PresheafMap& left,
                                                   const PresheafMap& right) {
  std::optional<LiftingProblem> failure;
  ForEachSquare(left, right, [&](const LiftingProblem& square) {
    if (!SolveLifting(square)) {
      failure = square;
      return false;
    }
    return true;
  });
  return failure;
}

std::optional<LiftingProblem> FindUnliftableSquareUpTo(
    const PresheafMap& left, const PresheafMap& right,
    const RelationOracle& relation) {
  std::optional<LiftingProblem> failure;
  ForEachSquare(left, right, [&](const LiftingProblem& square) {
    if (!SolveLiftingUpTo(square, relation)) {
      failure = square;
      return false;
    }
    return true;
  });
  return failure;
}

namespace {

bool AllSquaresLift(const PresheafMap& left, const PresheafMap& right,
                    LiftingMemo* memo) {
  if (memo) {
    if (auto cached = memo->Lookup(left, right)) return *cached;
  }
  bool result = !FindUnliftableSquare(left, right).has_value();
  if (memo) memo->Store(left, right, result);
  return result;
}

}  // namespace

bool HasRlp(const PresheafMap& g, const std::vector<PresheafMap>& set,
            LiftingMemo* memo) {
  for (const auto& s : set) {
    if (!AllSquaresLift(s, g, memo)) return false;
  }
  return true;
}

bool HasLlp(const PresheafMap& f, const std::vector<PresheafMap>& set,
            LiftingMemo* memo) {
  for (const auto& s : set) {
    if (!AllSquaresLift(f, s, memo)) return false;
  }
  return true;
}

bool HasRlpUpTo(const PresheafMap& g, const std::vector<PresheafMap>& set,
                const RelationOracle& relation) {
  for (const auto& s : set) {
    if (FindUnliftableSquareUpTo(s, g, relation)) return false;
  }
  return true;
}

bool HasRlpUpToObject(const PresheafMap& g, const PresheafPtr& object,
                      const RelationOracle& relation) {
  return !FindUnliftableSquareUpTo(FromInitial(object), g, relation)
              .has_value();
}

}  // namespace minmodel
