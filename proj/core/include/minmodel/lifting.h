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

#ifndef MINMODEL_LIFTING_H_
#define MINMODEL_LIFTING_H_

#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "minmodel/presheaf.h"

namespace minmodel {

// A commuting square
//
//   A --top--> C
//   |left      |right
//   B --bottom-> D
struct LiftingProblem {
  PresheafMap left;
  PresheafMap right;
  PresheafMap top;
  PresheafMap bottom;
};

// Throws NonCommutingSquare unless right ∘ top == bottom ∘ left.
void ValidateSquare(const LiftingProblem& problem);

// First h : B -> C (canonical order) with h ∘ left == top and
// right ∘ h == bottom.
std::optional<PresheafMap> SolveLifting(const LiftingProblem& problem);

struct RelationResult {
  bool holds = false;
  // A homotopy, when the relation is a homotopy relation.
  std::optional<PresheafMap> witness;
};

enum class RelationKind { kEquality, kNever, kHomotopyRelLeft, kCustom };

// A relation R on parallel maps B -> D. `decide(a, b, left)` receives the
// left map of the lifting square so that homotopy relations can be taken
// relative to it.
struct RelationOracle {
  RelationKind kind = RelationKind::kCustom;
  std::string tag;
  std::function<RelationResult(const PresheafMap& a, const PresheafMap& b,
                               const PresheafMap& left)>
      decide;
};

RelationOracle EqualityRelation();
RelationOracle NeverRelation();

struct LiftUpTo {
  PresheafMap lift;
  RelationResult relation;
};

// First h with h ∘ left == top exactly and (right ∘ h) R bottom.
std::optional<LiftUpTo> SolveLiftingUpTo(const LiftingProblem& problem,
                                         const RelationOracle& relation);

// Visits every commuting square from `left` to `right`: tops in canonical
// order, and for each top the compatible bottoms in canonical order.
// Returns false iff stopped by `visit`.
bool ForEachSquare(const PresheafMap& left, const PresheafMap& right,
                   const std::function<bool(const LiftingProblem&)>& visit);

// Deterministic cache of "every square from left to right has a lift".
class LiftingMemo {
 public:
  std::optional<bool> Lookup(const PresheafMap& left,
                             const PresheafMap& right) const;
  void Store(const PresheafMap& left, const PresheafMap& right, bool value);
  size_t size() const;

 private:
  struct Key {
    PresheafMap left;
    PresheafMap right;
    bool operator==(const Key& other) const {
      return left == other.left && right == other.right;
    }
  };
  struct KeyHash {
    size_t operator()(const Key& key) const {
      return key.left.hash() * 31 + key.right.hash();
    }
  };

  mutable std::mutex mutex_;
  std::unordered_map<Key, bool, KeyHash> table_;
};

// First square (in ForEachSquare order) without an exact lift.
std::optional<LiftingProblem> FindUnliftableSquare(const PresheafMap& left,
                                                   const PresheafMap& right);

// First square without a lift up to `relation`.
std::optional<LiftingProblem> FindUnliftableSquareUpTo(
    const PresheafMap& left, const PresheafMap& right,
    const RelationOracle& relation);

bool HasRlp(const PresheafMap& g, const std::vector<PresheafMap>& set,
            LiftingMemo* memo = nullptr);
bool HasLlp(const PresheafMap& f, const std::vector<PresheafMap>& set,
            LiftingMemo* memo = nullptr);

bool HasRlpUpTo(const PresheafMap& g, const std::vector<PresheafMap>& set,
                const RelationOracle& relation);

// RLP up to R with respect to the map 0 -> object.
bool HasRlpUpToObject(const PresheafMap& g, const PresheafPtr& object,
                      const RelationOracle& relation);

}  // namespace minmodel

#endif  // MINMODEL_LIFTING_H_
