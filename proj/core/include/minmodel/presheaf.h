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

#ifndef MINMODEL_PRESHEAF_H_
#define MINMODEL_PRESHEAF_H_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "minmodel/base_category.h"

namespace minmodel {

class Presheaf;
using PresheafPtr = std::shared_ptr<const Presheaf>;

// Presheaf data keyed by names, as it appears in a workspace file.
// An action entry for morphism m : a -> b sends an element of carrier(b)
// to an element of carrier(a).
struct PresheafData {
  using Graph = std::vector<std::pair<std::string, std::string>>;
  std::vector<std::pair<std::string, std::vector<std::string>>> carriers;
  std::vector<std::pair<std::string, Graph>> actions;
};

// A finite presheaf over a BaseCategory. Elements are addressed by
// (object, index); the index order is the canonical order used by every
// enumeration. Values are immutable once built.
class Presheaf {
 public:
  // Checks that every carrier and action is given, element names are
  // unique per object, and the actions are functorial.
  static PresheafPtr Validate(BasePtr base, const PresheafData& data,
                              std::string label = "");

  // Builds from index tables. `actions[m][x]` is the image of element x of
  // carrier(cod m); identity entries may be left empty and are filled in.
  static PresheafPtr FromTables(BasePtr base,
                                std::vector<std::vector<std::string>> elements,
                                std::vector<std::vector<int>> actions,
                                std::string label = "");

  const BasePtr& base() const { return base_; }
  int size(int object) const {
    return static_cast<int>(elements_[object].size());
  }
  int total_size() const { return total_size_; }
  const std::string& element(int object, int index) const {
    return elements_[object][index];
  }
  const std::vector<std::string>& carrier(int object) const {
    return elements_[object];
  }
  int FindElement(int object, std::string_view name) const;

  // Restriction along `morphism` applied to an element of its codomain's
  // carrier.
  int Act(int morphism, int element) const {
    return actions_[morphism][element];
  }
  const std::vector<int>& action(int morphism) const {
    return actions_[morphism];
  }

  const std::string& label() const { return label_; }
  PresheafPtr WithLabel(std::string label) const;

  // Structural equality; labels are ignored.
  bool operator==(const Presheaf& other) const;
  size_t hash() const { return hash_; }

  PresheafData Describe() const;

 private:
  Presheaf() = default;
  void Finish();

  BasePtr base_;
  std::vector<std::vector<std::string>> elements_;
  std::vector<std::vector<int>> actions_;
  std::string label_;
  int total_size_ = 0;
  size_t hash_ = 0;
};

bool SamePresheaf(const PresheafPtr& a, const PresheafPtr& b);

// Component graphs keyed by object name then element name.
struct MapData {
  using Graph = std::vector<std::pair<std::string, std::string>>;
  std::vector<std::pair<std::string, Graph>> components;
};

// A natural transformation between two presheaves over the same base.
class PresheafMap {
 public:
  PresheafMap() = default;

  // Validates totality and naturality.
  static PresheafMap Create(PresheafPtr source, PresheafPtr target,
                            std::vector<std::vector<int>> components);
  static PresheafMap FromData(PresheafPtr source, PresheafPtr target,
                              const MapData& data);
  // No validation; for maps produced by the search engine and colimits.
  static PresheafMap Trusted(PresheafPtr source, PresheafPtr target,
                             std::vector<std::vector<int>> components);

  const PresheafPtr& source() const { return source_; }
  const PresheafPtr& target() const { return target_; }
  int operator()(int object, int element) const {
    return components_[object][element];
  }
  const std::vector<int>& component(int object) const {
    return components_[object];
  }
  const std::vector<std::vector<int>>& components() const {
    return components_;
  }
  bool valid() const { return source_ != nullptr; }

  bool operator==(const PresheafMap& other) const;
  size_t hash() const;

  MapData Describe() const;

 private:
  PresheafPtr source_;
  PresheafPtr target_;
  std::vector<std::vector<int>> components_;
};

struct PresheafMapHash {
  size_t operator()(const PresheafMap& f) const { return f.hash(); }
};

PresheafMap Identity(const PresheafPtr& object);

// The composite "f then g", i.e. g ∘ f. Requires target(f) == source(g)
// structurally; throws NonComposable otherwise.
PresheafMap Compose(const PresheafMap& f, const PresheafMap& g);

// Shorthand for Compose over a chain: Compose({f, g, h}) == h ∘ g ∘ f.
PresheafMap Compose(std::initializer_list<PresheafMap> chain);

bool IsParallel(const PresheafMap& f, const PresheafMap& g);
bool IsIsomorphism(const PresheafMap& f);

// Unique map out of an empty presheaf. Undefined for nonempty sources.
PresheafMap EmptyMap(const PresheafPtr& empty, const PresheafPtr& target);

}  // namespace minmodel

#endif  // MINMODEL_PRESHEAF_H_
