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

#ifndef MINMODEL_BASE_CATEGORY_H_
#define MINMODEL_BASE_CATEGORY_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace minmodel {

// Size limits for everything built on top of a base category. All searches
// downstream are exponential, so oversize inputs are rejected up front.
struct Limits {
  int max_carrier = 64;
  int max_objects = 16;
};

// Textual-level description of a finite category given by a full
// composition table. Identity morphisms may be named explicitly; otherwise
// they are called "id_<object>". Composition entries read "first then
// second = result", i.e. result = second ∘ first.
struct BaseDescription {
  struct Arrow {
    std::string name;
    std::string dom;
    std::string cod;
  };
  struct Identity {
    std::string object;
    std::string name;
  };
  struct Composite {
    std::string first;
    std::string second;
    std::string result;
  };

  std::vector<std::string> objects;
  std::vector<Identity> identities;
  std::vector<Arrow> morphisms;
  std::vector<Composite> compositions;
};

struct Morphism {
  std::string name;
  int dom = 0;
  int cod = 0;
};

class BaseCategory;
using BasePtr = std::shared_ptr<const BaseCategory>;

// A validated finite category. Morphism indices 0..n-1 are the identities
// of objects 0..n-1; the declared non-identity morphisms follow in input
// order.
class BaseCategory {
 public:
  // Validates the description: total and closed composition table,
  // identity laws, associativity on every composable triple.
  static BasePtr Load(const BaseDescription& description,
                      const Limits& limits = {});

  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_morphisms() const { return static_cast<int>(morphisms_.size()); }
  const std::string& object_name(int object) const { return objects_[object]; }
  const Morphism& morphism(int index) const { return morphisms_[index]; }
  int identity(int object) const { return object; }
  bool is_identity(int index) const { return index < num_objects(); }

  // Index of the object/morphism with the given name, or -1.
  int FindObject(std::string_view name) const;
  int FindMorphism(std::string_view name) const;

  // second ∘ first, or -1 when cod(first) != dom(second).
  int Compose(int first, int second) const {
    return table_[first * num_morphisms() + second];
  }

  // Non-identity morphisms whose codomain is `object`, in index order.
  const std::vector<int>& IncomingNonIdentity(int object) const {
    return incoming_[object];
  }

  const Limits& limits() const { return limits_; }

  // Reconstructs a description (identities named, full table) whose Load
  // yields a structurally identical category.
  BaseDescription Describe() const;

  bool operator==(const BaseCategory& other) const;

 private:
  BaseCategory() = default;

  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> table_;
  std::vector<std::vector<int>> incoming_;
  Limits limits_;
};

bool SameBase(const BasePtr& a, const BasePtr& b);

}  // namespace minmodel

#endif  // MINMODEL_BASE_CATEGORY_H_
