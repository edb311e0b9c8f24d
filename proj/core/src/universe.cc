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

#include "minmodel/universe.h"

#include "minmodel/error.h"
#include "minmodel/hom_search.h"

namespace minmodel {

Bound Bound::Uniform(const BaseCategory& base, int size) {
  return Bound{std::vector<int>(base.num_objects(), size)};
}

std::string Bound::ToString(const BaseCategory& base) const {
  bool uniform = true;
  for (int size : per_object) uniform = uniform && size == per_object.front();
  if (uniform && !per_object.empty()) return std::to_string(per_object[0]);
  std::string text;
  for (int o = 0; o < base.num_objects(); ++o) {
    if (!text.empty()) text += ' ';
    text += base.object_name(o) + ":" + std::to_string(per_object[o]);
  }
  return text;
}

namespace {

// Advances `digits` (each in [0, radix)) as a little-endian odometer
// over the last position first, so that successive values increase
// lexicographically. Returns false after the last value.
bool Advance(std::vector<int>& digits, const std::vector<int>& radix) {
  for (int k = static_cast<int>(digits.size()) - 1; k >= 0; --k) {
    if (++digits[k] < radix[k]) return true;
    digits[k] = 0;
  }
  return false;
}

}  // namespace

BoundedUniverse BoundedUniverse::Enumerate(const BasePtr& base,
                                           const Bound& bound) {
  const int objects = base->num_objects();
  if (static_cast<int>(bound.per_object.size()) != objects) {
    throw Error(ErrorKind::kValidationError,
                "bound does not list every base object");
  }
  for (int size : bound.per_object) {
    if (size < 0 || size > base->limits().max_carrier) {
      throw Error(ErrorKind::kLimitExceeded, "universe bound out of range");
    }
  }
  BoundedUniverse universe;
  universe.base_ = base;
  universe.bound_ = bound;

  std::vector<int> size_radix(objects);
  for (int o = 0; o < objects; ++o) size_radix[o] = bound.per_object[o] + 1;
  std::vector<int> sizes(objects, 0);
  do {
    std::vector<std::vector<std::string>> elements(objects);
    for (int o = 0; o < objects; ++o) {
      for (int x = 0; x < sizes[o]; ++x) {
        elements[o].push_back(std::to_string(x));
      }
    }
    // One digit per (non-identity morphism, element of its codomain).
    std::vector<int> digits;
    std::vector<int> radix;
    std::vector<std::pair<int, int>> slot;  // (morphism, element)
    bool empty_function = false;
    for (int m = objects; m < base->num_morphisms(); ++m) {
      const Morphism& morphism = base->morphism(m);
      for (int x = 0; x < sizes[morphism.cod]; ++x) {
        if (sizes[morphism.dom] == 0) empty_function = true;
        radix.push_back(sizes[morphism.dom]);
        slot.emplace_back(m, x);
      }
    }
    if (empty_function) continue;
    digits.assign(radix.size(), 0);
    do {
      std::vector<std::vector<int>> actions(base->num_morphisms());
      for (int m = objects; m < base->num_morphisms(); ++m) {
        actions[m].resize(sizes[base->morphism(m).cod]);
      }
      for (size_t k = 0; k < digits.size(); ++k) {
        actions[slot[k].first][slot[k].second] = digits[k];
      }
      try {
        universe.objects_.push_back(Presheaf::FromTables(
            base, elements, std::move(actions),
            "u" + std::to_string(universe.objects_.size())));
      } catch (const Error& error) {
        if (error.kind() != ErrorKind::kFunctorialityViolation) throw;
      }
    } while (Advance(digits, radix));
  } while (Advance(sizes, size_radix));

  const size_t n = universe.objects_.size();
  universe.between_.assign(n * n, {});
  universe.from_.assign(n, {});
  universe.into_.assign(n, {});
  for (size_t s = 0; s < n; ++s) {
    for (size_t t = 0; t < n; ++t) {
      ForEachMap(universe.objects_[s], universe.objects_[t], {},
                 [&](const PresheafMap& map) {
                   int index = static_cast<int>(universe.maps_.size());
                   universe.maps_.push_back(UniverseMap{
                       static_cast<int>(s), static_cast<int>(t), map});
                   universe.between_[s * n + t].push_back(index);
                   universe.from_[s].push_back(index);
                   universe.into_[t].push_back(index);
                   return true;
                 });
    }
  }
  return universe;
}

}  // namespace minmodel
