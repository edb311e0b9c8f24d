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

#ifndef MINMODEL_HOM_SEARCH_H_
#define MINMODEL_HOM_SEARCH_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "minmodel/presheaf.h"

namespace minmodel {

// Constraints on a natural transformation h : B -> C.
struct MapConstraints {
  // h ∘ along == value, for each entry. `along : A -> B`, `value : A -> C`.
  struct Fixed {
    PresheafMap along;
    PresheafMap value;
  };
  std::vector<Fixed> fixed;

  // over ∘ h == under, when set. `over : C -> D`, `under : B -> D`.
  std::optional<PresheafMap> over;
  std::optional<PresheafMap> under;
};

// Work counters for the search engine. Reports expose them as a
// deterministic substitute for wall-clock timing.
struct SearchStats {
  uint64_t searches = 0;
  uint64_t nodes = 0;
  uint64_t solutions = 0;
  // Cell attachments made by the small object argument.
  uint64_t attachments = 0;
};

SearchStats& ThreadSearchStats();

// Visits every map source -> target satisfying `constraints` exactly once,
// in the canonical order: lexicographic over the sequence of element
// images, base objects in declared order, elements in carrier order.
// Naturality and the constraints are propagated while assigning, not
// filtered afterwards. `visit` returns false to stop early. Returns false
// iff the enumeration was stopped by `visit`.
bool ForEachMap(const PresheafPtr& source, const PresheafPtr& target,
                const MapConstraints& constraints,
                const std::function<bool(const PresheafMap&)>& visit);

// First map in canonical order satisfying the constraints.
std::optional<PresheafMap> FindMap(const PresheafPtr& source,
                                   const PresheafPtr& target,
                                   const MapConstraints& constraints = {});

uint64_t CountMaps(const PresheafPtr& source, const PresheafPtr& target,
                   const MapConstraints& constraints = {});

// The whole Hom-set in canonical order.
std::vector<PresheafMap> HomEnumerate(const PresheafPtr& source,
                                      const PresheafPtr& target);

}  // namespace minmodel

#endif  // MINMODEL_HOM_SEARCH_H_
