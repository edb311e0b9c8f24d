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

#ifndef MINMODEL_MORPHISM_PROPERTIES_H_
#define MINMODEL_MORPHISM_PROPERTIES_H_

#include <optional>

#include "minmodel/presheaf.h"

namespace minmodel {

// All components injective.
bool IsMono(const PresheafMap& f);

// First g (canonical order) with g ∘ f == id.
std::optional<PresheafMap> FindRetraction(const PresheafMap& f);
bool IsSplitMono(const PresheafMap& f);

// Witness that `f : A -> B` is a retract of `g : C -> D` in the arrow
// category:
//
//   A --section_dom--> C --retraction_dom--> A
//   |f                 |g                    |f
//   B --section_cod--> D --retraction_cod--> B
//
// with both rows composing to identities.
struct MorphismRetraction {
  PresheafMap f;
  PresheafMap g;
  PresheafMap section_dom;
  PresheafMap retraction_dom;
  PresheafMap section_cod;
  PresheafMap retraction_cod;
};

std::optional<MorphismRetraction> IsRetractOf(const PresheafMap& f,
                                              const PresheafMap& g);

// Checks the commutativity and identity conditions of a witness.
bool IsValidRetraction(const MorphismRetraction& witness);

}  // namespace minmodel

#endif  // MINMODEL_MORPHISM_PROPERTIES_H_
