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

#include "minmodel/morphism_properties.h"

#include <vector>

#include "minmodel/hom_search.h"

namespace minmodel {

bool IsMono(const PresheafMap& f) {
  for (size_t object = 0; object < f.components().size(); ++object) {
    const auto& component = f.component(static_cast<int>(object));
    std::vector<bool> hit(f.target()->size(static_cast<int>(object)), false);
    for (int image : component) {
      if (hit[image]) return false;
      hit[image] = true;
    }
  }
  return true;
}

std::optional<PresheafMap> FindRetraction(const PresheafMap& f) {
  MapConstraints constraints;
  constraints.fixed.push_back({f, Identity(f.source())});
  return FindMap(f.target(), f.source(), constraints);
}

bool IsSplitMono(const PresheafMap& f) { return FindRetraction(f).has_value(); }

std::optional<MorphismRetraction> IsRetractOf(const PresheafMap& f,
                                              const PresheafMap& g) {
  const PresheafPtr& a = f.source();
  const PresheafPtr& b = f.target();
  const PresheafPtr& c = g.source();
  const PresheafPtr& d = g.target();
  const PresheafMap id_a = Identity(a);
  const PresheafMap id_b = Identity(b);

  std::optional<MorphismRetraction> witness;
  ForEachMap(a, c, {}, [&](const PresheafMap& section_dom) {
    MapConstraints cod_section;
    cod_section.fixed.push_back({f, Compose(section_dom, g)});
    ForEachMap(b, d, cod_section, [&](const PresheafMap& section_cod) {
      MapConstraints dom_retraction;
      dom_retraction.fixed.push_back({section_dom, id_a});
      ForEachMap(c, a, dom_retraction, [&](const PresheafMap& retraction_dom) {
        MapConstraints cod_retraction;
        cod_retraction.fixed.push_back({section_cod, id_b});
        cod_retraction.fixed.push_back({g, Compose(retraction_dom, f)});
        if (auto retraction_cod = FindMap(d, b, cod_retraction)) {
          witness = MorphismRetraction{f,           g,
                                       section_dom, retraction_dom,
                                       section_cod, *retraction_cod};
          return false;
        }
        return true;
      });
      return !witness;
    });
    return !witness;
  });
  return witness;
}

bool IsValidRetraction(const MorphismRetraction& w) {
  return Compose(w.section_dom, w.retraction_dom) == Identity(w.f.source()) &&
         Compose(w.section_cod, w.retraction_cod) == Identity(w.f.target()) &&
         Compose(w.section_dom, w.g) == Compose(w.f, w.section_cod) &&
         Compose(w.retraction_dom, w.f) == Compose(w.g, w.retraction_cod);
}

}  // namespace minmodel
