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

#include "minmodel/presheaf.h"

#include <functional>
#include <set>

#include "minmodel/error.h"

namespace minmodel {
namespace {

void HashCombine(size_t& seed, size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

void CheckFunctorial(const BaseCategory& base,
                     const std::vector<std::vector<int>>& actions) {
  const int n = base.num_morphisms();
  for (int f = 0; f < n; ++f) {
    for (int g = 0; g < n; ++g) {
      int h = base.Compose(f, g);
      if (h < 0) continue;
      // P(g ∘ f) = P(f) ∘ P(g) on carrier(cod g).
      const auto& act_g = actions[g];
      for (size_t x = 0; x < act_g.size(); ++x) {
        if (actions[h][x] != actions[f][act_g[x]]) {
          throw Error(ErrorKind::kFunctorialityViolation,
                      "pair (" + base.morphism(f).name + ";" +
                          base.morphism(g).name + ")");
        }
      }
    }
  }
}

}  // namespace

PresheafPtr Presheaf::FromTables(BasePtr base,
                                 std::vector<std::vector<std::string>> elements,
                                 std::vector<std::vector<int>> actions,
                                 std::string label) {
  std::shared_ptr<Presheaf> presheaf(new Presheaf());
  const int objects = base->num_objects();
  if (static_cast<int>(elements.size()) != objects ||
      static_cast<int>(actions.size()) != base->num_morphisms()) {
    throw Error(ErrorKind::kValidationError, "table shape does not match base");
  }
  for (int object = 0; object < objects; ++object) {
    if (static_cast<int>(elements[object].size()) >
        base->limits().max_carrier) {
      throw Error(ErrorKind::kLimitExceeded,
                  "carrier at '" + base->object_name(object) + "' has " +
                      std::to_string(elements[object].size()) +
                      " elements, limit is " +
                      std::to_string(base->limits().max_carrier));
    }
    std::set<std::string_view> seen;
    for (const auto& name : elements[object]) {
      if (!seen.insert(name).second) {
        throw Error(ErrorKind::kDuplicateName,
                    "element '" + name + "' at object '" +
                        base->object_name(object) + "'");
      }
    }
  }
  for (int m = 0; m < base->num_morphisms(); ++m) {
    const Morphism& morphism = base->morphism(m);
    auto& action = actions[m];
    if (base->is_identity(m) && action.empty()) {
      action.resize(elements[m].size());
      for (size_t x = 0; x < action.size(); ++x) action[x] = static_cast<int>(x);
    }
    if (action.size() != elements[morphism.cod].size()) {
      throw Error(ErrorKind::kMissingAction,
                  "action of '" + morphism.name + "' is not total");
    }
    for (int image : action) {
      if (image < 0 ||
          image >= static_cast<int>(elements[morphism.dom].size())) {
        throw Error(ErrorKind::kValidationError,
                    "action of '" + morphism.name + "' leaves its carrier");
      }
    }
    if (base->is_identity(m)) {
      for (size_t x = 0; x < action.size(); ++x) {
        if (action[x] != static_cast<int>(x)) {
          throw Error(ErrorKind::kFunctorialityViolation,
                      "identity '" + morphism.name + "' acts non-trivially");
        }
      }
    }
  }
  CheckFunctorial(*base, actions);

  presheaf->base_ = std::move(base);
  presheaf->elements_ = std::move(elements);
  presheaf->actions_ = std::move(actions);
  presheaf->label_ = std::move(label);
  presheaf->Finish();
  return presheaf;
}

void Presheaf::Finish() {
  total_size_ = 0;
  hash_ = 0;
  for (const auto& carrier : elements_) {
    total_size_ += static_cast<int>(carrier.size());
    HashCombine(hash_, carrier.size());
    for (const auto& name : carrier) {
      HashCombine(hash_, std::hash<std::string>{}(name));
    }
  }
  for (const auto& action : actions_) {
    for (int image : action) HashCombine(hash_, static_cast<size_t>(image));
  }
}

PresheafPtr Presheaf::Validate(BasePtr base, const PresheafData& data,
                               std::string label) {
  const int objects = base->num_objects();
  std::vector<std::vector<std::string>> elements(objects);
  std::vector<bool> seen_carrier(objects, false);
  for (const auto& [object_name, carrier] : data.carriers) {
    int object = base->FindObject(object_name);
    if (object < 0) {
      throw Error(ErrorKind::kUnknownName,
                  "carrier for unknown object '" + object_name + "'");
    }
    if (seen_carrier[object]) {
      throw Error(ErrorKind::kDuplicateName,
                  "carrier for '" + object_name + "' given twice");
    }
    seen_carrier[object] = true;
    elements[object] = carrier;
  }
  for (int object = 0; object < objects; ++object) {
    if (!seen_carrier[object]) {
      throw Error(ErrorKind::kValidationError,
                  "missing carrier for object '" + base->object_name(object) +
                      "'");
    }
  }

  // Index lookup needs unique names; FromTables reports duplicates, but the
  // lookup below must not silently pick one.
  for (int object = 0; object < objects; ++object) {
    std::set<std::string_view> names;
    for (const auto& name : elements[object]) {
      if (!names.insert(name).second) {
        throw Error(ErrorKind::kDuplicateName,
                    "element '" + name + "' at object '" +
                        base->object_name(object) + "'");
      }
    }
  }
  auto index_of = [&](int object, const std::string& name) {
    for (size_t i = 0; i < elements[object].size(); ++i) {
      if (elements[object][i] == name) return static_cast<int>(i);
    }
    throw Error(ErrorKind::kUnknownName,
                "element '" + name + "' not in carrier '" +
                    base->object_name(object) + "'");
  };

  std::vector<std::vector<int>> actions(base->num_morphisms());
  std::vector<bool> seen_action(base->num_morphisms(), false);
  for (const auto& [morphism_name, graph] : data.actions) {
    int m = base->FindMorphism(morphism_name);
    if (m < 0) {
      throw Error(ErrorKind::kUnknownName,
                  "action for unknown morphism '" + morphism_name + "'");
    }
    if (seen_action[m]) {
      throw Error(ErrorKind::kDuplicateName,
                  "action of '" + morphism_name + "' given twice");
    }
    seen_action[m] = true;
    const Morphism& morphism = base->morphism(m);
    std::vector<int> action(elements[morphism.cod].size(), -1);
    for (const auto& [from, to] : graph) {
      int x = index_of(morphism.cod, from);
      int y = index_of(morphism.dom, to);
      if (action[x] >= 0 && action[x] != y) {
        throw Error(ErrorKind::kValidationError,
                    "action of '" + morphism_name + "' sends '" + from +
                        "' twice");
      }
      action[x] = y;
    }
    for (size_t x = 0; x < action.size(); ++x) {
      if (action[x] < 0) {
        throw Error(ErrorKind::kMissingAction,
                    "action of '" + morphism_name + "' undefined on '" +
                        elements[morphism.cod][x] + "'");
      }
    }
    actions[m] = std::move(action);
  }
  for (int m = base->num_objects(); m < base->num_morphisms(); ++m) {
    const Morphism& morphism = base->morphism(m);
    if (!seen_action[m] && !elements[morphism.cod].empty()) {
      throw Error(ErrorKind::kMissingAction,
                  "no action given for '" + morphism.name + "'");
    }
  }
  return FromTables(std::move(base), std::move(elements), std::move(actions),
                    std::move(label));
}

int Presheaf::FindElement(int object, std::string_view name) const {
  const auto& carrier = elements_[object];
  for (size_t i = 0; i < carrier.size(); ++i) {
    if (carrier[i] == name) return static_cast<int>(i);
  }
  return -1;
}

PresheafPtr Presheaf::WithLabel(std::string label) const {
  std::shared_ptr<Presheaf> copy(new Presheaf(*this));
  copy->label_ = std::move(label);
  return copy;
}

bool Presheaf::operator==(const Presheaf& other) const {
  return hash_ == other.hash_ && SameBase(base_, other.base_) &&
         elements_ == other.elements_ && actions_ == other.actions_;
}

PresheafData Presheaf::Describe() const {
  PresheafData data;
  for (int object = 0; object < base_->num_objects(); ++object) {
    data.carriers.emplace_back(base_->object_name(object), elements_[object]);
  }
  for (int m = base_->num_objects(); m < base_->num_morphisms(); ++m) {
    const Morphism& morphism = base_->morphism(m);
    PresheafData::Graph graph;
    for (size_t x = 0; x < actions_[m].size(); ++x) {
      graph.emplace_back(elements_[morphism.cod][x],
                         elements_[morphism.dom][actions_[m][x]]);
    }
    data.actions.emplace_back(morphism.name, std::move(graph));
  }
  return data;
}

bool SamePresheaf(const PresheafPtr& a, const PresheafPtr& b) {
  return a == b || (a && b && *a == *b);
}

PresheafMap PresheafMap::Trusted(PresheafPtr source, PresheafPtr target,
                                 std::vector<std::vector<int>> components) {
  PresheafMap map;
  map.source_ = std::move(source);
  map.target_ = std::move(target);
  map.components_ = std::move(components);
  return map;
}

PresheafMap PresheafMap::Create(PresheafPtr source, PresheafPtr target,
                                std::vector<std::vector<int>> components) {
  if (!SameBase(source->base(), target->base())) {
    throw Error(ErrorKind::kBaseMismatch, "map between different bases");
  }
  const BaseCategory& base = *source->base();
  if (static_cast<int>(components.size()) != base.num_objects()) {
    throw Error(ErrorKind::kValidationError, "wrong number of components");
  }
  for (int object = 0; object < base.num_objects(); ++object) {
    if (static_cast<int>(components[object].size()) != source->size(object)) {
      throw Error(ErrorKind::kValidationError,
                  "component at '" + base.object_name(object) +
                      "' is not total");
    }
    for (int image : components[object]) {
      if (image < 0 || image >= target->size(object)) {
        throw Error(ErrorKind::kValidationError,
                    "component at '" + base.object_name(object) +
                        "' leaves the target carrier");
      }
    }
  }
  for (int m = base.num_objects(); m < base.num_morphisms(); ++m) {
    const Morphism& morphism = base.morphism(m);
    for (int x = 0; x < source->size(morphism.cod); ++x) {
      int down_then_map = components[morphism.dom][source->Act(m, x)];
      int map_then_down = target->Act(m, components[morphism.cod][x]);
      if (down_then_map != map_then_down) {
        throw Error(ErrorKind::kNaturalityViolation,
                    "square for '" + morphism.name + "' at element '" +
                        source->element(morphism.cod, x) +
                        "' does not commute");
      }
    }
  }
  return Trusted(std::move(source), std::move(target), std::move(components));
}

PresheafMap PresheafMap::FromData(PresheafPtr source, PresheafPtr target,
                                  const MapData& data) {
  const BaseCategory& base = *source->base();
  std::vector<std::vector<int>> components(base.num_objects());
  std::vector<bool> seen(base.num_objects(), false);
  for (const auto& [object_name, graph] : data.components) {
    int object = base.FindObject(object_name);
    if (object < 0) {
      throw Error(ErrorKind::kUnknownName,
                  "component for unknown object '" + object_name + "'");
    }
    if (seen[object]) {
      throw Error(ErrorKind::kDuplicateName,
                  "component at '" + object_name + "' given twice");
    }
    seen[object] = true;
    std::vector<int> component(source->size(object), -1);
    for (const auto& [from, to] : graph) {
      int x = source->FindElement(object, from);
      int y = target->FindElement(object, to);
      if (x < 0 || y < 0) {
        throw Error(ErrorKind::kUnknownName,
                    "component at '" + object_name + "' maps '" + from +
                        "' to '" + to + "', one of which does not exist");
      }
      if (component[x] >= 0 && component[x] != y) {
        throw Error(ErrorKind::kValidationError,
                    "component at '" + object_name + "' sends '" + from +
                        "' twice");
      }
      component[x] = y;
    }
    components[object] = std::move(component);
  }
  for (int object = 0; object < base.num_objects(); ++object) {
    if (!seen[object]) components[object].assign(source->size(object), -1);
  }
  return Create(std::move(source), std::move(target), std::move(components));
}

bool PresheafMap::operator==(const PresheafMap& other) const {
  return components_ == other.components_ &&
         SamePresheaf(source_, other.source_) &&
         SamePresheaf(target_, other.target_);
}

size_t PresheafMap::hash() const {
  size_t seed = source_ ? source_->hash() : 0;
  HashCombine(seed, target_ ? target_->hash() : 0);
  for (const auto& component : components_) {
    HashCombine(seed, component.size());
    for (int image : component) HashCombine(seed, static_cast<size_t>(image));
  }
  return seed;
}

MapData PresheafMap::Describe() const {
  MapData data;
  const BaseCategory& base = *source_->base();
  for (int object = 0; object < base.num_objects(); ++object) {
    MapData::Graph graph;
    for (size_t x = 0; x < components_[object].size(); ++x) {
      graph.emplace_back(source_->element(object, static_cast<int>(x)),
                         target_->element(object, components_[object][x]));
    }
    data.components.emplace_back(base.object_name(object), std::move(graph));
  }
  return data;
}

PresheafMap Identity(const PresheafPtr& object) {
  std::vector<std::vector<int>> components(object->base()->num_objects());
  for (int o = 0; o < object->base()->num_objects(); ++o) {
    components[o].resize(object->size(o));
    for (int x = 0; x < object->size(o); ++x) components[o][x] = x;
  }
  return PresheafMap::Trusted(object, object, std::move(components));
}

PresheafMap Compose(const PresheafMap& f, const PresheafMap& g) {
  if (!SamePresheaf(f.target(), g.source())) {
    throw Error(ErrorKind::kNonComposable,
                "target of first map is not the source of the second");
  }
  std::vector<std::vector<int>> components(f.components().size());
  for (size_t object = 0; object < components.size(); ++object) {
    const auto& fc = f.component(static_cast<int>(object));
    const auto& gc = g.component(static_cast<int>(object));
    components[object].resize(fc.size());
    for (size_t x = 0; x < fc.size(); ++x) components[object][x] = gc[fc[x]];
  }
  return PresheafMap::Trusted(f.source(), g.target(), std::move(components));
}

PresheafMap Compose(std::initializer_list<PresheafMap> chain) {
  auto it = chain.begin();
  PresheafMap result = *it;
  for (++it; it != chain.end(); ++it) result = Compose(result, *it);
  return result;
}

bool IsParallel(const PresheafMap& f, const PresheafMap& g) {
  return SamePresheaf(f.source(), g.source()) &&
         SamePresheaf(f.target(), g.target());
}

bool IsIsomorphism(const PresheafMap& f) {
  for (size_t object = 0; object < f.components().size(); ++object) {
    const auto& component = f.component(static_cast<int>(object));
    if (static_cast<int>(component.size()) !=
        f.target()->size(static_cast<int>(object))) {
      return false;
    }
    std::vector<bool> hit(component.size(), false);
    for (int image : component) {
      if (hit[image]) return false;
      hit[image] = true;
    }
  }
  return true;
}

PresheafMap EmptyMap(const PresheafPtr& empty, const PresheafPtr& target) {
  return PresheafMap::Trusted(
      empty, target,
      std::vector<std::vector<int>>(empty->base()->num_objects()));
}

}  // namespace minmodel
