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

#include "minmodel/colimits.h"

#include <string>
#include <utility>

#include "disjoint_set.h"
#include "minmodel/error.h"

namespace minmodel {
namespace {

void RequireSameBase(const PresheafPtr& x, const PresheafPtr& y) {
  if (!SameBase(x->base(), y->base())) {
    throw Error(ErrorKind::kBaseMismatch, "operands live over different bases");
  }
}

struct Quotient {
  PresheafPtr apex;
  PresheafMap projection;
  // Per object: representative (index in the source of the projection) of
  // each quotient element.
  std::vector<std::vector<int>> representative;
};

// Coequalizer of a parallel pair f, g : A ⇉ S, pointwise by union-find.
Quotient Coequalize(const PresheafMap& f, const PresheafMap& g) {
  const PresheafPtr& s = f.target();
  const BasePtr& base = s->base();
  const int objects = base->num_objects();

  std::vector<std::vector<int>> class_of(objects);
  std::vector<std::vector<int>> representative(objects);
  std::vector<std::vector<std::string>> elements(objects);
  for (int o = 0; o < objects; ++o) {
    internal::DisjointSet classes(s->size(o));
    for (size_t a = 0; a < f.component(o).size(); ++a) {
      classes.Union(f.component(o)[a], g.component(o)[a]);
    }
    class_of[o].assign(s->size(o), -1);
    for (int x = 0; x < s->size(o); ++x) {
      int root = classes.Find(x);
      if (root == x) {
        class_of[o][x] = static_cast<int>(representative[o].size());
        representative[o].push_back(x);
        elements[o].push_back(s->element(o, x));
      }
    }
    for (int x = 0; x < s->size(o); ++x) {
      class_of[o][x] = class_of[o][classes.Find(x)];
    }
  }

  std::vector<std::vector<int>> actions(base->num_morphisms());
  for (int m = objects; m < base->num_morphisms(); ++m) {
    const Morphism& morphism = base->morphism(m);
    auto& action = actions[m];
    action.assign(representative[morphism.cod].size(), -1);
    for (int x = 0; x < s->size(morphism.cod); ++x) {
      int cls = class_of[morphism.cod][x];
      int image = class_of[morphism.dom][s->Act(m, x)];
      if (action[cls] >= 0 && action[cls] != image) {
        throw Error(ErrorKind::kImplementationInvariantBroken,
                    "action of '" + morphism.name +
                        "' is not well defined on the quotient");
      }
      action[cls] = image;
    }
  }

  Quotient quotient;
  quotient.apex = Presheaf::FromTables(base, std::move(elements),
                                       std::move(actions));
  quotient.projection =
      PresheafMap::Trusted(s, quotient.apex, std::move(class_of));
  quotient.representative = std::move(representative);
  return quotient;
}

}  // namespace

PresheafPtr Initial(const BasePtr& base) {
  return Presheaf::FromTables(
      base, std::vector<std::vector<std::string>>(base->num_objects()),
      std::vector<std::vector<int>>(base->num_morphisms()), "0");
}

PresheafPtr Terminal(const BasePtr& base) {
  std::vector<std::vector<std::string>> elements(base->num_objects(), {"*"});
  std::vector<std::vector<int>> actions(base->num_morphisms(), {0});
  return Presheaf::FromTables(base, std::move(elements), std::move(actions),
                              "1");
}

PresheafMap FromInitial(const PresheafPtr& target) {
  return EmptyMap(Initial(target->base()), target);
}

PresheafMap ToTerminal(const PresheafPtr& source) {
  const int objects = source->base()->num_objects();
  std::vector<std::vector<int>> components(objects);
  for (int o = 0; o < objects; ++o) components[o].assign(source->size(o), 0);
  return PresheafMap::Trusted(source, Terminal(source->base()),
                              std::move(components));
}

CoproductResult Coproduct(const PresheafPtr& x, const PresheafPtr& y) {
  RequireSameBase(x, y);
  const BasePtr& base = x->base();
  const int objects = base->num_objects();
  std::vector<std::vector<std::string>> elements(objects);
  std::vector<std::vector<int>> left(objects);
  std::vector<std::vector<int>> right(objects);
  for (int o = 0; o < objects; ++o) {
    for (int e = 0; e < x->size(o); ++e) {
      left[o].push_back(static_cast<int>(elements[o].size()));
      elements[o].push_back("l." + x->element(o, e));
    }
    for (int e = 0; e < y->size(o); ++e) {
      right[o].push_back(static_cast<int>(elements[o].size()));
      elements[o].push_back("r." + y->element(o, e));
    }
  }
  std::vector<std::vector<int>> actions(base->num_morphisms());
  for (int m = objects; m < base->num_morphisms(); ++m) {
    const Morphism& morphism = base->morphism(m);
    const int shift = x->size(morphism.dom);
    for (int e = 0; e < x->size(morphism.cod); ++e) {
      actions[m].push_back(x->Act(m, e));
    }
    for (int e = 0; e < y->size(morphism.cod); ++e) {
      actions[m].push_back(shift + y->Act(m, e));
    }
  }
  CoproductResult result;
  result.apex = Presheaf::FromTables(base, std::move(elements),
                                     std::move(actions));
  result.left = PresheafMap::Trusted(x, result.apex, std::move(left));
  result.right = PresheafMap::Trusted(y, result.apex, std::move(right));
  return result;
}

PresheafMap CoproductResult::Mediate(const PresheafMap& to_left,
                                     const PresheafMap& to_right) const {
  if (!SamePresheaf(to_left.source(), left.source()) ||
      !SamePresheaf(to_right.source(), right.source()) ||
      !SamePresheaf(to_left.target(), to_right.target())) {
    throw Error(ErrorKind::kCoconeMismatch, "cocone does not fit coproduct");
  }
  const int objects = apex->base()->num_objects();
  std::vector<std::vector<int>> components(objects);
  for (int o = 0; o < objects; ++o) {
    components[o] = to_left.component(o);
    const auto& rest = to_right.component(o);
    components[o].insert(components[o].end(), rest.begin(), rest.end());
  }
  return PresheafMap::Trusted(apex, to_left.target(), std::move(components));
}

PushoutResult Pushout(const PresheafMap& f, const PresheafMap& g) {
  RequireSameBase(f.target(), g.target());
  if (!SamePresheaf(f.source(), g.source())) {
    throw Error(ErrorKind::kValidationError,
                "pushout span legs have different sources");
  }
  CoproductResult sum = Coproduct(f.target(), g.target());
  Quotient quotient =
      Coequalize(Compose(f, sum.left), Compose(g, sum.right));

  PushoutResult result;
  result.apex = quotient.apex;
  result.leg_from_b = Compose(sum.left, quotient.projection);
  result.leg_from_c = Compose(sum.right, quotient.projection);
  result.f_ = f;
  result.g_ = g;
  const int objects = f.target()->base()->num_objects();
  result.representative_.resize(objects);
  for (int o = 0; o < objects; ++o) {
    const int left_size = f.target()->size(o);
    for (int r : quotient.representative[o]) {
      result.representative_[o].emplace_back(r >= left_size,
                                             r >= left_size ? r - left_size
                                                            : r);
    }
  }
  return result;
}

PresheafMap PushoutResult::Mediate(const PresheafMap& to_b,
                                   const PresheafMap& to_c) const {
  if (!SamePresheaf(to_b.source(), f_.target()) ||
      !SamePresheaf(to_c.source(), g_.target()) ||
      !SamePresheaf(to_b.target(), to_c.target())) {
    throw Error(ErrorKind::kCoconeMismatch, "cocone does not fit the span");
  }
  if (!(Compose(f_, to_b) == Compose(g_, to_c))) {
    throw Error(ErrorKind::kCoconeMismatch,
                "cocone legs disagree on the common source");
  }
  const int objects = apex->base()->num_objects();
  std::vector<std::vector<int>> components(objects);
  for (int o = 0; o < objects; ++o) {
    for (const auto& [from_c, index] : representative_[o]) {
      components[o].push_back(from_c ? to_c(o, index) : to_b(o, index));
    }
  }
  return PresheafMap::Trusted(apex, to_b.target(), std::move(components));
}

ProductResult Product(const PresheafPtr& x, const PresheafPtr& y) {
  RequireSameBase(x, y);
  const BasePtr& base = x->base();
  const int objects = base->num_objects();
  std::vector<std::vector<std::string>> elements(objects);
  std::vector<std::vector<int>> proj0(objects);
  std::vector<std::vector<int>> proj1(objects);
  for (int o = 0; o < objects; ++o) {
    for (int a = 0; a < x->size(o); ++a) {
      for (int b = 0; b < y->size(o); ++b) {
        elements[o].push_back("<" + x->element(o, a) + "," +
                              y->element(o, b) + ">");
        proj0[o].push_back(a);
        proj1[o].push_back(b);
      }
    }
  }
  std::vector<std::vector<int>> actions(base->num_morphisms());
  for (int m = objects; m < base->num_morphisms(); ++m) {
    const Morphism& morphism = base->morphism(m);
    const int width = y->size(morphism.dom);
    for (int a = 0; a < x->size(morphism.cod); ++a) {
      for (int b = 0; b < y->size(morphism.cod); ++b) {
        actions[m].push_back(x->Act(m, a) * width + y->Act(m, b));
      }
    }
  }
  ProductResult result;
  result.apex = Presheaf::FromTables(base, std::move(elements),
                                     std::move(actions));
  result.proj0 = PresheafMap::Trusted(result.apex, x, std::move(proj0));
  result.proj1 = PresheafMap::Trusted(result.apex, y, std::move(proj1));
  return result;
}

PresheafMap ProductResult::Pair(const PresheafMap& to_x,
                                const PresheafMap& to_y) const {
  if (!SamePresheaf(to_x.source(), to_y.source()) ||
      !SamePresheaf(to_x.target(), proj0.target()) ||
      !SamePresheaf(to_y.target(), proj1.target())) {
    throw Error(ErrorKind::kValidationError, "cone does not fit the product");
  }
  const int objects = apex->base()->num_objects();
  std::vector<std::vector<int>> components(objects);
  for (int o = 0; o < objects; ++o) {
    const int width = proj1.target()->size(o);
    for (size_t s = 0; s < to_x.component(o).size(); ++s) {
      components[o].push_back(to_x.component(o)[s] * width +
                              to_y.component(o)[s]);
    }
  }
  return PresheafMap::Trusted(to_x.source(), apex, std::move(components));
}

}  // namespace minmodel
