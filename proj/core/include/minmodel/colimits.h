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

#ifndef MINMODEL_COLIMITS_H_
#define MINMODEL_COLIMITS_H_

#include <vector>

#include "minmodel/presheaf.h"

namespace minmodel {

// Empty carriers everywhere.
PresheafPtr Initial(const BasePtr& base);
// One element "*" at every object.
PresheafPtr Terminal(const BasePtr& base);

// Unique maps out of the initial / into the terminal presheaf.
PresheafMap FromInitial(const PresheafPtr& target);
PresheafMap ToTerminal(const PresheafPtr& source);

// Tagged disjoint union: elements of the left summand are renamed "l.<x>",
// those of the right summand "r.<y>"; left elements come first.
struct CoproductResult {
  PresheafPtr apex;
  PresheafMap left;
  PresheafMap right;

  // [to_left, to_right] : apex -> T.
  PresheafMap Mediate(const PresheafMap& to_left,
                      const PresheafMap& to_right) const;
};

CoproductResult Coproduct(const PresheafPtr& x, const PresheafPtr& y);

// Pushout of a span B <-f- A -g-> C, computed as the quotient of B ⊔ C by
// the equivalence generated by f(a) ~ g(a). Each class is represented by
// its least member in the order of B ⊔ C and carries that member's name.
class PushoutResult {
 public:
  PresheafPtr apex;
  PresheafMap leg_from_b;
  PresheafMap leg_from_c;

  // The induced map apex -> T for a cocone (to_b, to_c). Throws
  // CoconeMismatch if to_b ∘ f != to_c ∘ g.
  PresheafMap Mediate(const PresheafMap& to_b, const PresheafMap& to_c) const;

 private:
  friend PushoutResult Pushout(const PresheafMap& f, const PresheafMap& g);

  PresheafMap f_;
  PresheafMap g_;
  // Per object and apex element: (from_c, index) of the representative.
  std::vector<std::vector<std::pair<bool, int>>> representative_;
};

PushoutResult Pushout(const PresheafMap& f, const PresheafMap& g);

// Pointwise cartesian product; elements "<x,y>" in lexicographic order.
struct ProductResult {
  PresheafPtr apex;
  PresheafMap proj0;
  PresheafMap proj1;

  // <to_x, to_y> : S -> apex.
  PresheafMap Pair(const PresheafMap& to_x, const PresheafMap& to_y) const;
};

ProductResult Product(const PresheafPtr& x, const PresheafPtr& y);

}  // namespace minmodel

#endif  // MINMODEL_COLIMITS_H_
