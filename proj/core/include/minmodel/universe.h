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

#ifndef MINMODEL_UNIVERSE_H_
#define MINMODEL_UNIVERSE_H_

#include <string>
#include <vector>

#include "minmodel/presheaf.h"

namespace minmodel {

// Per-object carrier size bound for universe enumeration.
struct Bound {
  std::vector<int> per_object;

  static Bound Uniform(const BaseCategory& base, int size);
  // "3" or "v:2 e:2" style, objects by name.
  std::string ToString(const BaseCategory& base) const;
};

struct UniverseMap {
  int source = 0;
  int target = 0;
  PresheafMap map;
};

// Every presheaf within a bound (distinct as tables, not up to
// isomorphism) and every map between them. Objects are ordered by the
// carrier-size vector, then by the action tables, lexicographically; maps
// by (source, target) and then canonical hom order.
class BoundedUniverse {
 public:
  static BoundedUniverse Enumerate(const BasePtr& base, const Bound& bound);

  const BasePtr& base() const { return base_; }
  const Bound& bound() const { return bound_; }
  const std::vector<PresheafPtr>& objects() const { return objects_; }
  const std::vector<UniverseMap>& maps() const { return maps_; }

  // Indices into maps() of the maps source -> target.
  const std::vector<int>& MapsBetween(int source, int target) const {
    return between_[source * objects_.size() + target];
  }
  const std::vector<int>& MapsFrom(int source) const { return from_[source]; }
  const std::vector<int>& MapsInto(int target) const { return into_[target]; }

 private:
  BasePtr base_;
  Bound bound_;
  std::vector<PresheafPtr> objects_;
  std::vector<UniverseMap> maps_;
  std::vector<std::vector<int>> between_;
  std::vector<std::vector<int>> from_;
  std::vector<std::vector<int>> into_;
};

}  // namespace minmodel

#endif  // MINMODEL_UNIVERSE_H_
