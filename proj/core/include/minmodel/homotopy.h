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

#ifndef MINMODEL_HOMOTOPY_H_
#define MINMODEL_HOMOTOPY_H_

#include <memory>
#include <optional>
#include <unordered_map>

#include "minmodel/colimits.h"
#include "minmodel/factorization.h"
#include "minmodel/lifting.h"
#include "minmodel/presheaf.h"

namespace minmodel {

// Relative cylinder Cyl_X Y for i : X -> Y, obtained by factoring the fold
// map Y ⊔_X Y -> Y. collapse ∘ incl0 == collapse ∘ incl1 == id_Y.
struct CylinderObject {
  PresheafMap over;
  PresheafPtr glued;  // Y ⊔_X Y
  PresheafPtr apex;
  PresheafMap incl0;
  PresheafMap incl1;
  PresheafMap collapse;
  CellFactorization provenance;
};

using CylinderPtr = std::shared_ptr<const CylinderObject>;

// Throws FuelExhausted when the fold map cannot be factored within `fuel`.
CylinderPtr BuildCylinder(const PresheafMap& i, const GeneratingSet& set,
                          int fuel, const FactorOptions& options = {},
                          LiftingMemo* memo = nullptr);

// h : apex -> Z with h ∘ incl0 == f0 and h ∘ incl1 == f1.
struct HomotopyWitness {
  CylinderPtr cylinder;
  PresheafMap homotopy;
};

struct DeformationRetractResult {
  Truth verdict = Truth::kFalse;
  std::optional<PresheafMap> retraction;
  std::optional<HomotopyWitness> homotopy;
  int retractions_tried = 0;
};

// Decides homotopy relations over the canonical cylinders of a generating
// set. Cylinders and verdicts are cached per instance.
class HomotopyEngine {
 public:
  HomotopyEngine(GeneratingSet set, int fuel, FactorOptions options = {});

  const GeneratingSet& generating_set() const { return set_; }
  int fuel() const { return fuel_; }

  CylinderPtr Cylinder(const PresheafMap& i);

  // f0 ~_i f1. Throws IncompatibleOnRelativePart unless f0 ∘ i == f1 ∘ i.
  std::optional<HomotopyWitness> Homotopic(const PresheafMap& f0,
                                           const PresheafMap& f1,
                                           const PresheafMap& i);
  // Cached yes/no form of Homotopic.
  bool IsHomotopic(const PresheafMap& f0, const PresheafMap& f1,
                   const PresheafMap& i);
  // Relative to 0 -> Y.
  std::optional<HomotopyWitness> HomotopicAbsolute(const PresheafMap& f0,
                                                   const PresheafMap& f1);

  // ~_left, where `left` is the left map of the lifting square. For the
  // object form (left = 0 -> V) this is the absolute relation.
  RelationOracle RelativeHomotopy();

  // 0 means "try every retraction".
  void set_retraction_cap(int cap) { retraction_cap_ = cap; }

  DeformationRetractResult IsDeformationRetract(const PresheafMap& f);
  DeformationRetractResult IsStrongDeformationRetract(const PresheafMap& f);

 private:
  DeformationRetractResult SearchDeformation(const PresheafMap& f,
                                             bool strong);

  struct TripleKey {
    PresheafMap f0;
    PresheafMap f1;
    PresheafMap i;
    bool operator==(const TripleKey& other) const {
      return f0 == other.f0 && f1 == other.f1 && i == other.i;
    }
  };
  struct TripleHash {
    size_t operator()(const TripleKey& key) const {
      return (key.f0.hash() * 31 + key.f1.hash()) * 31 + key.i.hash();
    }
  };

  GeneratingSet set_;
  int fuel_;
  FactorOptions options_;
  int retraction_cap_ = 0;
  LiftingMemo memo_;
  std::unordered_map<PresheafMap, CylinderPtr, PresheafMapHash> cylinders_;
  std::unordered_map<PresheafMap, bool, PresheafMapHash> exhausted_;
  std::unordered_map<TripleKey, bool, TripleHash> verdicts_;
};

// Path object for Z over a set J: the diagonal Z -> Z × Z factored as
// into : Z -> PZ followed by <proj0, proj1> : PZ -> Z × Z.
struct PathObject {
  PresheafPtr of;
  PresheafPtr apex;
  PresheafMap into;
  PresheafMap proj0;
  PresheafMap proj1;
  PresheafMap projections;  // PZ -> Z × Z
  ProductResult square;     // Z × Z
  CellFactorization provenance;
};

// Throws FuelExhausted.
PathObject BuildPathObject(const PresheafPtr& z, const GeneratingSet& j,
                           int fuel);

// h : Y -> PZ with proj0 ∘ h == f0, proj1 ∘ h == f1, and, when `i` is
// given, h ∘ i == into ∘ f0 ∘ i.
std::optional<PresheafMap> RightHomotopic(const PresheafMap& f0,
                                          const PresheafMap& f1,
                                          const std::optional<PresheafMap>& i,
                                          const PathObject& path);

}  // namespace minmodel

#endif  // MINMODEL_HOMOTOPY_H_
