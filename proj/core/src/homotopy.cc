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

#include "minmodel/homotopy.h"

#include <utility>

#include "minmodel/colimits.h"
#include "minmodel/error.h"
#include "minmodel/hom_search.h"

namespace minmodel {

CylinderPtr BuildCylinder(const PresheafMap& i, const GeneratingSet& set,
                          int fuel, const FactorOptions& options,
                          LiftingMemo* memo) {
  PushoutResult glued = Pushout(i, i);
  const PresheafMap id_y = Identity(i.target());
  PresheafMap fold = glued.Mediate(id_y, id_y);
  CellFactorization factorization =
      SoaFactorize(fold, set, fuel < 0 ? DefaultFuel(fold) : fuel, options,
                   memo);
  if (!factorization.complete()) {
    throw FuelExhausted("cylinder over a map into '" + i.target()->label() +
                        "' needs more than " +
                        std::to_string(factorization.fuel_used) +
                        " attachments");
  }
  auto cylinder = std::make_shared<CylinderObject>();
  cylinder->over = i;
  cylinder->glued = glued.apex;
  cylinder->apex = factorization.left.target();
  cylinder->incl0 = Compose(glued.leg_from_b, factorization.left);
  cylinder->incl1 = Compose(glued.leg_from_c, factorization.left);
  cylinder->collapse = factorization.right;
  cylinder->provenance = std::move(factorization);
  return cylinder;
}

HomotopyEngine::HomotopyEngine(GeneratingSet set, int fuel,
                               FactorOptions options)
    : set_(std::move(set)), fuel_(fuel), options_(options) {}

CylinderPtr HomotopyEngine::Cylinder(const PresheafMap& i) {
  if (auto it = cylinders_.find(i); it != cylinders_.end()) return it->second;
  if (exhausted_.count(i)) {
    throw FuelExhausted("cylinder construction ran out of fuel (cached)");
  }
  try {
    CylinderPtr cylinder = BuildCylinder(i, set_, fuel_, options_, &memo_);
    cylinders_.emplace(i, cylinder);
    return cylinder;
  } catch (const FuelExhausted&) {
    exhausted_.emplace(i, true);
    throw;
  }
}

std::optional<HomotopyWitness> HomotopyEngine::Homotopic(
    const PresheafMap& f0, const PresheafMap& f1, const PresheafMap& i) {
  if (!IsParallel(f0, f1) || !SamePresheaf(i.target(), f0.source())) {
    throw Error(ErrorKind::kNonComposable,
                "homotopy query needs parallel maps out of the codomain of "
                "the relative map");
  }
  if (!(Compose(i, f0) == Compose(i, f1))) {
    throw Error(ErrorKind::kIncompatibleOnRelativePart,
                "the two maps differ on the relative part");
  }
  CylinderPtr cylinder = Cylinder(i);
  MapConstraints constraints;
  constraints.fixed.push_back({cylinder->incl0, f0});
  constraints.fixed.push_back({cylinder->incl1, f1});
  auto h = FindMap(cylinder->apex, f0.target(), constraints);
  if (!h) return std::nullopt;
  return HomotopyWitness{cylinder, *h};
}

bool HomotopyEngine::IsHomotopic(const PresheafMap& f0, const PresheafMap& f1,
                                 const PresheafMap& i) {
  TripleKey key{f0, f1, i};
  if (auto it = verdicts_.find(key); it != verdicts_.end()) return it->second;
  bool result = Homotopic(f0, f1, i).has_value();
  verdicts_.emplace(std::move(key), result);
  return result;
}

std::optional<HomotopyWitness> HomotopyEngine::HomotopicAbsolute(
    const PresheafMap& f0, const PresheafMap& f1) {
  return Homotopic(f0, f1, FromInitial(f0.source()));
}

RelationOracle HomotopyEngine::RelativeHomotopy() {
  RelationOracle oracle;
  oracle.kind = RelationKind::kHomotopyRelLeft;
  oracle.tag = "homotopy rel left map";
  oracle.decide = [this](const PresheafMap& a, const PresheafMap& b,
                         const PresheafMap& left) {
    return RelationResult{IsHomotopic(a, b, left), std::nullopt};
  };
  return oracle;
}

DeformationRetractResult HomotopyEngine::IsDeformationRetract(
    const PresheafMap& f) {
  return SearchDeformation(f, false);
}

DeformationRetractResult HomotopyEngine::IsStrongDeformationRetract(
    const PresheafMap& f) {
  return SearchDeformation(f, true);
}

DeformationRetractResult HomotopyEngine::SearchDeformation(
    const PresheafMap& f, bool strong) {
  DeformationRetractResult result;
  const PresheafMap id_y = Identity(f.target());
  const PresheafMap rel = strong ? f : FromInitial(f.target());
  MapConstraints retraction;
  retraction.fixed.push_back({f, Identity(f.source())});
  ForEachMap(f.target(), f.source(), retraction, [&](const PresheafMap& g) {
    ++result.retractions_tried;
    if (auto homotopy = Homotopic(Compose(g, f), id_y, rel)) {
      result.verdict = Truth::kTrue;
      result.retraction = g;
      result.homotopy = std::move(homotopy);
      return false;
    }
    return retraction_cap_ <= 0 || result.retractions_tried < retraction_cap_;
  });
  return result;
}

PathObject BuildPathObject(const PresheafPtr& z, const GeneratingSet& j,
                           int fuel) {
  PathObject path;
  path.of = z;
  path.square = Product(z, z);
  const PresheafMap id_z = Identity(z);
  PresheafMap diagonal = path.square.Pair(id_z, id_z);
  CellFactorization factorization =
      SoaFactorize(diagonal, j, fuel < 0 ? DefaultFuel(diagonal) : fuel);
  if (!factorization.complete()) {
    throw FuelExhausted("path object for '" + z->label() +
                        "' needs more than " +
                        std::to_string(factorization.fuel_used) +
                        " attachments");
  }
  path.apex = factorization.left.target();
  path.into = factorization.left;
  path.projections = factorization.right;
  path.proj0 = Compose(path.projections, path.square.proj0);
  path.proj1 = Compose(path.projections, path.square.proj1);
  path.provenance = std::move(factorization);
  return path;
}

std::optional<PresheafMap> RightHomotopic(const PresheafMap& f0,
                                          const PresheafMap& f1,
                                          const std::optional<PresheafMap>& i,
                                          const PathObject& path) {
  if (!IsParallel(f0, f1) || !SamePresheaf(f0.target(), path.of)) {
    throw Error(ErrorKind::kNonComposable,
                "right homotopy query needs parallel maps into the path "
                "object's base");
  }
  MapConstraints constraints;
  if (i) {
    constraints.fixed.push_back({*i, Compose({*i, f0, path.into})});
  }
  constraints.over = path.projections;
  constraints.under = path.square.Pair(f0, f1);
  return FindMap(f0.source(), path.apex, constraints);
}

}  // namespace minmodel
