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

#ifndef MINMODEL_FACTORIZATION_H_
#define MINMODEL_FACTORIZATION_H_

#include <string>
#include <vector>

#include "minmodel/lifting.h"
#include "minmodel/presheaf.h"

namespace minmodel {

// A finite set of generating maps. Finite presheaves are ω-small, so the
// smallness hypothesis of the small object argument holds for any set.
struct GeneratingSet {
  std::string label;
  std::vector<PresheafMap> maps;
  // Optional display names, parallel to `maps`.
  std::vector<std::string> names;

  std::string NameOf(size_t index) const;
};

enum class Truth { kFalse, kTrue, kInconclusive };
std::string_view TruthName(Truth truth);

// One cell attachment: the pushout of `generator_map` along `attaching`,
// whose apex is `result`.
struct Attachment {
  int generator = 0;
  int round = 0;
  PresheafMap generator_map;
  PresheafMap attaching;
  PresheafPtr result;
};

enum class FactorizationStatus { kComplete, kFuelExhausted };

// f == right ∘ left, with left a finite relative cell complex recorded in
// `log` and right in I-inj when complete.
struct CellFactorization {
  PresheafMap original;
  PresheafMap left;
  PresheafMap right;
  std::vector<Attachment> log;
  int fuel_used = 0;
  int rounds = 0;
  FactorizationStatus status = FactorizationStatus::kComplete;

  bool complete() const { return status == FactorizationStatus::kComplete; }
};

struct FactorOptions {
  // Scan generators (and each generator's squares) in reverse order. Used
  // to build alternative cylinders for cross-checking.
  bool reverse_order = false;
};

// Ten attachments per element of the target.
int DefaultFuel(const PresheafMap& f);

// Guarded small object argument. Each round collects, against the right
// map fixed at the start of the round, the squares from generators that
// have no lift; each is then attached (pushout of the generator along the
// transported top map) unless an earlier attachment of the same round has
// already made it liftable. Stops when a round finds nothing, or with
// FuelExhausted once `fuel` attachments were made and more are needed.
CellFactorization SoaFactorize(const PresheafMap& f, const GeneratingSet& set,
                               int fuel, const FactorOptions& options = {},
                               LiftingMemo* memo = nullptr);

bool InInj(const PresheafMap& f, const GeneratingSet& set,
           LiftingMemo* memo = nullptr);

// Retract argument: f is in I-cof iff it lifts against the right factor of
// its own factorization.
Truth InCof(const PresheafMap& f, const GeneratingSet& set, int fuel,
            LiftingMemo* memo = nullptr);

struct ReplayResult {
  PresheafPtr apex;
  PresheafMap left;
};

// Rebuilds (M, j) from the log. Throws ReplayMismatch if an attaching map
// does not start at the generator's domain or end at the current object,
// or a pushout differs from the recorded one.
ReplayResult Replay(const std::vector<Attachment>& log,
                    const PresheafPtr& from);

}  // namespace minmodel

#endif  // MINMODEL_FACTORIZATION_H_
