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

#include "minmodel/factorization.h"

#include <algorithm>

#include "minmodel/colimits.h"
#include "minmodel/error.h"
#include "minmodel/hom_search.h"

namespace minmodel {

std::string GeneratingSet::NameOf(size_t index) const {
  if (index < names.size() && !names[index].empty()) return names[index];
  return label + "[" + std::to_string(index) + "]";
}

std::string_view TruthName(Truth truth) {
  switch (truth) {
    case Truth::kFalse: return "false";
    case Truth::kTrue: return "true";
    case Truth::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

int DefaultFuel(const PresheafMap& f) {
  return 10 * f.target()->total_size();
}

namespace {

struct PendingCell {
  int generator;
  PresheafMap top;
  PresheafMap bottom;
};

std::vector<int> GeneratorOrder(size_t count, const FactorOptions& options) {
  std::vector<int> order(count);
  for (size_t k = 0; k < count; ++k) order[k] = static_cast<int>(k);
  if (options.reverse_order) std::reverse(order.begin(), order.end());
  return order;
}

}  // namespace

CellFactorization SoaFactorize(const PresheafMap& f, const GeneratingSet& set,
                               int fuel, const FactorOptions& options,
                               LiftingMemo* memo) {
  CellFactorization result;
  result.original = f;
  result.left = Identity(f.source());
  result.right = f;

  const std::vector<int> order = GeneratorOrder(set.maps.size(), options);
  while (true) {
    std::vector<PendingCell> frontier;
    for (int k : order) {
      const PresheafMap& generator = set.maps[k];
      if (memo) {
        if (auto cached = memo->Lookup(generator, result.right);
            cached && *cached) {
          continue;
        }
      }
      std::vector<PendingCell> found;
      ForEachSquare(generator, result.right, [&](const LiftingProblem& sq) {
        if (!SolveLifting(sq)) found.push_back({k, sq.top, sq.bottom});
        return true;
      });
      if (memo) memo->Store(generator, result.right, found.empty());
      if (options.reverse_order) std::reverse(found.begin(), found.end());
      frontier.insert(frontier.end(), found.begin(), found.end());
    }
    if (frontier.empty()) {
      result.status = FactorizationStatus::kComplete;
      return result;
    }
    ++result.rounds;

    // Accumulated map from the object at round start to the current one.
    PresheafMap transport = Identity(result.right.source());
    for (const auto& cell : frontier) {
      const PresheafMap& generator = set.maps[cell.generator];
      PresheafMap top = Compose(cell.top, transport);
      if (SolveLifting({generator, result.right, top, cell.bottom})) continue;
      if (result.fuel_used >= fuel) {
        result.status = FactorizationStatus::kFuelExhausted;
        return result;
      }
      // Span M <-top- U -generator-> V; existing elements come first.
      PushoutResult cell_pushout = Pushout(top, generator);
      result.right = cell_pushout.Mediate(result.right, cell.bottom);
      result.left = Compose(result.left, cell_pushout.leg_from_b);
      transport = Compose(transport, cell_pushout.leg_from_b);
      result.log.push_back(Attachment{cell.generator, result.rounds,
                                      generator, top, cell_pushout.apex});
      ++result.fuel_used;
      ++ThreadSearchStats().attachments;
    }
  }
}

bool InInj(const PresheafMap& f, const GeneratingSet& set, LiftingMemo* memo) {
  return HasRlp(f, set.maps, memo);
}

Truth InCof(const PresheafMap& f, const GeneratingSet& set, int fuel,
            LiftingMemo* memo) {
  CellFactorization factorization = SoaFactorize(f, set, fuel, {}, memo);
  if (!factorization.complete()) return Truth::kInconclusive;
  auto lift = SolveLifting({f, factorization.right, factorization.left,
                            Identity(f.target())});
  return lift ? Truth::kTrue : Truth::kFalse;
}

ReplayResult Replay(const std::vector<Attachment>& log,
                    const PresheafPtr& from) {
  ReplayResult result{from, Identity(from)};
  for (size_t n = 0; n < log.size(); ++n) {
    const Attachment& cell = log[n];
    const std::string where = "attachment " + std::to_string(n);
    if (!cell.attaching.valid() || !cell.generator_map.valid() ||
        !SamePresheaf(cell.attaching.source(), cell.generator_map.source())) {
      throw Error(ErrorKind::kReplayMismatch,
                  where + ": attaching map does not start at the generator's "
                          "domain");
    }
    if (!SamePresheaf(cell.attaching.target(), result.apex)) {
      throw Error(ErrorKind::kReplayMismatch,
                  where + ": attaching map does not end at the current object");
    }
    PushoutResult cell_pushout = Pushout(cell.attaching, cell.generator_map);
    if (!cell.result || !SamePresheaf(cell_pushout.apex, cell.result)) {
      throw Error(ErrorKind::kReplayMismatch,
                  where + ": pushout differs from the recorded one");
    }
    result.left = Compose(result.left, cell_pushout.leg_from_b);
    result.apex = cell_pushout.apex;
  }
  return result;
}

}  // namespace minmodel
