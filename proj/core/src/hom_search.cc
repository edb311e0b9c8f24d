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

#include "minmodel/hom_search.h"

#include <utility>

#include "minmodel/error.h"

namespace minmodel {
namespace {

// Backtracking assignment of h element by element. Assigning h(b) = c
// forces h(B(m)(b)) = C(m)(c) for every morphism m into b's object; those
// forced values are assigned immediately, so a conflict shows up as soon
// as both ends of a naturality square are known.
class Search {
 public:
  Search(const PresheafPtr& source, const PresheafPtr& target,
         const MapConstraints& constraints)
      : source_(source), target_(target), constraints_(constraints) {
    const BaseCategory& base = *source->base();
    const int objects = base.num_objects();
    offset_.resize(objects + 1, 0);
    for (int o = 0; o < objects; ++o) {
      offset_[o + 1] = offset_[o] + source->size(o);
    }
    const int vars = offset_[objects];
    object_of_.resize(vars);
    element_of_.resize(vars);
    children_.resize(vars);
    for (int o = 0; o < objects; ++o) {
      for (int x = 0; x < source->size(o); ++x) {
        int var = offset_[o] + x;
        object_of_[var] = o;
        element_of_[var] = x;
        for (int m : base.IncomingNonIdentity(o)) {
          int child = offset_[base.morphism(m).dom] + source->Act(m, x);
          children_[var].emplace_back(child, m);
        }
      }
    }
    value_.assign(vars, -1);
    has_over_ = constraints.over.has_value();
    if (has_over_ != constraints.under.has_value()) {
      throw Error(ErrorKind::kValidationError,
                  "over/under constraints must be given together");
    }
    if (has_over_) {
      if (!SamePresheaf(constraints.over->source(), target) ||
          !SamePresheaf(constraints.under->source(), source) ||
          !SamePresheaf(constraints.over->target(),
                        constraints.under->target())) {
        throw Error(ErrorKind::kNonComposable,
                    "over/under constraint does not fit the search");
      }
    }
  }

  bool Run(const std::function<bool(const PresheafMap&)>& visit) {
    ++ThreadSearchStats().searches;
    for (const auto& fixed : constraints_.fixed) {
      if (!SamePresheaf(fixed.along.target(), source_) ||
          !SamePresheaf(fixed.value.target(), target_) ||
          !SamePresheaf(fixed.along.source(), fixed.value.source())) {
        throw Error(ErrorKind::kNonComposable,
                    "fixed constraint does not fit the search");
      }
      const int objects = source_->base()->num_objects();
      for (int o = 0; o < objects; ++o) {
        const auto& along = fixed.along.component(o);
        const auto& value = fixed.value.component(o);
        for (size_t a = 0; a < along.size(); ++a) {
          if (!Assign(offset_[o] + along[a], value[a])) return true;
        }
      }
    }
    visit_ = &visit;
    return Descend(0);
  }

 private:
  bool Allowed(int var, int candidate) const {
    if (!has_over_) return true;
    int o = object_of_[var];
    return (*constraints_.over)(o, candidate) ==
           (*constraints_.under)(o, element_of_[var]);
  }

  bool Assign(int var, int candidate) {
    pending_.clear();
    pending_.emplace_back(var, candidate);
    while (!pending_.empty()) {
      auto [v, c] = pending_.back();
      pending_.pop_back();
      if (value_[v] == c) continue;
      if (value_[v] >= 0) return false;
      if (!Allowed(v, c)) return false;
      value_[v] = c;
      trail_.push_back(v);
      for (const auto& [child, m] : children_[v]) {
        pending_.emplace_back(child, target_->Act(m, c));
      }
    }
    return true;
  }

  void Undo(size_t mark) {
    while (trail_.size() > mark) {
      value_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  // Returns false iff the visitor asked to stop.
  bool Descend(int var) {
    ++ThreadSearchStats().nodes;
    const int vars = static_cast<int>(value_.size());
    while (var < vars && value_[var] >= 0) ++var;
    if (var == vars) {
      ++ThreadSearchStats().solutions;
      return (*visit_)(Materialize());
    }
    const int candidates = target_->size(object_of_[var]);
    for (int c = 0; c < candidates; ++c) {
      size_t mark = trail_.size();
      if (Assign(var, c)) {
        if (!Descend(var + 1)) {
          Undo(mark);
          return false;
        }
      }
      Undo(mark);
    }
    return true;
  }

  PresheafMap Materialize() const {
    const int objects = source_->base()->num_objects();
    std::vector<std::vector<int>> components(objects);
    for (int o = 0; o < objects; ++o) {
      components[o].assign(value_.begin() + offset_[o],
                           value_.begin() + offset_[o + 1]);
    }
    return PresheafMap::Trusted(source_, target_, std::move(components));
  }

  const PresheafPtr& source_;
  const PresheafPtr& target_;
  const MapConstraints& constraints_;
  bool has_over_ = false;
  std::vector<int> offset_;
  std::vector<int> object_of_;
  std::vector<int> element_of_;
  std::vector<std::vector<std::pair<int, int>>> children_;
  std::vector<int> value_;
  std::vector<int> trail_;
  std::vector<std::pair<int, int>> pending_;
  const std::function<bool(const PresheafMap&)>* visit_ = nullptr;
};

}  // namespace

SearchStats& ThreadSearchStats() {
  thread_local SearchStats stats;
  return stats;
}

bool ForEachMap(const PresheafPtr& source, const PresheafPtr& target,
                const MapConstraints& constraints,
                const std::function<bool(const PresheafMap&)>& visit) {
  if (!SameBase(source->base(), target->base())) {
    throw Error(ErrorKind::kBaseMismatch, "hom search across bases");
  }
  Search search(source, target, constraints);
  return search.Run(visit);
}

std::optional<PresheafMap> FindMap(const PresheafPtr& source,
                                   const PresheafPtr& target,
                                   const MapConstraints& constraints) {
  std::optional<PresheafMap> found;
  ForEachMap(source, target, constraints, [&](const PresheafMap& h) {
    found = h;
    return false;
  });
  return found;
}

uint64_t CountMaps(const PresheafPtr& source, const PresheafPtr& target,
                   const MapConstraints& constraints) {
  uint64_t count = 0;
  ForEachMap(source, target, constraints, [&](const PresheafMap&) {
    ++count;
    return true;
  });
  return count;
}

std::vector<PresheafMap> HomEnumerate(const PresheafPtr& source,
                                      const PresheafPtr& target) {
  std::vector<PresheafMap> maps;
  ForEachMap(source, target, {}, [&](const PresheafMap& h) {
    maps.push_back(h);
    return true;
  });
  return maps;
}

}  // namespace minmodel
