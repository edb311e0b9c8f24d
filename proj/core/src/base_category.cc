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

#include "minmodel/base_category.h"

#include <map>
#include <set>

#include "minmodel/error.h"

namespace minmodel {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kValidationError: return "ValidationError";
    case ErrorKind::kAssociativityViolation: return "AssociativityViolation";
    case ErrorKind::kIdentityViolation: return "IdentityViolation";
    case ErrorKind::kIncompleteTable: return "IncompleteTable";
    case ErrorKind::kFunctorialityViolation: return "FunctorialityViolation";
    case ErrorKind::kMissingAction: return "MissingAction";
    case ErrorKind::kNaturalityViolation: return "NaturalityViolation";
    case ErrorKind::kNonComposable: return "NonComposable";
    case ErrorKind::kBaseMismatch: return "BaseMismatch";
    case ErrorKind::kCoconeMismatch: return "CoconeMismatch";
    case ErrorKind::kNonCommutingSquare: return "NonCommutingSquare";
    case ErrorKind::kIncompatibleOnRelativePart:
      return "IncompatibleOnRelativePart";
    case ErrorKind::kReplayMismatch: return "ReplayMismatch";
    case ErrorKind::kFuelExhausted: return "FuelExhausted";
    case ErrorKind::kLimitExceeded: return "LimitExceeded";
    case ErrorKind::kDuplicateName: return "DuplicateName";
    case ErrorKind::kUnknownName: return "UnknownName";
    case ErrorKind::kUnknownCommand: return "UnknownCommand";
    case ErrorKind::kImplementationInvariantBroken:
      return "ImplementationInvariantBroken";
  }
  return "Error";
}

namespace {

std::string PairName(const BaseCategory& base, int f, int g) {
  return "(" + base.morphism(f).name + ";" + base.morphism(g).name + ")";
}

}  // namespace

BasePtr BaseCategory::Load(const BaseDescription& description,
                           const Limits& limits) {
  std::shared_ptr<BaseCategory> base(new BaseCategory());
  base->limits_ = limits;

  if (static_cast<int>(description.objects.size()) > limits.max_objects) {
    throw Error(ErrorKind::kLimitExceeded,
                "base has " + std::to_string(description.objects.size()) +
                    " objects, limit is " +
                    std::to_string(limits.max_objects));
  }

  std::set<std::string> names;
  for (const auto& object : description.objects) {
    if (!names.insert(object).second) {
      throw Error(ErrorKind::kDuplicateName, "object '" + object + "'");
    }
    base->objects_.push_back(object);
  }

  std::vector<std::string> identity_names;
  for (const auto& object : description.objects) {
    identity_names.push_back("id_" + object);
  }
  for (const auto& identity : description.identities) {
    int object = base->FindObject(identity.object);
    if (object < 0) {
      throw Error(ErrorKind::kUnknownName,
                  "identity for unknown object '" + identity.object + "'");
    }
    identity_names[object] = identity.name;
  }

  std::set<std::string> morphism_names;
  for (int object = 0; object < base->num_objects(); ++object) {
    if (!morphism_names.insert(identity_names[object]).second) {
      throw Error(ErrorKind::kDuplicateName,
                  "morphism '" + identity_names[object] + "'");
    }
    base->morphisms_.push_back({identity_names[object], object, object});
  }
  for (const auto& arrow : description.morphisms) {
    if (!morphism_names.insert(arrow.name).second) {
      throw Error(ErrorKind::kDuplicateName, "morphism '" + arrow.name + "'");
    }
    int dom = base->FindObject(arrow.dom);
    int cod = base->FindObject(arrow.cod);
    if (dom < 0 || cod < 0) {
      throw Error(ErrorKind::kUnknownName,
                  "morphism '" + arrow.name + "' has unknown endpoint");
    }
    base->morphisms_.push_back({arrow.name, dom, cod});
  }

  const int n = base->num_morphisms();
  base->table_.assign(static_cast<size_t>(n) * n, -1);
  std::vector<bool> given(static_cast<size_t>(n) * n, false);
  for (const auto& entry : description.compositions) {
    int first = base->FindMorphism(entry.first);
    int second = base->FindMorphism(entry.second);
    int result = base->FindMorphism(entry.result);
    if (first < 0 || second < 0 || result < 0) {
      throw Error(ErrorKind::kUnknownName,
                  "composition entry (" + entry.first + ";" + entry.second +
                      ")=" + entry.result + " names an unknown morphism");
    }
    const Morphism& f = base->morphisms_[first];
    const Morphism& g = base->morphisms_[second];
    const Morphism& h = base->morphisms_[result];
    if (f.cod != g.dom) {
      throw Error(ErrorKind::kValidationError,
                  "composition entry for non-composable pair " +
                      PairName(*base, first, second));
    }
    if (h.dom != f.dom || h.cod != g.cod) {
      throw Error(ErrorKind::kIncompleteTable,
                  "table not closed: " + PairName(*base, first, second) +
                      " = " + h.name + " has the wrong domain or codomain");
    }
    size_t slot = static_cast<size_t>(first) * n + second;
    if (given[slot] && base->table_[slot] != result) {
      throw Error(ErrorKind::kValidationError,
                  "conflicting entries for " + PairName(*base, first, second));
    }
    given[slot] = true;
    base->table_[slot] = result;
  }

  // Identity laws: explicit entries must agree, missing ones are implied.
  for (int f = 0; f < n; ++f) {
    const Morphism& m = base->morphisms_[f];
    size_t left = static_cast<size_t>(m.dom) * n + f;
    size_t right = static_cast<size_t>(f) * n + m.cod;
    if (given[left] && base->table_[left] != f) {
      throw Error(ErrorKind::kIdentityViolation,
                  PairName(*base, m.dom, f) + " != " + m.name);
    }
    if (given[right] && base->table_[right] != f) {
      throw Error(ErrorKind::kIdentityViolation,
                  PairName(*base, f, m.cod) + " != " + m.name);
    }
    base->table_[left] = f;
    base->table_[right] = f;
  }

  for (int f = 0; f < n; ++f) {
    for (int g = 0; g < n; ++g) {
      if (base->morphisms_[f].cod != base->morphisms_[g].dom) continue;
      if (base->table_[static_cast<size_t>(f) * n + g] < 0) {
        throw Error(ErrorKind::kIncompleteTable,
                    "missing composite " + PairName(*base, f, g));
      }
    }
  }

  for (int f = 0; f < n; ++f) {
    for (int g = 0; g < n; ++g) {
      int fg = base->Compose(f, g);
      if (fg < 0) continue;
      for (int h = 0; h < n; ++h) {
        int gh = base->Compose(g, h);
        if (gh < 0) continue;
        if (base->Compose(fg, h) != base->Compose(f, gh)) {
          throw Error(ErrorKind::kAssociativityViolation,
                      "triple (" + base->morphisms_[f].name + ";" +
                          base->morphisms_[g].name + ";" +
                          base->morphisms_[h].name + ")");
        }
      }
    }
  }

  base->incoming_.assign(base->num_objects(), {});
  for (int f = base->num_objects(); f < n; ++f) {
    base->incoming_[base->morphisms_[f].cod].push_back(f);
  }
  return base;
}

int BaseCategory::FindObject(std::string_view name) const {
  for (int i = 0; i < num_objects(); ++i) {
    if (objects_[i] == name) return i;
  }
  return -1;
}

int BaseCategory::FindMorphism(std::string_view name) const {
  for (int i = 0; i < num_morphisms(); ++i) {
    if (morphisms_[i].name == name) return i;
  }
  return -1;
}

BaseDescription BaseCategory::Describe() const {
  BaseDescription description;
  description.objects = objects_;
  for (int object = 0; object < num_objects(); ++object) {
    description.identities.push_back({objects_[object],
                                      morphisms_[object].name});
  }
  for (int f = num_objects(); f < num_morphisms(); ++f) {
    description.morphisms.push_back({morphisms_[f].name,
                                     objects_[morphisms_[f].dom],
                                     objects_[morphisms_[f].cod]});
  }
  for (int f = num_objects(); f < num_morphisms(); ++f) {
    for (int g = num_objects(); g < num_morphisms(); ++g) {
      int h = Compose(f, g);
      if (h >= 0) {
        description.compositions.push_back(
            {morphisms_[f].name, morphisms_[g].name, morphisms_[h].name});
      }
    }
  }
  return description;
}

bool BaseCategory::operator==(const BaseCategory& other) const {
  if (objects_ != other.objects_ || table_ != other.table_) return false;
  if (morphisms_.size() != other.morphisms_.size()) return false;
  for (size_t i = 0; i < morphisms_.size(); ++i) {
    const Morphism& a = morphisms_[i];
    const Morphism& b = other.morphisms_[i];
    if (a.name != b.name || a.dom != b.dom || a.cod != b.cod) return false;
  }
  return true;
}

bool SameBase(const BasePtr& a, const BasePtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace minmodel
