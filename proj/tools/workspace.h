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

#ifndef MINMODEL_TOOLS_WORKSPACE_H_
#define MINMODEL_TOOLS_WORKSPACE_H_

#include <string>
#include <string_view>
#include <vector>

#include "minmodel/base_category.h"
#include "minmodel/factorization.h"
#include "minmodel/presheaf.h"
#include "minmodel/universe.h"

namespace minmodel::tool {

struct NamedPresheaf {
  std::string name;
  PresheafPtr presheaf;
};

struct WorkspaceMap {
  std::string name;
  std::string source;
  std::string target;
  PresheafMap map;
};

struct WorkspaceConfig {
  int fuel = 1024;
  // Empty means "3 at every object".
  std::string bound;
  bool cross_check = false;
};

// A parsed and fully validated workspace file.
struct Workspace {
  std::string base_name;
  BaseDescription base_description;
  BasePtr base;
  std::vector<NamedPresheaf> presheaves;
  std::vector<WorkspaceMap> maps;
  std::vector<GeneratingSet> sets;
  WorkspaceConfig config;

  // Throw UnknownName.
  const PresheafPtr& Presheaf(std::string_view name) const;
  const WorkspaceMap& Map(std::string_view name) const;
  const GeneratingSet& Set(std::string_view name) const;
};

// Line-oriented format:
//
//   [base NAME]
//   objects: v e
//   identity v: id_v
//   morphism sigma: v -> e
//   compose f g = h          # h = g o f
//   [presheaf NAME]
//   v: x y
//   action sigma: a->x
//   [map NAME : SRC -> DST]
//   component v: x->x y->x
//   [genset NAME]
//   maps: f g
//   [config]
//   fuel = 1024
//   bound = v:2 e:2
//   cross_check = false
//
// Throws ParseError with the line number, or the validation error of the
// offending section.
Workspace ParseWorkspace(std::string_view text);
Workspace LoadWorkspace(const std::string& path);

std::string SerializeWorkspace(const Workspace& workspace);

// "3" (every object) or "v:2 e:2". Throws ParseError.
Bound ParseBound(std::string_view text, const BaseCategory& base);

}  // namespace minmodel::tool

#endif  // MINMODEL_TOOLS_WORKSPACE_H_
