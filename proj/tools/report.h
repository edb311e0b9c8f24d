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

#ifndef MINMODEL_TOOLS_REPORT_H_
#define MINMODEL_TOOLS_REPORT_H_

#include <string>

#include "json.hpp"
#include "minmodel/analyzer.h"
#include "minmodel/factorization.h"
#include "minmodel/homotopy.h"
#include "minmodel/presheaf.h"

namespace minmodel::tool {

using Json = nlohmann::ordered_json;

// Complete data, so that a counterexample re-validates on its own.
Json PresheafJson(const Presheaf& presheaf);
Json MapJson(const PresheafMap& map);
// Components only; endpoints referenced by label.
Json MapComponentsJson(const PresheafMap& map);

Json VerdictJson(const VerdictReport& report);
Json FactorizationJson(const CellFactorization& factorization,
                       const GeneratingSet& set);
Json CylinderJson(const CylinderObject& cylinder, const GeneratingSet& set);

std::string TruthText(Truth truth);

// Two-space indented, trailing newline.
std::string RenderReport(const Json& report);

}  // namespace minmodel::tool

#endif  // MINMODEL_TOOLS_REPORT_H_
