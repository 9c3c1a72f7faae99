// Copyright 2026 The inlc Authors.
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

#ifndef INLC_PRINT_H_
#define INLC_PRINT_H_

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "inlc/bimodal.h"
#include "inlc/classifier.h"
#include "inlc/fo.h"
#include "inlc/formula.h"

namespace inlc {

enum class Format { kText, kJson, kLatex };

// "text", "json" or "latex".
std::optional<Format> parse_format(std::string_view name);

// Text output re-parses to an equal AST and uses the fewest parentheses the
// grammar allows.
std::string print_inl(const Formula& phi, Format format = Format::kText);
std::string print_fo(const FoFormula& alpha, Format format = Format::kText);
std::string print_bimodal(const BimodalFormula& chi, Format format = Format::kText);

// Tagged-node encodings, {"op": ..., ...}.
nlohmann::json inl_to_json(const Formula& phi);
nlohmann::json fo_to_json(const FoFormula& alpha);
nlohmann::json bimodal_to_json(const BimodalFormula& chi);

nlohmann::json decomposition_to_json(const Decomposition& d);
nlohmann::json classification_to_json(const SahlqvistClass& c);

}  // namespace inlc

#endif  // INLC_PRINT_H_
