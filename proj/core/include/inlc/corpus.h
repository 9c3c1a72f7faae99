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

#ifndef INLC_CORPUS_H_
#define INLC_CORPUS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "inlc/classifier.h"
#include "inlc/formula.h"

namespace inlc {

// Hand-written formulas at the corners of the grammar: nullary boxes,
// nested nabla, pure side conditions, constants.
std::vector<Formula> edge_corpus();

// `count` formulas of depth <= `depth` over {p, q}.
std::vector<Formula> random_corpus(std::size_t count, int depth, std::uint64_t seed);

// The default translation corpus: 100 random formulas of depth 3 followed
// by the edge corpus.
std::vector<Formula> translation_corpus(std::uint64_t seed);

// INL-Sahlqvist implications covering all three tiers.
std::vector<Formula> sahlqvist_corpus();

struct LabelledFormula {
  std::string text;
  Tier tier;
};

// Hand-labelled classifier cases around each tier boundary.
std::vector<LabelledFormula> classifier_ground_truth();

// Implications that no tier accepts.
std::vector<std::string> non_sahlqvist_controls();

}  // namespace inlc

#endif  // INLC_CORPUS_H_
