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

#include "inlc/corpus.h"

#include "inlc/parser.h"
#include "inlc/semantics.h"

namespace inlc {

namespace {

std::vector<Formula> parse_all(std::initializer_list<const char*> texts) {
  std::vector<Formula> out;
  for (const char* t : texts) out.push_back(parse_inl(t));
  return out;
}

}  // namespace

std::vector<Formula> edge_corpus() {
  return parse_all({
      "Box(; top)",
      "Box(; bot)",
      "Box(; p)",
      "~Box(; ~p)",
      "Box(; Box(; p))",
      "~Box(~p; top)",
      "~Box(~~Box(~p; top); Box(; top))",
      "~Box(~~Box(~q; ~Box(; bot)); top) -> q",
      "Box(p, q, p; top)",
      "Box(p, q, top; bot)",
      "Box(; p) <-> Box(p; top)",
      "Box(top; top)",
      "Box(bot; top)",
      "Box(p; Box(; bot))",
      "Box(p & q; p | q)",
      "Box(Box(; p); ~Box(~q; bot))",
      "(p -> q) -> Box(p; q)",
      "Box(; top) -> Box(; bot)",
      "top",
      "bot",
  });
}

std::vector<Formula> random_corpus(std::size_t count, int depth, std::uint64_t seed) {
  const std::vector<std::string> vars{"p", "q"};
  std::vector<Formula> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(random_formula(depth, vars, mix_seed(seed, i)));
  }
  return out;
}

std::vector<Formula> translation_corpus(std::uint64_t seed) {
  auto out = random_corpus(100, 3, seed);
  auto edges = edge_corpus();
  out.insert(out.end(), edges.begin(), edges.end());
  return out;
}

std::vector<Formula> sahlqvist_corpus() {
  return parse_all({
      // Very simple.
      "Box(p; top) -> p",
      "p -> Box(p; top)",
      "Box(; p) -> Box(p; top)",
      "Box(; p) -> p",
      "p -> Box(; p)",
      "Box(p, q; top) -> p & q",
      "Box(Box(p; top); top) -> p",
      "Box(p; q) -> Box(q; p)",
      "Box(; bot) -> bot",
      "p & q -> Box(p | q; top)",
      "Box(p; Box(; top)) -> Box(; Box(p; top))",
      "p -> p",
      // Simple.
      "~Box(~p; top) -> p",
      "Box(; ~Box(~p; top)) -> Box(p; top)",
      "~Box(~~Box(~p; Box(; top)); top) -> p",
      "Box(q; ~Box(~p; top)) -> Box(p; q)",
      "~Box(~(p & q); top) -> Box(p; q)",
      "Box(p; p & q) -> Box(; q)",
      "~Box(~~Box(~p; ~Box(; bot)); Box(top; top)) -> Box(p; top)",
      // Full.
      "p | Box(q; top) -> Box(p | q; top)",
      "Box(p; ~q) -> Box(p; top) | q",
      "Box(p | q; ~r) -> Box(p; top) | Box(q; top)",
      "(~p & Box(p; top)) -> Box(; top)",
      "Box(p; top) | ~Box(; p) -> Box(p; top)",
      "(p -> q) -> Box(; q) | p",
  });
}

std::vector<LabelledFormula> classifier_ground_truth() {
  return {
      // Very simple against simple.
      {"Box(p; q) -> p", Tier::kVerySimple},
      {"Box(p; top) -> p", Tier::kVerySimple},
      {"Box(p; p) -> Box(; p)", Tier::kVerySimple},
      {"Box(p; q & q) -> p", Tier::kSimple},
      // Simple against full.
      {"~Box(~p; top) -> p", Tier::kSimple},
      {"Box(p; p & q) -> q", Tier::kSimple},
      {"Box(p; ~q) -> Box(p; top)", Tier::kFull},
      {"p | Box(q; top) -> Box(p | q; top)", Tier::kFull},
      // Full against rejection.
      {"(p -> q) -> q", Tier::kFull},
      {"Box(p; Box(q; top)) -> p", Tier::kNotSahlqvist},
      {"p -> ~p", Tier::kNotSahlqvist},
      {"~~p -> p", Tier::kNotSahlqvist},
  };
}

std::vector<std::string> non_sahlqvist_controls() {
  return {
      "Box(p; Box(q; top)) -> p",
      "Box(q; Box(; Box(; p))) -> p",
      "Box(p; top) -> ~p",
  };
}

}  // namespace inlc
