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

#ifndef INLC_VERIFY_H_
#define INLC_VERIFY_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "inlc/formula.h"
#include "inlc/semantics.h"

namespace inlc {

inline constexpr std::uint64_t kDefaultSeed = 20260117;

// Frame sweep shared by every check: all frames on 1 and 2 worlds, then
// `samples` random frames for each size 3..max_worlds.
struct CheckOptions {
  std::size_t max_worlds = 3;
  std::size_t samples = 200;
  std::uint64_t seed = kDefaultSeed;
  // Only the first few counterexamples are kept; `failures` counts all.
  std::size_t keep_counterexamples = 16;
};

struct Counterexample {
  std::string kind;  // "mismatch" or "route-disagreement"
  NeighbourhoodFrame frame;
  Valuation valuation;
  World world = 0;
  std::string formula;
  std::string expected;
  std::string actual;
};

struct CheckReport {
  std::string property;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  // Subset of `failures` where two correspondents differ from each other.
  std::uint64_t route_disagreements = 0;
  std::uint64_t frames = 0;
  std::vector<Counterexample> counterexamples;
  double elapsed_seconds = 0;
  std::uint64_t seed = 0;

  bool passed() const { return failures == 0; }
  // Folds `other` into this report; counts add up and counterexamples are
  // appended up to the cap.
  void merge(const CheckReport& other, std::size_t cap);
};

nlohmann::json report_to_json(const CheckReport& report);

// Calls fn(frame) for every frame of the sweep in a fixed order.
void for_each_frame(const CheckOptions& options,
                    const std::function<void(const NeighbourhoodFrame&)>& fn);

// satisfies against eval_fo of the standard translation at x.
CheckReport check_st_correctness(const std::vector<Formula>& corpus,
                                 const CheckOptions& options);

// satisfies against bimodal_satisfies of tau.
CheckReport check_tau_correctness(const std::vector<Formula>& corpus,
                                  const CheckOptions& options);

enum class Route { kDirect, kBimodal, kBoth };

// valid_at against eval_fo of the correspondent on every frame and world.
// With Route::kBoth, disagreements between the two correspondents are
// reported separately as "route-disagreement". Throws NotSahlqvistError.
CheckReport check_correspondence(const Formula& formula, Route route,
                                 const CheckOptions& options);

// For Box(p1..pn; p) with n = 0..3: monotonicity over every pair V1 <= V2,
// and additivity in each instantial coordinate: the formula holds under V
// iff it holds under V[pi := {v}] for some v in V(pi).
CheckReport check_lemma_monotonicity(const CheckOptions& options);

// Box(p1, ..., pn; p).
Formula lemma_formula(std::size_t arity);

}  // namespace inlc

#endif  // INLC_VERIFY_H_
