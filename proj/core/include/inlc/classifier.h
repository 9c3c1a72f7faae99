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

#ifndef INLC_CLASSIFIER_H_
#define INLC_CLASSIFIER_H_

#include <optional>
#include <string>
#include <vector>

#include "inlc/formula.h"

namespace inlc {

// Three nested tiers of INL-Sahlqvist antecedents. With theta pure, zeta a
// pseudo-boxed atom and gamma negative:
//
//   very simple  phi ::= p | bot | top | phi & phi | Delta | Box(phi..; p)
//   simple       phi ::= zeta | bot | top | phi & phi | Delta | Box(phi..; zeta)
//   full         phi ::= zeta | gamma | bot | top | phi & phi | phi | phi
//                      | Delta | Box(phi..; zeta) | Box(phi..; gamma)
//
// where Delta is Box(phi..; theta). A Box whose universal coordinate is pure
// is always read as Delta.
enum class Tier { kVerySimple, kSimple, kFull, kNotSahlqvist };

const char* to_string(Tier t);

enum class Role {
  kProp,
  kTop,
  kBot,
  kPseudoBoxedAtom,
  kNegative,
  kPureTheta,
  kDelta,
  kBoxZeta,
  kBoxGamma,
  kAnd,
  kOr,
};

const char* to_string(Role r);

// Role-tagged copy of an antecedent. Box roles have the instantial
// decompositions as children followed by a leaf for the universal
// coordinate (kPureTheta, kProp/kPseudoBoxedAtom, or kNegative).
struct Decomposition {
  Role role;
  Formula formula;
  std::vector<Decomposition> children;
};

// Matchers work on the expansion of -> and <->; returned decompositions
// refer to the expanded formula. When a node fits several clauses the
// clause of the lowest tier wins, then grammar order.
std::optional<Decomposition> match_antecedent(const Formula& phi, Tier tier);

bool is_very_simple_antecedent(const Formula& phi);
bool is_simple_antecedent(const Formula& phi);
bool is_inl_sahlqvist_antecedent(const Formula& phi);

struct SahlqvistClass {
  Tier verdict = Tier::kNotSahlqvist;
  std::optional<Decomposition> decomposition;  // of the antecedent
  std::optional<Formula> antecedent;
  std::optional<Formula> consequent;
  std::string reason;  // set when verdict is kNotSahlqvist
};

// The lowest tier whose antecedent grammar matches an implication with a
// positive consequent.
SahlqvistClass classify(const Formula& phi);

}  // namespace inlc

#endif  // INLC_CLASSIFIER_H_
