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

#ifndef INLC_BIMODAL_H_
#define INLC_BIMODAL_H_

#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "inlc/fo.h"
#include "inlc/formula.h"
#include "inlc/semantics.h"

namespace inlc {

// Two-sorted normal bimodal language over (W, P(W), R_ni, R_N):
//   world  ::= p | top | bot | ~ | & | | | -> | <>N subset | []N subset
//   subset ::= <>ni world | []ni world | ~ | & | | | top | bot
// <>N steps from a world to one of its neighbourhoods, <>ni from a subset to
// one of its members.
class BimodalFormula {
 public:
  enum class Kind {
    kVar, kTop, kBot, kNot, kAnd, kOr, kImplies,
    kDiamondN, kBoxN, kDiamondNi, kBoxNi,
  };

  static BimodalFormula var(std::string name);
  static BimodalFormula top(Sort sort = Sort::kWorld);
  static BimodalFormula bot(Sort sort = Sort::kWorld);
  // Connectives take the sort of their arguments; mixing sorts throws
  // SortMismatch.
  static BimodalFormula negation(BimodalFormula arg);
  static BimodalFormula conj(BimodalFormula a, BimodalFormula b);
  static BimodalFormula disj(BimodalFormula a, BimodalFormula b);
  static BimodalFormula implies(BimodalFormula a, BimodalFormula b);
  static BimodalFormula diamond_n(BimodalFormula subset_arg);
  static BimodalFormula box_n(BimodalFormula subset_arg);
  static BimodalFormula diamond_ni(BimodalFormula world_arg);
  static BimodalFormula box_ni(BimodalFormula world_arg);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }
  Sort sort() const { return node_->sort; }
  const std::string& name() const { return node_->name; }
  const BimodalFormula& arg() const { return node_->kids[0]; }
  const BimodalFormula& lhs() const { return node_->kids[0]; }
  const BimodalFormula& rhs() const { return node_->kids[1]; }
  std::span<const BimodalFormula> children() const { return node_->kids; }

  friend bool operator==(const BimodalFormula& a, const BimodalFormula& b);

 private:
  struct Node {
    Kind kind;
    Sort sort;
    std::string name;
    std::vector<BimodalFormula> kids;
  };
  explicit BimodalFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static BimodalFormula make(Kind k, Sort s, std::string name,
                             std::vector<BimodalFormula> kids);

  std::shared_ptr<const Node> node_;
};

// Box(a1..an; b) becomes <>N(<>ni t(a1) & ... & <>ni t(an) & []ni t(b));
// Booleans are translated homomorphically, <-> as a conjunction of arrows.
BimodalFormula tau(const Formula& phi);

using BimodalPoint = std::variant<World, WorldSet>;

// Throws SortMismatch when the point and the formula differ in sort.
bool bimodal_satisfies(const NeighbourhoodFrame& frame,
                       const Valuation& valuation, const BimodalPoint& point,
                       const BimodalFormula& chi);

// Extension of a world-sort formula.
WorldSet bimodal_extension(const NeighbourhoodFrame& frame,
                           const Valuation& valuation,
                           const BimodalFormula& chi);

// Negation normal form: -> expanded, negations only on variables.
BimodalFormula bimodal_nnf(const BimodalFormula& chi);

bool bimodal_is_positive(const BimodalFormula& chi);
bool bimodal_is_negative(const BimodalFormula& chi);
bool bimodal_is_pure(const BimodalFormula& chi);

// Sahlqvist implications of the bimodal language. After negation normal
// form the antecedent must be built from negative formulas and boxed atoms
// with <>N, <>ni, & and |. A boxed atom is a string of []N/[]ni over a
// variable, closed under & and under disjunction with a variable-free
// formula (a pure side condition, as in []N([]ni p | <>ni theta)).
bool is_bimodal_sahlqvist(const BimodalFormula& chi);

// Standard translation of the bimodal language at a world or subset
// variable.
FoFormula bimodal_st(const BimodalFormula& chi, const Var& at, FreshNames& fresh);

// Second correspondence route: tau, then the classical minimal-valuation
// algorithm for the sorted signature {R_N, R_ni}. Throws NotSahlqvistError
// when the formula is not INL-Sahlqvist and InternalError when its tau
// image falls outside the bimodal Sahlqvist class.
FoFormula correspondent_via_bimodal(const Formula& formula);

}  // namespace inlc

#endif  // INLC_BIMODAL_H_
