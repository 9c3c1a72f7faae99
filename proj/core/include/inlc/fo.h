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

#ifndef INLC_FO_H_
#define INLC_FO_H_

#include <compare>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "inlc/semantics.h"

namespace inlc {

// Two-sorted first-order logic over the frame (W, P(W), R_ni, R_N), where
// R_ni(X, x) iff x in X and R_N(x, X) iff X in N(x). Terms are variables.

enum class Sort { kWorld, kSubset };

struct Var {
  Sort sort = Sort::kWorld;
  std::string name;

  static Var world(std::string n) { return {Sort::kWorld, std::move(n)}; }
  static Var subset(std::string n) { return {Sort::kSubset, std::move(n)}; }

  friend auto operator<=>(const Var&, const Var&) = default;
};

class FoFormula {
 public:
  enum class Kind {
    kPred,     // P(x); name() is the propositional variable p.
    kRelNi,    // R_ni(X, x)
    kRelN,     // R_N(x, X)
    kEq,       // x = y, world sort only
    kTrue,
    kFalse,
    kNot,
    kAnd,      // n-ary
    kOr,       // n-ary
    kImplies,
    kForallWorld,
    kExistsWorld,
    kForallSubset,
    kExistsSubset,
  };

  static FoFormula pred(std::string name, Var arg);
  static FoFormula rel_ni(Var set, Var world);
  static FoFormula rel_n(Var world, Var set);
  static FoFormula eq(Var a, Var b);
  static FoFormula truth();
  static FoFormula falsity();
  static FoFormula negation(FoFormula arg);
  static FoFormula conj(std::vector<FoFormula> args);
  static FoFormula disj(std::vector<FoFormula> args);
  static FoFormula conj(FoFormula a, FoFormula b);
  static FoFormula disj(FoFormula a, FoFormula b);
  static FoFormula implies(FoFormula lhs, FoFormula rhs);
  // Sort of the quantifier follows the sort of `v`.
  static FoFormula forall(Var v, FoFormula body);
  static FoFormula exists(Var v, FoFormula body);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }
  bool is_quantifier() const;
  bool is_universal() const {
    return is(Kind::kForallWorld) || is(Kind::kForallSubset);
  }
  bool is_existential() const {
    return is(Kind::kExistsWorld) || is(Kind::kExistsSubset);
  }

  // kPred.
  const std::string& name() const { return node_->name; }
  // Atom arguments (pred: 1, relations and eq: 2) and the bound variable of a
  // quantifier (1).
  std::span<const Var> vars() const { return node_->vars; }
  const Var& bound() const { return node_->vars[0]; }
  const FoFormula& body() const { return node_->kids[0]; }
  const FoFormula& arg() const { return node_->kids[0]; }
  const FoFormula& lhs() const { return node_->kids[0]; }
  const FoFormula& rhs() const { return node_->kids[1]; }
  std::span<const FoFormula> children() const { return node_->kids; }

  std::size_t size() const;

  friend bool operator==(const FoFormula& a, const FoFormula& b);
  friend bool operator!=(const FoFormula& a, const FoFormula& b) {
    return !(a == b);
  }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Var> vars;
    std::vector<FoFormula> kids;
  };
  explicit FoFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static FoFormula make(Kind k, std::string name, std::vector<Var> vars,
                        std::vector<FoFormula> kids);

  std::shared_ptr<const Node> node_;
};

// A unary definable set: lambda hole. body.
struct PredicateDescriptor {
  Var hole;
  FoFormula body;
};

using FoValue = std::variant<World, WorldSet>;
using Assignment = std::map<std::string, FoValue>;

std::set<Var> free_vars(const FoFormula& f);
// Every variable name that occurs in `f`, bound or free.
std::set<std::string> all_var_names(const FoFormula& f);
std::set<std::string> predicates(const FoFormula& f);
bool is_well_sorted(const FoFormula& f);

// Tarskian evaluation. Subset quantifiers range over all 2^|W| subsets.
// Throws EvalError if a free variable or predicate has no value or a value
// of the wrong sort.
bool eval_fo(const NeighbourhoodFrame& frame, const Valuation& predicates,
             const Assignment& assignment, const FoFormula& alpha);

// Compiled evaluator for repeated evaluation of one formula on one frame.
// Quantified subformulas are memoized on the values of their free
// variables; the memo survives between calls with identical predicates.
// Not thread-safe.
class FoEvaluator {
 public:
  FoEvaluator(const NeighbourhoodFrame& frame, const FoFormula& alpha);
  ~FoEvaluator();
  FoEvaluator(FoEvaluator&&) noexcept;
  FoEvaluator& operator=(FoEvaluator&&) noexcept;

  bool operator()(const Valuation& predicates,
                  const Assignment& assignment) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Capture-avoiding replacement of variable `from` by `to` (same sort) in the
// free positions of `f`.
FoFormula substitute_var(const FoFormula& f, const Var& from, const Var& to);

// Replaces every atom name(t) by sigma.body[t / sigma.hole]. Bound variables
// of `alpha` that clash with free variables of sigma are renamed first.
FoFormula substitute_predicate(const FoFormula& alpha, const std::string& name,
                               const PredicateDescriptor& sigma);

// Equivalence-preserving cleanup: constant folding, unit and zero laws,
// flattening, vacuous quantifiers, the one-point rule, and the prenex moves
// (Ey d) & g == Ey (d & g) and ((Ey d) -> g) == Ay (d -> g) when y is not
// free in g. Afterwards no variable is bound twice or both free and bound;
// later binders are renamed with primes.
FoFormula simplify_fo(const FoFormula& alpha);

// Fresh variable supply. One counter is shared by both sorts, so names are
// y0, X1, y2, ... in allocation order.
class FreshNames {
 public:
  Var world() { return Var::world("y" + std::to_string(next_++)); }
  Var subset() { return Var::subset("X" + std::to_string(next_++)); }
  int peek() const { return next_; }

 private:
  int next_ = 0;
};

}  // namespace inlc

#endif  // INLC_FO_H_
