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

#ifndef INLC_FORMULA_H_
#define INLC_FORMULA_H_

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace inlc {

// Instantial neighbourhood formulas. A Formula is an immutable, cheaply
// copyable handle to a shared AST node.
//
// Box(a1, ..., an; b) holds at w iff some neighbourhood S of w satisfies b
// everywhere and each ai somewhere. Implies and Iff are stored for printing
// but every syntactic predicate below sees their Or/Not expansion.
class Formula {
 public:
  enum class Kind { kVar, kBot, kTop, kNot, kAnd, kOr, kImplies, kIff, kBox };

  static Formula var(std::string name);
  static Formula top();
  static Formula bot();
  static Formula negation(Formula arg);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula iff(Formula lhs, Formula rhs);
  static Formula box(std::vector<Formula> instantial, Formula universal);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }

  // kVar only.
  const std::string& name() const { return node_->name; }
  // kNot only.
  const Formula& arg() const { return node_->kids[0]; }
  // Binary connectives.
  const Formula& lhs() const { return node_->kids[0]; }
  const Formula& rhs() const { return node_->kids[1]; }
  // kBox only: the instantial coordinates and the universal coordinate.
  std::span<const Formula> instantial() const;
  const Formula& universal() const { return node_->kids.back(); }
  std::size_t arity() const { return node_->kids.size() - 1; }

  // All direct subformulas, in order (Box: instantial then universal).
  std::span<const Formula> children() const { return node_->kids; }

  std::size_t size() const;
  std::size_t depth() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Formula> kids;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Kind kind, std::string name, std::vector<Formula> kids);

  std::shared_ptr<const Node> node_;
};

enum class Polarity { kAbsent, kPositive, kNegative, kBoth };

const char* to_string(Polarity p);

// Polarity of the occurrences of `p` in `phi`. Every Box coordinate is a
// positive position.
Polarity polarity(const Formula& phi, const std::string& p);

// True iff every occurring variable is positive (resp. negative). Formulas
// without variables are both.
bool is_positive(const Formula& phi);
bool is_negative(const Formula& phi);

bool is_pure(const Formula& phi);

// zeta ::= p | bot | top | zeta & zeta | ~Box(~zeta; theta), theta pure.
bool is_pseudo_boxed_atom(const Formula& phi);

// Recognizes ~Box(~inner; theta) with theta pure and returns {inner, theta}.
struct NablaParts {
  Formula inner;
  Formula theta;
};
std::optional<NablaParts> match_nabla(const Formula& phi);

// Rewrites a -> b to ~a | b and a <-> b to (~a | b) & (~b | a), everywhere.
Formula expand_abbreviations(const Formula& phi);

// Simultaneous replacement of variables.
Formula substitute_props(const Formula& phi,
                         const std::map<std::string, Formula>& binding);

// Occurring variables in sorted order.
std::set<std::string> variables(const Formula& phi);

}  // namespace inlc

#endif  // INLC_FORMULA_H_
