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

#include "inlc/classifier.h"

#include <array>
#include <span>

namespace inlc {

const char* to_string(Tier t) {
  switch (t) {
    case Tier::kVerySimple: return "VerySimple";
    case Tier::kSimple: return "Simple";
    case Tier::kFull: return "Full";
    case Tier::kNotSahlqvist: return "NotSahlqvist";
  }
  return "?";
}

const char* to_string(Role r) {
  switch (r) {
    case Role::kProp: return "prop";
    case Role::kTop: return "top";
    case Role::kBot: return "bot";
    case Role::kPseudoBoxedAtom: return "pseudo-boxed-atom";
    case Role::kNegative: return "negative";
    case Role::kPureTheta: return "pure-theta";
    case Role::kDelta: return "delta";
    case Role::kBoxZeta: return "box-zeta";
    case Role::kBoxGamma: return "box-gamma";
    case Role::kAnd: return "and";
    case Role::kOr: return "or";
  }
  return "?";
}

namespace {

using K = Formula::Kind;

enum class Clause { kProp, kBot, kTop, kAnd, kDelta, kBoxProp, kZeta, kBoxZeta,
                    kGamma, kOr, kBoxGamma };

// Clauses of each tier sorted by (tier that introduces the clause, grammar
// position).
constexpr std::array kVerySimpleOrder = {
    Clause::kProp, Clause::kBot, Clause::kTop, Clause::kAnd, Clause::kDelta,
    Clause::kBoxProp};
constexpr std::array kSimpleOrder = {
    Clause::kBot, Clause::kTop, Clause::kAnd, Clause::kDelta, Clause::kZeta,
    Clause::kBoxZeta};
constexpr std::array kFullOrder = {
    Clause::kBot, Clause::kTop, Clause::kAnd, Clause::kDelta, Clause::kZeta,
    Clause::kBoxZeta, Clause::kGamma, Clause::kOr, Clause::kBoxGamma};

std::span<const Clause> order_of(Tier tier) {
  switch (tier) {
    case Tier::kVerySimple: return kVerySimpleOrder;
    case Tier::kSimple: return kSimpleOrder;
    default: return kFullOrder;
  }
}

bool pseudo_boxed(const Formula& f) {
  switch (f.kind()) {
    case K::kVar:
    case K::kBot:
    case K::kTop:
      return true;
    case K::kAnd:
      return pseudo_boxed(f.lhs()) && pseudo_boxed(f.rhs());
    case K::kNot:
      if (auto nabla = match_nabla(f)) return pseudo_boxed(nabla->inner);
      return false;
    default:
      return false;
  }
}

std::optional<Decomposition> match_expanded(const Formula& f, Tier tier);

// Decomposes the instantial coordinates of a Box and appends a leaf for the
// universal one.
std::optional<Decomposition> match_box(const Formula& f, Tier tier, Role role,
                                       Role universal_role) {
  Decomposition d{role, f, {}};
  for (const auto& arg : f.instantial()) {
    auto sub = match_expanded(arg, tier);
    if (!sub) return std::nullopt;
    d.children.push_back(std::move(*sub));
  }
  d.children.push_back(Decomposition{universal_role, f.universal(), {}});
  return d;
}

std::optional<Decomposition> try_clause(Clause c, const Formula& f, Tier tier) {
  switch (c) {
    case Clause::kProp:
      if (f.is(K::kVar)) return Decomposition{Role::kProp, f, {}};
      return std::nullopt;
    case Clause::kBot:
      if (f.is(K::kBot)) return Decomposition{Role::kBot, f, {}};
      return std::nullopt;
    case Clause::kTop:
      if (f.is(K::kTop)) return Decomposition{Role::kTop, f, {}};
      return std::nullopt;
    case Clause::kAnd:
    case Clause::kOr: {
      if (!f.is(c == Clause::kAnd ? K::kAnd : K::kOr)) return std::nullopt;
      auto l = match_expanded(f.lhs(), tier);
      if (!l) return std::nullopt;
      auto r = match_expanded(f.rhs(), tier);
      if (!r) return std::nullopt;
      return Decomposition{c == Clause::kAnd ? Role::kAnd : Role::kOr, f,
                           {std::move(*l), std::move(*r)}};
    }
    case Clause::kDelta:
      if (!f.is(K::kBox) || !is_pure(f.universal())) return std::nullopt;
      return match_box(f, tier, Role::kDelta, Role::kPureTheta);
    case Clause::kBoxProp:
      if (!f.is(K::kBox) || !f.universal().is(K::kVar)) return std::nullopt;
      return match_box(f, tier, Role::kBoxZeta, Role::kProp);
    case Clause::kZeta:
      if (!pseudo_boxed(f)) return std::nullopt;
      return Decomposition{Role::kPseudoBoxedAtom, f, {}};
    case Clause::kBoxZeta:
      if (!f.is(K::kBox) || !pseudo_boxed(f.universal())) return std::nullopt;
      return match_box(f, tier, Role::kBoxZeta, Role::kPseudoBoxedAtom);
    case Clause::kGamma:
      if (!is_negative(f)) return std::nullopt;
      return Decomposition{Role::kNegative, f, {}};
    case Clause::kBoxGamma:
      if (!f.is(K::kBox) || !is_negative(f.universal())) return std::nullopt;
      return match_box(f, tier, Role::kBoxGamma, Role::kNegative);
  }
  return std::nullopt;
}

std::optional<Decomposition> match_expanded(const Formula& f, Tier tier) {
  for (Clause c : order_of(tier)) {
    if (auto d = try_clause(c, f, tier)) return d;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Decomposition> match_antecedent(const Formula& phi, Tier tier) {
  if (tier == Tier::kNotSahlqvist) return std::nullopt;
  return match_expanded(expand_abbreviations(phi), tier);
}

bool is_very_simple_antecedent(const Formula& phi) {
  return match_antecedent(phi, Tier::kVerySimple).has_value();
}
bool is_simple_antecedent(const Formula& phi) {
  return match_antecedent(phi, Tier::kSimple).has_value();
}
bool is_inl_sahlqvist_antecedent(const Formula& phi) {
  return match_antecedent(phi, Tier::kFull).has_value();
}

SahlqvistClass classify(const Formula& phi) {
  SahlqvistClass result;
  if (!phi.is(K::kImplies)) {
    result.reason = "not an implication";
    return result;
  }
  result.antecedent = phi.lhs();
  result.consequent = phi.rhs();
  if (!is_positive(phi.rhs())) {
    result.reason = "consequent is not positive";
    return result;
  }
  for (Tier tier : {Tier::kVerySimple, Tier::kSimple, Tier::kFull}) {
    if (auto d = match_antecedent(phi.lhs(), tier)) {
      result.verdict = tier;
      result.decomposition = std::move(d);
      return result;
    }
  }
  result.reason = "antecedent matches no INL-Sahlqvist grammar";
  return result;
}

}  // namespace inlc
