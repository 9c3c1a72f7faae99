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

#include "inlc/formula.h"

#include <algorithm>

namespace inlc {

Formula Formula::make(Kind kind, std::string name, std::vector<Formula> kids) {
  return Formula(std::make_shared<const Node>(
      Node{kind, std::move(name), std::move(kids)}));
}

Formula Formula::var(std::string name) {
  return make(Kind::kVar, std::move(name), {});
}
Formula Formula::top() {
  static const Formula kTop = make(Kind::kTop, "", {});
  return kTop;
}
Formula Formula::bot() {
  static const Formula kBot = make(Kind::kBot, "", {});
  return kBot;
}
Formula Formula::negation(Formula arg) {
  return make(Kind::kNot, "", {std::move(arg)});
}
Formula Formula::conj(Formula lhs, Formula rhs) {
  return make(Kind::kAnd, "", {std::move(lhs), std::move(rhs)});
}
Formula Formula::disj(Formula lhs, Formula rhs) {
  return make(Kind::kOr, "", {std::move(lhs), std::move(rhs)});
}
Formula Formula::implies(Formula lhs, Formula rhs) {
  return make(Kind::kImplies, "", {std::move(lhs), std::move(rhs)});
}
Formula Formula::iff(Formula lhs, Formula rhs) {
  return make(Kind::kIff, "", {std::move(lhs), std::move(rhs)});
}
Formula Formula::box(std::vector<Formula> instantial, Formula universal) {
  instantial.push_back(std::move(universal));
  return make(Kind::kBox, "", std::move(instantial));
}

std::span<const Formula> Formula::instantial() const {
  return std::span<const Formula>(node_->kids).first(node_->kids.size() - 1);
}

std::size_t Formula::size() const {
  std::size_t n = 1;
  for (const auto& k : children()) n += k.size();
  return n;
}

std::size_t Formula::depth() const {
  std::size_t d = 0;
  for (const auto& k : children()) d = std::max(d, k.depth() + 1);
  return d;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.node_->name != b.node_->name ||
      a.node_->kids.size() != b.node_->kids.size()) {
    return false;
  }
  return std::equal(a.node_->kids.begin(), a.node_->kids.end(),
                    b.node_->kids.begin());
}

const char* to_string(Polarity p) {
  switch (p) {
    case Polarity::kAbsent: return "absent";
    case Polarity::kPositive: return "positive";
    case Polarity::kNegative: return "negative";
    case Polarity::kBoth: return "both";
  }
  return "?";
}

namespace {

constexpr unsigned kPos = 1;
constexpr unsigned kNeg = 2;

// Accumulates occurrence signs per variable. `negated` is the parity of
// negations above the current node after expanding -> and <->.
void collect_signs(const Formula& phi, bool negated,
                   std::map<std::string, unsigned>& signs) {
  using K = Formula::Kind;
  switch (phi.kind()) {
    case K::kVar:
      signs[phi.name()] |= negated ? kNeg : kPos;
      return;
    case K::kBot:
    case K::kTop:
      return;
    case K::kNot:
      collect_signs(phi.arg(), !negated, signs);
      return;
    case K::kImplies:
      collect_signs(phi.lhs(), !negated, signs);
      collect_signs(phi.rhs(), negated, signs);
      return;
    case K::kIff:
      for (const auto& side : phi.children()) {
        collect_signs(side, negated, signs);
        collect_signs(side, !negated, signs);
      }
      return;
    case K::kAnd:
    case K::kOr:
    case K::kBox:
      for (const auto& k : phi.children()) collect_signs(k, negated, signs);
      return;
  }
}

std::map<std::string, unsigned> signs_of(const Formula& phi) {
  std::map<std::string, unsigned> signs;
  collect_signs(phi, false, signs);
  return signs;
}

}  // namespace

Polarity polarity(const Formula& phi, const std::string& p) {
  auto signs = signs_of(phi);
  auto it = signs.find(p);
  if (it == signs.end()) return Polarity::kAbsent;
  switch (it->second) {
    case kPos: return Polarity::kPositive;
    case kNeg: return Polarity::kNegative;
    default: return Polarity::kBoth;
  }
}

bool is_positive(const Formula& phi) {
  auto signs = signs_of(phi);
  return std::all_of(signs.begin(), signs.end(),
                     [](const auto& kv) { return kv.second == kPos; });
}

bool is_negative(const Formula& phi) {
  auto signs = signs_of(phi);
  return std::all_of(signs.begin(), signs.end(),
                     [](const auto& kv) { return kv.second == kNeg; });
}

bool is_pure(const Formula& phi) {
  if (phi.is(Formula::Kind::kVar)) return false;
  for (const auto& k : phi.children()) {
    if (!is_pure(k)) return false;
  }
  return true;
}

std::optional<NablaParts> match_nabla(const Formula& phi) {
  using K = Formula::Kind;
  if (!phi.is(K::kNot)) return std::nullopt;
  const Formula& box = phi.arg();
  if (!box.is(K::kBox) || box.arity() != 1) return std::nullopt;
  const Formula& neg_inner = box.instantial()[0];
  if (!neg_inner.is(K::kNot) || !is_pure(box.universal())) return std::nullopt;
  return NablaParts{neg_inner.arg(), box.universal()};
}

namespace {

bool pseudo_boxed_expanded(const Formula& phi) {
  using K = Formula::Kind;
  switch (phi.kind()) {
    case K::kVar:
    case K::kBot:
    case K::kTop:
      return true;
    case K::kAnd:
      return pseudo_boxed_expanded(phi.lhs()) &&
             pseudo_boxed_expanded(phi.rhs());
    case K::kNot:
      if (auto nabla = match_nabla(phi)) {
        return pseudo_boxed_expanded(nabla->inner);
      }
      return false;
    default:
      return false;
  }
}

}  // namespace

bool is_pseudo_boxed_atom(const Formula& phi) {
  return pseudo_boxed_expanded(expand_abbreviations(phi));
}

Formula expand_abbreviations(const Formula& phi) {
  using K = Formula::Kind;
  switch (phi.kind()) {
    case K::kVar:
    case K::kBot:
    case K::kTop:
      return phi;
    case K::kNot:
      return Formula::negation(expand_abbreviations(phi.arg()));
    case K::kAnd:
      return Formula::conj(expand_abbreviations(phi.lhs()),
                           expand_abbreviations(phi.rhs()));
    case K::kOr:
      return Formula::disj(expand_abbreviations(phi.lhs()),
                           expand_abbreviations(phi.rhs()));
    case K::kImplies:
      return Formula::disj(Formula::negation(expand_abbreviations(phi.lhs())),
                           expand_abbreviations(phi.rhs()));
    case K::kIff: {
      Formula a = expand_abbreviations(phi.lhs());
      Formula b = expand_abbreviations(phi.rhs());
      return Formula::conj(Formula::disj(Formula::negation(a), b),
                           Formula::disj(Formula::negation(b), a));
    }
    case K::kBox: {
      std::vector<Formula> inst;
      for (const auto& f : phi.instantial()) {
        inst.push_back(expand_abbreviations(f));
      }
      return Formula::box(std::move(inst), expand_abbreviations(phi.universal()));
    }
  }
  return phi;
}

Formula substitute_props(const Formula& phi,
                         const std::map<std::string, Formula>& binding) {
  using K = Formula::Kind;
  switch (phi.kind()) {
    case K::kVar: {
      auto it = binding.find(phi.name());
      return it == binding.end() ? phi : it->second;
    }
    case K::kBot:
    case K::kTop:
      return phi;
    case K::kNot:
      return Formula::negation(substitute_props(phi.arg(), binding));
    case K::kAnd:
      return Formula::conj(substitute_props(phi.lhs(), binding),
                           substitute_props(phi.rhs(), binding));
    case K::kOr:
      return Formula::disj(substitute_props(phi.lhs(), binding),
                           substitute_props(phi.rhs(), binding));
    case K::kImplies:
      return Formula::implies(substitute_props(phi.lhs(), binding),
                              substitute_props(phi.rhs(), binding));
    case K::kIff:
      return Formula::iff(substitute_props(phi.lhs(), binding),
                          substitute_props(phi.rhs(), binding));
    case K::kBox: {
      std::vector<Formula> inst;
      for (const auto& f : phi.instantial()) {
        inst.push_back(substitute_props(f, binding));
      }
      return Formula::box(std::move(inst),
                          substitute_props(phi.universal(), binding));
    }
  }
  return phi;
}

namespace {
void collect_vars(const Formula& phi, std::set<std::string>& out) {
  if (phi.is(Formula::Kind::kVar)) out.insert(phi.name());
  for (const auto& k : phi.children()) collect_vars(k, out);
}
}  // namespace

std::set<std::string> variables(const Formula& phi) {
  std::set<std::string> out;
  collect_vars(phi, out);
  return out;
}

}  // namespace inlc
