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

#include "inlc/bimodal.h"

#include <algorithm>
#include <map>

#include "inlc/classifier.h"
#include "inlc/errors.h"
#include "inlc/standard_translation.h"

namespace inlc {

using BK = BimodalFormula::Kind;

BimodalFormula BimodalFormula::make(Kind k, Sort s, std::string name,
                                    std::vector<BimodalFormula> kids) {
  return BimodalFormula(std::make_shared<const Node>(
      Node{k, s, std::move(name), std::move(kids)}));
}

namespace {
Sort same_sort(const BimodalFormula& a, const BimodalFormula& b) {
  if (a.sort() != b.sort()) throw SortMismatch("connective joins two sorts");
  return a.sort();
}
void require(const BimodalFormula& f, Sort s, const char* op) {
  if (f.sort() != s) throw SortMismatch(std::string(op) + " applied at the wrong sort");
}
}  // namespace

BimodalFormula BimodalFormula::var(std::string name) {
  return make(BK::kVar, Sort::kWorld, std::move(name), {});
}
BimodalFormula BimodalFormula::top(Sort sort) { return make(BK::kTop, sort, "", {}); }
BimodalFormula BimodalFormula::bot(Sort sort) { return make(BK::kBot, sort, "", {}); }
BimodalFormula BimodalFormula::negation(BimodalFormula arg) {
  Sort s = arg.sort();
  return make(BK::kNot, s, "", {std::move(arg)});
}
BimodalFormula BimodalFormula::conj(BimodalFormula a, BimodalFormula b) {
  Sort s = same_sort(a, b);
  return make(BK::kAnd, s, "", {std::move(a), std::move(b)});
}
BimodalFormula BimodalFormula::disj(BimodalFormula a, BimodalFormula b) {
  Sort s = same_sort(a, b);
  return make(BK::kOr, s, "", {std::move(a), std::move(b)});
}
BimodalFormula BimodalFormula::implies(BimodalFormula a, BimodalFormula b) {
  Sort s = same_sort(a, b);
  return make(BK::kImplies, s, "", {std::move(a), std::move(b)});
}
BimodalFormula BimodalFormula::diamond_n(BimodalFormula arg) {
  require(arg, Sort::kSubset, "<>N");
  return make(BK::kDiamondN, Sort::kWorld, "", {std::move(arg)});
}
BimodalFormula BimodalFormula::box_n(BimodalFormula arg) {
  require(arg, Sort::kSubset, "[]N");
  return make(BK::kBoxN, Sort::kWorld, "", {std::move(arg)});
}
BimodalFormula BimodalFormula::diamond_ni(BimodalFormula arg) {
  require(arg, Sort::kWorld, "<>ni");
  return make(BK::kDiamondNi, Sort::kSubset, "", {std::move(arg)});
}
BimodalFormula BimodalFormula::box_ni(BimodalFormula arg) {
  require(arg, Sort::kWorld, "[]ni");
  return make(BK::kBoxNi, Sort::kSubset, "", {std::move(arg)});
}

bool operator==(const BimodalFormula& a, const BimodalFormula& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.sort() == b.sort() &&
         a.node_->name == b.node_->name && a.node_->kids == b.node_->kids;
}

BimodalFormula tau(const Formula& phi) {
  using K = Formula::Kind;
  switch (phi.kind()) {
    case K::kVar: return BimodalFormula::var(phi.name());
    case K::kBot: return BimodalFormula::bot();
    case K::kTop: return BimodalFormula::top();
    case K::kNot: return BimodalFormula::negation(tau(phi.arg()));
    case K::kAnd: return BimodalFormula::conj(tau(phi.lhs()), tau(phi.rhs()));
    case K::kOr: return BimodalFormula::disj(tau(phi.lhs()), tau(phi.rhs()));
    case K::kImplies:
      return BimodalFormula::implies(tau(phi.lhs()), tau(phi.rhs()));
    case K::kIff: {
      BimodalFormula a = tau(phi.lhs());
      BimodalFormula b = tau(phi.rhs());
      return BimodalFormula::conj(BimodalFormula::implies(a, b),
                                  BimodalFormula::implies(b, a));
    }
    case K::kBox: {
      std::optional<BimodalFormula> inner;
      for (const auto& arg : phi.instantial()) {
        BimodalFormula d = BimodalFormula::diamond_ni(tau(arg));
        inner = inner ? BimodalFormula::conj(*inner, d) : d;
      }
      BimodalFormula b = BimodalFormula::box_ni(tau(phi.universal()));
      return BimodalFormula::diamond_n(inner ? BimodalFormula::conj(*inner, b) : b);
    }
  }
  return BimodalFormula::bot();
}

// ---------------------------------------------------------------------------
// Semantics. World-sort extensions are WorldSets; subset-sort extensions
// are bit vectors indexed by subset encoding.

namespace {

using SubsetExtension = std::vector<bool>;

WorldSet world_ext(const NeighbourhoodFrame& f, const Valuation& v,
                   const BimodalFormula& chi);

SubsetExtension subset_ext(const NeighbourhoodFrame& f, const Valuation& v,
                           const BimodalFormula& chi) {
  const std::size_t count = f.subset_count();
  SubsetExtension out(count, false);
  switch (chi.kind()) {
    case BK::kTop:
      out.assign(count, true);
      return out;
    case BK::kBot:
      return out;
    case BK::kNot: {
      auto a = subset_ext(f, v, chi.arg());
      for (std::size_t s = 0; s < count; ++s) out[s] = !a[s];
      return out;
    }
    case BK::kAnd:
    case BK::kOr:
    case BK::kImplies: {
      auto a = subset_ext(f, v, chi.lhs());
      auto b = subset_ext(f, v, chi.rhs());
      for (std::size_t s = 0; s < count; ++s) {
        out[s] = chi.is(BK::kAnd) ? a[s] && b[s]
                 : chi.is(BK::kOr) ? a[s] || b[s]
                                   : !a[s] || b[s];
      }
      return out;
    }
    case BK::kDiamondNi:
    case BK::kBoxNi: {
      WorldSet e = world_ext(f, v, chi.arg());
      for (std::size_t s = 0; s < count; ++s) {
        WorldSet set(static_cast<std::uint32_t>(s));
        out[s] = chi.is(BK::kDiamondNi) ? set.intersects(e) : set.subset_of(e);
      }
      return out;
    }
    default:
      throw SortMismatch("world-sort formula evaluated at a subset");
  }
}

WorldSet world_ext(const NeighbourhoodFrame& f, const Valuation& v,
                   const BimodalFormula& chi) {
  const std::size_t n = f.size();
  switch (chi.kind()) {
    case BK::kVar: {
      auto it = v.find(chi.name());
      return it == v.end() ? WorldSet() : it->second & f.worlds();
    }
    case BK::kTop: return f.worlds();
    case BK::kBot: return WorldSet();
    case BK::kNot: return world_ext(f, v, chi.arg()).complement(n);
    case BK::kAnd: return world_ext(f, v, chi.lhs()) & world_ext(f, v, chi.rhs());
    case BK::kOr: return world_ext(f, v, chi.lhs()) | world_ext(f, v, chi.rhs());
    case BK::kImplies:
      return world_ext(f, v, chi.lhs()).complement(n) | world_ext(f, v, chi.rhs());
    case BK::kDiamondN:
    case BK::kBoxN: {
      // R_N successors of w are exactly N(w).
      SubsetExtension e = subset_ext(f, v, chi.arg());
      const bool diamond = chi.is(BK::kDiamondN);
      WorldSet out;
      for (World w = 0; w < n; ++w) {
        const auto& nbhd = f.neighbourhoods(w);
        bool holds = diamond
            ? std::any_of(nbhd.begin(), nbhd.end(), [&](WorldSet s) { return e[s.bits()]; })
            : std::all_of(nbhd.begin(), nbhd.end(), [&](WorldSet s) { return e[s.bits()]; });
        if (holds) out = out.with(w);
      }
      return out;
    }
    default:
      throw SortMismatch("subset-sort formula evaluated at a world");
  }
}

}  // namespace

WorldSet bimodal_extension(const NeighbourhoodFrame& frame,
                           const Valuation& valuation, const BimodalFormula& chi) {
  if (chi.sort() != Sort::kWorld) throw SortMismatch("expected a world-sort formula");
  return world_ext(frame, valuation, chi);
}

bool bimodal_satisfies(const NeighbourhoodFrame& frame, const Valuation& valuation,
                       const BimodalPoint& point, const BimodalFormula& chi) {
  if (const World* w = std::get_if<World>(&point)) {
    if (chi.sort() != Sort::kWorld) throw SortMismatch("subset formula at a world");
    if (*w >= frame.size()) throw UnknownWorld("world " + std::to_string(*w));
    return world_ext(frame, valuation, chi).contains(*w);
  }
  WorldSet s = std::get<WorldSet>(point);
  if (chi.sort() != Sort::kSubset) throw SortMismatch("world formula at a subset");
  if (!s.subset_of(frame.worlds())) throw UnknownWorld("subset outside the frame");
  return subset_ext(frame, valuation, chi)[s.bits()];
}

// ---------------------------------------------------------------------------
// Syntax

namespace {

BimodalFormula nnf(const BimodalFormula& chi, bool negate) {
  switch (chi.kind()) {
    case BK::kVar:
      return negate ? BimodalFormula::negation(chi) : chi;
    case BK::kTop:
      return negate ? BimodalFormula::bot(chi.sort()) : chi;
    case BK::kBot:
      return negate ? BimodalFormula::top(chi.sort()) : chi;
    case BK::kNot:
      return nnf(chi.arg(), !negate);
    case BK::kAnd:
    case BK::kOr: {
      BimodalFormula a = nnf(chi.lhs(), negate);
      BimodalFormula b = nnf(chi.rhs(), negate);
      return (chi.is(BK::kAnd) != negate) ? BimodalFormula::conj(a, b)
                                          : BimodalFormula::disj(a, b);
    }
    case BK::kImplies: {
      BimodalFormula a = nnf(chi.lhs(), !negate);
      BimodalFormula b = nnf(chi.rhs(), negate);
      return negate ? BimodalFormula::conj(a, b) : BimodalFormula::disj(a, b);
    }
    case BK::kDiamondN:
    case BK::kBoxN: {
      BimodalFormula a = nnf(chi.arg(), negate);
      return (chi.is(BK::kDiamondN) != negate) ? BimodalFormula::diamond_n(a)
                                               : BimodalFormula::box_n(a);
    }
    case BK::kDiamondNi:
    case BK::kBoxNi: {
      BimodalFormula a = nnf(chi.arg(), negate);
      return (chi.is(BK::kDiamondNi) != negate) ? BimodalFormula::diamond_ni(a)
                                                : BimodalFormula::box_ni(a);
    }
  }
  return chi;
}

void collect_signs(const BimodalFormula& chi, bool negated,
                   std::map<std::string, unsigned>& signs) {
  switch (chi.kind()) {
    case BK::kVar:
      signs[chi.name()] |= negated ? 2u : 1u;
      return;
    case BK::kNot:
      collect_signs(chi.arg(), !negated, signs);
      return;
    case BK::kImplies:
      collect_signs(chi.lhs(), !negated, signs);
      collect_signs(chi.rhs(), negated, signs);
      return;
    default:
      for (const auto& k : chi.children()) collect_signs(k, negated, signs);
  }
}

bool all_signs(const BimodalFormula& chi, unsigned want) {
  std::map<std::string, unsigned> signs;
  collect_signs(chi, false, signs);
  return std::all_of(signs.begin(), signs.end(),
                     [want](const auto& kv) { return kv.second == want; });
}

// Generalized boxed atom, on NNF input.
bool boxed_atom(const BimodalFormula& f) {
  switch (f.kind()) {
    case BK::kVar:
    case BK::kTop:
    case BK::kBot:
      return true;
    case BK::kAnd:
      return boxed_atom(f.lhs()) && boxed_atom(f.rhs());
    case BK::kOr:
      return (boxed_atom(f.lhs()) && bimodal_is_pure(f.rhs())) ||
             (bimodal_is_pure(f.lhs()) && boxed_atom(f.rhs()));
    case BK::kBoxN:
    case BK::kBoxNi:
      return boxed_atom(f.arg());
    default:
      return false;
  }
}

// Sahlqvist antecedent, on NNF input.
bool sahlqvist_antecedent(const BimodalFormula& f) {
  if (bimodal_is_negative(f) || boxed_atom(f)) return true;
  switch (f.kind()) {
    case BK::kAnd:
    case BK::kOr:
      return sahlqvist_antecedent(f.lhs()) && sahlqvist_antecedent(f.rhs());
    case BK::kDiamondN:
    case BK::kDiamondNi:
      return sahlqvist_antecedent(f.arg());
    default:
      return false;
  }
}

}  // namespace

BimodalFormula bimodal_nnf(const BimodalFormula& chi) { return nnf(chi, false); }

bool bimodal_is_positive(const BimodalFormula& chi) { return all_signs(chi, 1u); }
bool bimodal_is_negative(const BimodalFormula& chi) { return all_signs(chi, 2u); }
bool bimodal_is_pure(const BimodalFormula& chi) {
  if (chi.is(BK::kVar)) return false;
  return std::all_of(chi.children().begin(), chi.children().end(),
                     [](const auto& k) { return bimodal_is_pure(k); });
}

bool is_bimodal_sahlqvist(const BimodalFormula& chi) {
  if (!chi.is(BK::kImplies) || chi.sort() != Sort::kWorld) return false;
  return bimodal_is_positive(chi.rhs()) &&
         sahlqvist_antecedent(bimodal_nnf(chi.lhs()));
}

FoFormula bimodal_st(const BimodalFormula& chi, const Var& at, FreshNames& fresh) {
  if ((chi.sort() == Sort::kWorld) != (at.sort == Sort::kWorld)) {
    throw SortMismatch("translation point has the wrong sort");
  }
  switch (chi.kind()) {
    case BK::kVar: return FoFormula::pred(chi.name(), at);
    case BK::kTop: return FoFormula::truth();
    case BK::kBot: return FoFormula::falsity();
    case BK::kNot: return FoFormula::negation(bimodal_st(chi.arg(), at, fresh));
    case BK::kAnd:
    case BK::kOr:
    case BK::kImplies: {
      FoFormula a = bimodal_st(chi.lhs(), at, fresh);
      FoFormula b = bimodal_st(chi.rhs(), at, fresh);
      if (chi.is(BK::kAnd)) return FoFormula::conj(a, b);
      if (chi.is(BK::kOr)) return FoFormula::disj(a, b);
      return FoFormula::implies(a, b);
    }
    case BK::kDiamondN:
    case BK::kBoxN: {
      Var set = fresh.subset();
      FoFormula step = FoFormula::rel_n(at, set);
      FoFormula inner = bimodal_st(chi.arg(), set, fresh);
      return chi.is(BK::kDiamondN)
                 ? FoFormula::exists(set, FoFormula::conj(step, inner))
                 : FoFormula::forall(set, FoFormula::implies(step, inner));
    }
    case BK::kDiamondNi:
    case BK::kBoxNi: {
      Var y = fresh.world();
      FoFormula step = FoFormula::rel_ni(at, y);
      FoFormula inner = bimodal_st(chi.arg(), y, fresh);
      return chi.is(BK::kDiamondNi)
                 ? FoFormula::exists(y, FoFormula::conj(step, inner))
                 : FoFormula::forall(y, FoFormula::implies(step, inner));
    }
  }
  return FoFormula::falsity();
}

// ---------------------------------------------------------------------------
// Classical Sahlqvist-van Benthem algorithm for the sorted signature.

namespace {

// exists vars (/\ rel & /\ points & /\ guarded & /\ neg)
struct Branch {
  std::vector<Var> vars;
  std::vector<FoFormula> rel;
  // P(var)
  std::vector<std::pair<std::string, Var>> points;
  // forall hole (guard -> P(hole)), as {P, hole, guard}
  struct Guarded {
    std::string pred;
    Var hole;
    FoFormula guard;
  };
  std::vector<Guarded> guarded;
  std::vector<FoFormula> neg;
};

// Boxed atoms hold at `var` when `cond` holds (point), or at every `var`
// satisfying `cond` (guard).
struct Site {
  bool point;
  Var var;
  FoFormula cond;
};

class MinimalValuationEngine {
 public:
  explicit MinimalValuationEngine(FreshNames& fresh) : fresh_(fresh) {}

  std::vector<Branch> branches(const BimodalFormula& f, const Var& at) {
    if (bimodal_is_negative(f)) {
      Branch b;
      b.neg.push_back(bimodal_st(f, at, fresh_));
      return {std::move(b)};
    }
    if (boxed_atom(f)) {
      Branch b;
      if (!boxed(f, Site{true, at, FoFormula::truth()}, b)) return {};
      return {std::move(b)};
    }
    switch (f.kind()) {
      case BK::kAnd: {
        auto l = branches(f.lhs(), at);
        auto r = branches(f.rhs(), at);
        std::vector<Branch> out;
        for (const auto& a : l) {
          for (const auto& c : r) {
            Branch m = a;
            m.vars.insert(m.vars.end(), c.vars.begin(), c.vars.end());
            m.rel.insert(m.rel.end(), c.rel.begin(), c.rel.end());
            m.points.insert(m.points.end(), c.points.begin(), c.points.end());
            m.guarded.insert(m.guarded.end(), c.guarded.begin(), c.guarded.end());
            m.neg.insert(m.neg.end(), c.neg.begin(), c.neg.end());
            out.push_back(std::move(m));
          }
        }
        return out;
      }
      case BK::kOr: {
        auto l = branches(f.lhs(), at);
        auto r = branches(f.rhs(), at);
        l.insert(l.end(), r.begin(), r.end());
        return l;
      }
      case BK::kDiamondN:
      case BK::kDiamondNi: {
        const bool to_subset = f.is(BK::kDiamondN);
        Var next = to_subset ? fresh_.subset() : fresh_.world();
        auto inner = branches(f.arg(), next);
        for (auto& b : inner) {
          b.vars.insert(b.vars.begin(), next);
          b.rel.insert(b.rel.begin(), to_subset ? FoFormula::rel_n(at, next)
                                                : FoFormula::rel_ni(at, next));
        }
        return inner;
      }
      default:
        throw InternalError("antecedent leaves the bimodal Sahlqvist class");
    }
  }

 private:
  static FoFormula and_cond(const FoFormula& a, const FoFormula& b) {
    if (a.is(FoFormula::Kind::kTrue)) return b;
    return FoFormula::conj(a, b);
  }

  bool boxed(const BimodalFormula& f, const Site& site, Branch& out) {
    switch (f.kind()) {
      case BK::kVar:
        if (site.point && site.cond.is(FoFormula::Kind::kTrue)) {
          out.points.emplace_back(f.name(), site.var);
        } else if (site.point) {
          Var u = fresh_.world();
          out.guarded.push_back(
              {f.name(), u, FoFormula::conj(FoFormula::eq(u, site.var), site.cond)});
        } else {
          out.guarded.push_back({f.name(), site.var, site.cond});
        }
        return true;
      case BK::kTop:
        return true;
      case BK::kBot:
        if (site.point) {
          if (site.cond.is(FoFormula::Kind::kTrue)) return false;
          out.rel.push_back(FoFormula::negation(site.cond));
        } else {
          out.rel.push_back(FoFormula::forall(
              site.var, FoFormula::negation(site.cond)));
        }
        return true;
      case BK::kAnd:
        return boxed(f.lhs(), site, out) && boxed(f.rhs(), site, out);
      case BK::kOr: {
        // One side is a pure side condition; the other carries the atom.
        const bool right_pure = bimodal_is_pure(f.rhs()) && boxed_atom(f.lhs());
        const BimodalFormula& side = right_pure ? f.rhs() : f.lhs();
        const BimodalFormula& rest = right_pure ? f.lhs() : f.rhs();
        FoFormula escape = FoFormula::negation(bimodal_st(side, site.var, fresh_));
        return boxed(rest, Site{site.point, site.var, and_cond(site.cond, escape)}, out);
      }
      case BK::kBoxN:
      case BK::kBoxNi: {
        const bool to_subset = f.is(BK::kBoxN);
        Var next = to_subset ? fresh_.subset() : fresh_.world();
        FoFormula step = to_subset ? FoFormula::rel_n(site.var, next)
                                   : FoFormula::rel_ni(site.var, next);
        FoFormula cond = site.point
                             ? and_cond(site.cond, step)
                             : FoFormula::exists(site.var,
                                                 FoFormula::conj(site.cond, step));
        return boxed(f.arg(), Site{false, next, cond}, out);
      }
      default:
        throw InternalError("malformed boxed atom");
    }
  }

  FreshNames& fresh_;
};

PredicateDescriptor least_interpretation(const Branch& b, const std::string& p) {
  const Var u = Var::world("u");
  std::vector<FoFormula> cases;
  for (const auto& [name, at] : b.points) {
    if (name == p) cases.push_back(FoFormula::eq(u, at));
  }
  for (const auto& g : b.guarded) {
    if (g.pred == p) cases.push_back(substitute_var(g.guard, g.hole, u));
  }
  if (cases.empty()) return {u, FoFormula::falsity()};
  return {u, cases.size() == 1 ? cases[0] : FoFormula::disj(std::move(cases))};
}

}  // namespace

FoFormula correspondent_via_bimodal(const Formula& formula) {
  SahlqvistClass cls = classify(formula);
  if (cls.verdict == Tier::kNotSahlqvist) {
    throw NotSahlqvistError("not an INL-Sahlqvist formula: " + cls.reason);
  }
  const BimodalFormula chi = tau(formula);
  if (!is_bimodal_sahlqvist(chi)) {
    throw InternalError("tau image of an INL-Sahlqvist formula is not bimodal Sahlqvist");
  }
  FreshNames fresh;
  const Var x = default_world_var();
  MinimalValuationEngine engine(fresh);
  std::vector<Branch> branches = engine.branches(bimodal_nnf(chi.lhs()), x);
  const FoFormula consequent = bimodal_st(chi.rhs(), x, fresh);

  std::vector<FoFormula> conjuncts;
  for (const auto& b : branches) {
    FoFormula body = consequent;
    for (auto it = b.neg.rbegin(); it != b.neg.rend(); ++it) {
      body = FoFormula::disj(FoFormula::negation(*it), body);
    }
    for (const auto& p : predicates(body)) {
      body = substitute_predicate(body, p, least_interpretation(b, p));
    }
    FoFormula clause = body;
    if (!b.rel.empty()) {
      FoFormula guard = b.rel.size() == 1 ? b.rel[0] : FoFormula::conj(b.rel);
      clause = FoFormula::implies(guard, body);
    }
    for (auto it = b.vars.rbegin(); it != b.vars.rend(); ++it) {
      clause = FoFormula::forall(*it, clause);
    }
    conjuncts.push_back(std::move(clause));
  }
  if (conjuncts.empty()) return FoFormula::truth();
  return simplify_fo(conjuncts.size() == 1 ? conjuncts[0]
                                           : FoFormula::conj(std::move(conjuncts)));
}

}  // namespace inlc
