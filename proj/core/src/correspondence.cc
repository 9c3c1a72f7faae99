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

#include "inlc/correspondence.h"

#include "inlc/errors.h"
#include "inlc/standard_translation.h"

namespace inlc {

namespace {

using Disjuncts = std::vector<NormalFormDisjunct>;

void append(NormalFormDisjunct& into, const NormalFormDisjunct& from) {
  into.vars.insert(into.vars.end(), from.vars.begin(), from.vars.end());
  into.rel.insert(into.rel.end(), from.rel.begin(), from.rel.end());
  into.at.insert(into.at.end(), from.at.begin(), from.at.end());
  into.neg.insert(into.neg.end(), from.neg.begin(), from.neg.end());
}

// (a1 | ... ) & (b1 | ...) == (a1 & b1) | (a1 & b2) | ...
Disjuncts cross(const Disjuncts& a, const Disjuncts& b) {
  Disjuncts out;
  for (const auto& da : a) {
    for (const auto& db : b) {
      NormalFormDisjunct d = da;
      append(d, db);
      out.push_back(std::move(d));
    }
  }
  return out;
}

// Where a pseudo-boxed atom is asserted: at a fixed world, or at every
// world `var` satisfying `guard`.
struct Anchor {
  bool point;
  Var var;
  FoFormula guard;
};

class DirectBuilder {
 public:
  explicit DirectBuilder(FreshNames& fresh) : fresh_(fresh) {}

  Disjuncts normal_form(const Decomposition& d, const Var& w) {
    switch (d.role) {
      case Role::kTop:
        return {NormalFormDisjunct{}};
      case Role::kBot:
        return {};
      case Role::kProp:
      case Role::kPseudoBoxedAtom: {
        NormalFormDisjunct out;
        if (!flatten(d.formula, Anchor{true, w, FoFormula::truth()}, out)) {
          return {};
        }
        return {std::move(out)};
      }
      case Role::kNegative: {
        NormalFormDisjunct out;
        out.neg.push_back(st(d.formula, w, fresh_));
        return {std::move(out)};
      }
      case Role::kAnd:
      case Role::kOr: {
        if (d.children.size() != 2) {
          throw MalformedDecomposition("binary node without two children");
        }
        Disjuncts l = normal_form(d.children[0], w);
        Disjuncts r = normal_form(d.children[1], w);
        if (d.role == Role::kAnd) return cross(l, r);
        l.insert(l.end(), r.begin(), r.end());
        return l;
      }
      case Role::kDelta:
      case Role::kBoxZeta:
      case Role::kBoxGamma:
        return box(d, w);
      case Role::kPureTheta:
        break;
    }
    throw MalformedDecomposition(std::string("unexpected role ") +
                                 to_string(d.role) + " in antecedent");
  }

 private:
  Disjuncts box(const Decomposition& d, const Var& w) {
    if (!d.formula.is(Formula::Kind::kBox) ||
        d.children.size() != d.formula.arity() + 1) {
      throw MalformedDecomposition("box role on a non-box node");
    }
    const Decomposition& univ = d.children.back();
    NormalFormDisjunct base;
    Var set = fresh_.subset();
    base.vars.push_back(set);
    base.rel.push_back(FoFormula::rel_n(w, set));
    std::vector<Var> witnesses;
    for (std::size_t i = 0; i + 1 < d.children.size(); ++i) {
      Var y = fresh_.world();
      witnesses.push_back(y);
      base.vars.push_back(y);
      base.rel.push_back(FoFormula::rel_ni(set, y));
    }
    Var z = fresh_.world();
    switch (d.role) {
      case Role::kDelta:
        if (univ.role != Role::kPureTheta || !is_pure(univ.formula)) {
          throw MalformedDecomposition("delta without a pure coordinate");
        }
        base.rel.push_back(FoFormula::forall(
            z, FoFormula::implies(FoFormula::rel_ni(set, z),
                                  st(univ.formula, z, fresh_))));
        break;
      case Role::kBoxZeta:
        if (univ.role != Role::kProp && univ.role != Role::kPseudoBoxedAtom) {
          throw MalformedDecomposition("box-zeta without a pseudo-boxed atom");
        }
        flatten(univ.formula, Anchor{false, z, FoFormula::rel_ni(set, z)}, base);
        break;
      default:
        if (univ.role != Role::kNegative || !is_negative(univ.formula)) {
          throw MalformedDecomposition("box-gamma without a negative coordinate");
        }
        base.neg.push_back(FoFormula::forall(
            z, FoFormula::implies(FoFormula::rel_ni(set, z),
                                  st(univ.formula, z, fresh_))));
        break;
    }
    Disjuncts result{std::move(base)};
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
      result = cross(result, normal_form(d.children[i], witnesses[i]));
    }
    return result;
  }

  // Adds the conjuncts of ST(zeta) asserted at `anchor` to `out`. Returns
  // false if they are unsatisfiable outright (bot at a point).
  bool flatten(const Formula& zeta, const Anchor& anchor, NormalFormDisjunct& out) {
    using K = Formula::Kind;
    switch (zeta.kind()) {
      case K::kVar:
        if (anchor.point) {
          out.at.push_back(PointOcc{zeta.name(), anchor.var});
        } else {
          out.at.push_back(SetOcc{zeta.name(), anchor.var, anchor.guard});
        }
        return true;
      case K::kTop:
        return true;
      case K::kBot:
        if (anchor.point) return false;
        out.rel.push_back(FoFormula::forall(
            anchor.var, FoFormula::implies(anchor.guard, FoFormula::falsity())));
        return true;
      case K::kAnd:
        return flatten(zeta.lhs(), anchor, out) && flatten(zeta.rhs(), anchor, out);
      default:
        break;
    }
    auto nabla = match_nabla(zeta);
    if (!nabla) {
      throw MalformedDecomposition("not a pseudo-boxed atom");
    }
    // R_{-2,theta}(src, v) with src the anchor's world.
    Var set = fresh_.subset();
    Var v = fresh_.world();
    Var z = fresh_.world();
    auto step = [&](const Var& src) {
      return FoFormula::exists(
          set, FoFormula::conj(std::vector<FoFormula>{
                   FoFormula::rel_n(src, set), FoFormula::rel_ni(set, v),
                   FoFormula::forall(
                       z, FoFormula::implies(FoFormula::rel_ni(set, z),
                                             st(nabla->theta, z, fresh_)))}));
    };
    FoFormula guard =
        anchor.point
            ? step(anchor.var)
            : FoFormula::exists(anchor.var,
                                FoFormula::conj(anchor.guard, step(anchor.var)));
    return flatten(nabla->inner, Anchor{false, v, guard}, out);
  }

  FreshNames& fresh_;
};

}  // namespace

AntecedentNormalForm antecedent_normal_form(const Decomposition& antecedent,
                                            const Var& x, FreshNames& fresh) {
  DirectBuilder builder(fresh);
  return AntecedentNormalForm{builder.normal_form(antecedent, x)};
}

PredicateDescriptor minimal_valuation(const AntecedentNormalForm& nf,
                                      std::size_t disjunct,
                                      const std::string& predicate) {
  const Var u = Var::world("u");
  std::vector<FoFormula> cases;
  for (const auto& occ : nf.disjuncts.at(disjunct).at) {
    if (const auto* p = std::get_if<PointOcc>(&occ)) {
      if (p->predicate == predicate) cases.push_back(FoFormula::eq(u, p->at));
    } else {
      const auto& s = std::get<SetOcc>(occ);
      if (s.predicate == predicate) {
        cases.push_back(substitute_var(s.guard, s.hole, u));
      }
    }
  }
  if (cases.empty()) return {u, FoFormula::negation(FoFormula::eq(u, u))};
  if (cases.size() == 1) return {u, cases[0]};
  return {u, FoFormula::disj(std::move(cases))};
}

FoFormula correspondent_direct(const Formula& formula) {
  SahlqvistClass cls = classify(formula);
  if (cls.verdict == Tier::kNotSahlqvist) {
    throw NotSahlqvistError("not an INL-Sahlqvist formula: " + cls.reason);
  }
  FreshNames fresh;
  const Var x = default_world_var();
  AntecedentNormalForm nf = antecedent_normal_form(*cls.decomposition, x, fresh);
  const FoFormula consequent = st(*cls.consequent, x, fresh);

  std::vector<FoFormula> parts;
  for (std::size_t i = 0; i < nf.disjuncts.size(); ++i) {
    const auto& d = nf.disjuncts[i];
    FoFormula body = consequent;
    if (!d.neg.empty()) {
      FoFormula neg = d.neg.size() == 1 ? d.neg[0] : FoFormula::conj(d.neg);
      body = FoFormula::disj(FoFormula::negation(neg), body);
    }
    for (const auto& p : predicates(body)) {
      body = substitute_predicate(body, p, minimal_valuation(nf, i, p));
    }
    FoFormula part =
        d.rel.empty()
            ? body
            : FoFormula::implies(
                  d.rel.size() == 1 ? d.rel[0] : FoFormula::conj(d.rel), body);
    for (auto it = d.vars.rbegin(); it != d.vars.rend(); ++it) {
      part = FoFormula::forall(*it, part);
    }
    parts.push_back(std::move(part));
  }
  if (parts.empty()) return FoFormula::truth();
  FoFormula alpha = parts.size() == 1 ? parts[0] : FoFormula::conj(std::move(parts));
  return simplify_fo(alpha);
}

}  // namespace inlc
