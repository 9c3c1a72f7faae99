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

#include "inlc/standard_translation.h"

namespace inlc {

FoFormula st(const Formula& phi, const Var& x, FreshNames& fresh) {
  using K = Formula::Kind;
  switch (phi.kind()) {
    case K::kVar:
      return FoFormula::pred(phi.name(), x);
    case K::kBot:
      return FoFormula::negation(FoFormula::eq(x, x));
    case K::kTop:
      return FoFormula::eq(x, x);
    case K::kNot:
      return FoFormula::negation(st(phi.arg(), x, fresh));
    case K::kAnd: {
      FoFormula a = st(phi.lhs(), x, fresh);
      return FoFormula::conj(a, st(phi.rhs(), x, fresh));
    }
    case K::kOr: {
      FoFormula a = st(phi.lhs(), x, fresh);
      return FoFormula::disj(a, st(phi.rhs(), x, fresh));
    }
    case K::kImplies: {
      FoFormula a = st(phi.lhs(), x, fresh);
      return FoFormula::disj(FoFormula::negation(a), st(phi.rhs(), x, fresh));
    }
    case K::kIff: {
      // Both sides are translated twice so that every bound variable stays
      // unique in the output.
      FoFormula a1 = st(phi.lhs(), x, fresh);
      FoFormula b1 = st(phi.rhs(), x, fresh);
      FoFormula b2 = st(phi.rhs(), x, fresh);
      FoFormula a2 = st(phi.lhs(), x, fresh);
      return FoFormula::conj(FoFormula::disj(FoFormula::negation(a1), b1),
                             FoFormula::disj(FoFormula::negation(b2), a2));
    }
    case K::kBox: {
      Var set = fresh.subset();
      Var y = fresh.world();
      std::vector<FoFormula> parts;
      parts.push_back(FoFormula::rel_n(x, set));
      parts.push_back(FoFormula::forall(
          y, FoFormula::implies(FoFormula::rel_ni(set, y),
                                st(phi.universal(), y, fresh))));
      for (const auto& arg : phi.instantial()) {
        Var yi = fresh.world();
        parts.push_back(FoFormula::exists(
            yi, FoFormula::conj(FoFormula::rel_ni(set, yi), st(arg, yi, fresh))));
      }
      return FoFormula::exists(set, FoFormula::conj(std::move(parts)));
    }
  }
  return FoFormula::falsity();
}

FoFormula st(const Formula& phi, const Var& x) {
  FreshNames fresh;
  return st(phi, x, fresh);
}

}  // namespace inlc
