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

#ifndef INLC_CORRESPONDENCE_H_
#define INLC_CORRESPONDENCE_H_

#include <string>
#include <variant>
#include <vector>

#include "inlc/classifier.h"
#include "inlc/fo.h"
#include "inlc/formula.h"

namespace inlc {

// P(at), with `at` a world variable of the disjunct or the free variable x.
struct PointOcc {
  std::string predicate;
  Var at;
};

// forall hole (guard -> P(hole)). The guard is predicate-free.
struct SetOcc {
  std::string predicate;
  Var hole;
  FoFormula guard;
};

using AtOccurrence = std::variant<PointOcc, SetOcc>;

// One disjunct  exists vars (/\ rel & /\ at & /\ neg)  of a translated
// antecedent.
struct NormalFormDisjunct {
  std::vector<Var> vars;
  std::vector<FoFormula> rel;  // predicate-free integrities
  std::vector<AtOccurrence> at;
  std::vector<FoFormula> neg;  // negative in every predicate
};

struct AntecedentNormalForm {
  std::vector<NormalFormDisjunct> disjuncts;
};

// Walks a classifier decomposition rooted at world variable `x`. Each Box
// introduces a fresh subset variable and one world variable per instantial
// coordinate; disjunctions are distributed outward. A pseudo-boxed atom
// becomes guarded occurrences, each nabla layer composing its guard with
//   exists X (R_N(u,X) & R_ni(X,v) & forall z (R_ni(X,z) -> ST_z(theta))).
// Throws MalformedDecomposition on inconsistent tags.
AntecedentNormalForm antecedent_normal_form(const Decomposition& antecedent,
                                            const Var& x, FreshNames& fresh);

// lambda u. (u = x1 | ... | guard1(u) | ...) over the occurrences of
// `predicate` in the disjunct; lambda u. ~(u = u) if there are none.
PredicateDescriptor minimal_valuation(const AntecedentNormalForm& nf,
                                      std::size_t disjunct,
                                      const std::string& predicate);

// Local first-order correspondent alpha(x) of an INL-Sahlqvist implication:
//   /\_i forall vars_i (/\ rel_i -> [sigma_i] (~/\ neg_i | ST_x(psi)))
// simplified. Throws NotSahlqvistError when classify rejects the formula.
FoFormula correspondent_direct(const Formula& formula);

}  // namespace inlc

#endif  // INLC_CORRESPONDENCE_H_
