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

#ifndef INLC_STANDARD_TRANSLATION_H_
#define INLC_STANDARD_TRANSLATION_H_

#include "inlc/fo.h"
#include "inlc/formula.h"

namespace inlc {

// The free world variable of every correspondent and top-level translation.
inline Var default_world_var() { return Var::world("x"); }

// ST_x. Box(a1..an; b) becomes
//   exists X (R_N(x,X) & forall y (R_ni(X,y) -> ST_y(b))
//             & exists y1 (R_ni(X,y1) & ST_y1(a1)) & ...)
// with X, y, y1.. drawn from `fresh`; bot is ~(x = x) and top is x = x. No
// simplification is applied.
FoFormula st(const Formula& phi, const Var& x, FreshNames& fresh);
FoFormula st(const Formula& phi, const Var& x);

}  // namespace inlc

#endif  // INLC_STANDARD_TRANSLATION_H_
