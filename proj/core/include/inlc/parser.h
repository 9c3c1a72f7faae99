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

#ifndef INLC_PARSER_H_
#define INLC_PARSER_H_

#include <string_view>

#include "inlc/formula.h"

namespace inlc {

// Text syntax, loosest binding first:
//
//   formula ::= impl ( "<->" impl )*
//   impl    ::= disj ( "->" impl )?
//   disj    ::= conj ( "|" conj )*
//   conj    ::= neg ( "&" neg )*
//   neg     ::= "~" neg | atom
//   atom    ::= "top" | "bot" | ident | "(" formula ")"
//             | "Box" "(" [ formula { "," formula } ] ";" formula ")"
//
// `<->`, `|` and `&` associate to the left. Throws ParseError.
Formula parse_inl(std::string_view text);

}  // namespace inlc

#endif  // INLC_PARSER_H_
