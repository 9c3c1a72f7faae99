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

#include "inlc/parser.h"

#include <gtest/gtest.h>

#include "inlc/errors.h"
#include "inlc/print.h"
#include "inlc/semantics.h"
#include "inlc/standard_translation.h"

namespace inlc {
namespace {

Formula v(const char* n) { return Formula::var(n); }

TEST(ParserTest, BoxForms) {
  EXPECT_EQ(parse_inl("Box(p, q; r)"), Formula::box({v("p"), v("q")}, v("r")));
  EXPECT_EQ(parse_inl("Box(; top)"), Formula::box({}, Formula::top()));
  EXPECT_EQ(parse_inl("~Box(~p; top)"),
            Formula::negation(Formula::box({Formula::negation(v("p"))}, Formula::top())));
}

TEST(ParserTest, Precedence) {
  EXPECT_EQ(parse_inl("~p & q | r"),
            Formula::disj(Formula::conj(Formula::negation(v("p")), v("q")), v("r")));
  EXPECT_EQ(parse_inl("p -> q -> r"),
            Formula::implies(v("p"), Formula::implies(v("q"), v("r"))));
  EXPECT_EQ(parse_inl("p <-> q <-> r"),
            Formula::iff(Formula::iff(v("p"), v("q")), v("r")));
  EXPECT_EQ(parse_inl("p | q -> r <-> s"),
            Formula::iff(Formula::implies(Formula::disj(v("p"), v("q")), v("r")), v("s")));
  EXPECT_EQ(parse_inl("p & q & r"), Formula::conj(Formula::conj(v("p"), v("q")), v("r")));
}

TEST(ParserTest, IdentifiersAndKeywords) {
  EXPECT_EQ(parse_inl("p_1"), v("p_1"));
  EXPECT_EQ(parse_inl("topx"), v("topx"));
  EXPECT_EQ(parse_inl("  ( bot )  "), Formula::bot());
}

TEST(ParserTest, MissingCommaIsLocated) {
  try {
    parse_inl("Box(p q; r)");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.span().start, 6u);
    EXPECT_NE(e.detail().find("expected ',' or ';'"), std::string::npos);
  }
}

TEST(ParserTest, MissingSemicolonIsLocated) {
  try {
    parse_inl("Box(p)");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.span().start, 5u);
    EXPECT_NE(e.detail().find("';'"), std::string::npos);
  }
}

TEST(ParserTest, OtherErrors) {
  EXPECT_THROW(parse_inl(""), ParseError);
  EXPECT_THROW(parse_inl("p &"), ParseError);
  EXPECT_THROW(parse_inl("(p"), ParseError);
  EXPECT_THROW(parse_inl("p q"), ParseError);
  EXPECT_THROW(parse_inl("p $ q"), ParseError);
  EXPECT_THROW(parse_inl("Box"), ParseError);
  EXPECT_THROW(parse_inl("1p"), ParseError);
}

TEST(PrintTest, InlText) {
  EXPECT_EQ(print_inl(Formula::box({v("p")}, v("q"))), "Box(p; q)");
  EXPECT_EQ(print_inl(Formula::top()), "top");
  EXPECT_EQ(print_inl(parse_inl("Box(;top)")), "Box(; top)");
  EXPECT_EQ(print_inl(parse_inl("(p -> q) -> r")), "(p -> q) -> r");
  EXPECT_EQ(print_inl(parse_inl("p -> (q -> r)")), "p -> q -> r");
  EXPECT_EQ(print_inl(parse_inl("~(p & q) | r")), "~(p & q) | r");
  EXPECT_EQ(print_inl(parse_inl("p & (q & r)")), "p & (q & r)");
}

TEST(PrintTest, InlLatexAndJson) {
  EXPECT_EQ(print_inl(parse_inl("Box(p; ~q)"), Format::kLatex),
            "\\Box_{1}\\left(p; \\neg q\\right)");
  auto j = inl_to_json(parse_inl("Box(p; top)"));
  EXPECT_EQ(j["op"], "box");
  EXPECT_EQ(j["inst"][0]["op"], "var");
  EXPECT_EQ(j["univ"]["op"], "top");
}

TEST(PrintTest, FoText) {
  const Var x = Var::world("x");
  const Var X = Var::subset("X");
  EXPECT_EQ(print_fo(FoFormula::exists(X, FoFormula::rel_n(x, X))), "exists X (R_N(x,X))");
  EXPECT_EQ(print_fo(FoFormula::pred("p", x)), "P(x)");
  EXPECT_EQ(print_fo(FoFormula::negation(FoFormula::eq(x, x))), "~(x = x)");
  EXPECT_EQ(print_fo(st(parse_inl("Box(p; q)"), x)),
            "exists X0 (R_N(x,X0) & forall y1 (R_ni(X0,y1) -> Q(y1)) & "
            "exists y2 (R_ni(X0,y2) & P(y2)))");
}

TEST(PrintTest, FoJsonTags) {
  const Var x = Var::world("x");
  auto j = fo_to_json(st(parse_inl("Box(p; top)"), x));
  EXPECT_EQ(j["op"], "exists_s");
  EXPECT_EQ(j["body"]["op"], "and");
  EXPECT_EQ(j["body"]["args"][0]["op"], "rel_n");
}

TEST(PrintTest, Deterministic) {
  Formula f = parse_inl("Box(p, q; ~r) -> Box(; p | q)");
  EXPECT_EQ(print_fo(st(f, Var::world("x"))), print_fo(st(f, Var::world("x"))));
}

class RoundTripTest : public ::testing::TestWithParam<int> {};

TEST_P(RoundTripTest, TextReparsesToSameAst) {
  Formula f = random_formula(5, {"p", "q", "r"}, mix_seed(11, GetParam()));
  EXPECT_EQ(parse_inl(print_inl(f)), f) << print_inl(f);
}

INSTANTIATE_TEST_SUITE_P(Random, RoundTripTest, ::testing::Range(0, 300));

}  // namespace
}  // namespace inlc
