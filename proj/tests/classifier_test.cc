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

#include <gtest/gtest.h>

#include "inlc/corpus.h"
#include "inlc/parser.h"
#include "inlc/print.h"
#include "inlc/semantics.h"

namespace inlc {
namespace {

Formula P(const char* text) { return parse_inl(text); }

TEST(TierGrammarTest, VerySimple) {
  EXPECT_TRUE(is_very_simple_antecedent(P("Box(p; q)")));
  EXPECT_TRUE(is_very_simple_antecedent(P("Box(p; top)")));
  EXPECT_FALSE(is_very_simple_antecedent(P("Box(p; q & q)")));
  EXPECT_TRUE(is_very_simple_antecedent(P("p & Box(Box(p; q), top; Box(; top))")));
  EXPECT_FALSE(is_very_simple_antecedent(P("~Box(~p; top)")));
}

TEST(TierGrammarTest, Simple) {
  EXPECT_TRUE(is_simple_antecedent(P("Box(p; p & q)")));
  EXPECT_TRUE(is_simple_antecedent(P("~Box(~p; top)")));
  EXPECT_FALSE(is_simple_antecedent(P("Box(p; ~q)")));
  EXPECT_FALSE(is_simple_antecedent(P("p | q")));
}

TEST(TierGrammarTest, Full) {
  EXPECT_TRUE(is_inl_sahlqvist_antecedent(P("Box(p; ~q)")));
  EXPECT_TRUE(is_inl_sahlqvist_antecedent(P("p | Box(q; top)")));
  EXPECT_FALSE(is_inl_sahlqvist_antecedent(P("Box(p; Box(q; top))")));
  EXPECT_TRUE(is_inl_sahlqvist_antecedent(P("p -> q")));
}

TEST(ClassifyTest, Verdicts) {
  EXPECT_EQ(classify(P("Box(p; top) -> p")).verdict, Tier::kVerySimple);
  EXPECT_EQ(classify(P("Box(p; p) -> Box(; p)")).verdict, Tier::kVerySimple);
  EXPECT_EQ(classify(P("p -> ~p")).verdict, Tier::kNotSahlqvist);
  EXPECT_EQ(classify(P("Box(p; top)")).verdict, Tier::kNotSahlqvist);
  EXPECT_EQ(classify(P("p <-> p")).verdict, Tier::kNotSahlqvist);
}

TEST(ClassifyTest, ReasonsWhenRejected) {
  EXPECT_EQ(classify(P("p -> ~p")).reason, "consequent is not positive");
  EXPECT_EQ(classify(P("p")).reason, "not an implication");
  EXPECT_FALSE(classify(P("Box(p; Box(q; top)) -> p")).reason.empty());
}

TEST(ClassifyTest, GroundTruth) {
  for (const auto& [text, tier] : classifier_ground_truth()) {
    EXPECT_EQ(classify(parse_inl(text)).verdict, tier) << text;
  }
}

TEST(DecompositionTest, PureUniversalIsAlwaysDelta) {
  auto d = match_antecedent(P("Box(p; Box(; top))"), Tier::kFull);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->role, Role::kDelta);
  EXPECT_EQ(d->children.back().role, Role::kPureTheta);
}

TEST(DecompositionTest, RolesOfAFullTierAntecedent) {
  auto d = match_antecedent(P("Box(p | q; ~r) & ~Box(~p; top)"), Tier::kFull);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->role, Role::kAnd);
  const Decomposition& box = d->children[0];
  EXPECT_EQ(box.role, Role::kBoxGamma);
  ASSERT_EQ(box.children.size(), 2u);
  EXPECT_EQ(box.children[0].role, Role::kOr);
  EXPECT_EQ(box.children[1].role, Role::kNegative);
  EXPECT_EQ(d->children[1].role, Role::kPseudoBoxedAtom);
}

TEST(DecompositionTest, TieBreakPrefersVerySimpleClause) {
  auto d = match_antecedent(P("Box(p; q)"), Tier::kSimple);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->role, Role::kBoxZeta);
  // In the very simple grammar the same node is read through Box(..; p).
  auto vs = match_antecedent(P("Box(p; q)"), Tier::kVerySimple);
  ASSERT_TRUE(vs);
  EXPECT_EQ(vs->children.back().role, Role::kProp);
}

TEST(DecompositionTest, JsonShape) {
  auto j = classification_to_json(classify(P("Box(p; ~q) -> Box(p; top)")));
  EXPECT_EQ(j["verdict"], "Full");
  EXPECT_EQ(j["decomposition"]["role"], "box-gamma");
  EXPECT_EQ(j["decomposition"]["children"][1]["role"], "negative");
}

// Every node tag matches the clause it claims.
void check_consistent(const Decomposition& d) {
  using K = Formula::Kind;
  switch (d.role) {
    case Role::kProp: EXPECT_TRUE(d.formula.is(K::kVar)); break;
    case Role::kTop: EXPECT_TRUE(d.formula.is(K::kTop)); break;
    case Role::kBot: EXPECT_TRUE(d.formula.is(K::kBot)); break;
    case Role::kPseudoBoxedAtom: EXPECT_TRUE(is_pseudo_boxed_atom(d.formula)); break;
    case Role::kNegative: EXPECT_TRUE(is_negative(d.formula)); break;
    case Role::kPureTheta: EXPECT_TRUE(is_pure(d.formula)); break;
    case Role::kAnd:
    case Role::kOr:
      EXPECT_TRUE(d.formula.is(d.role == Role::kAnd ? K::kAnd : K::kOr));
      EXPECT_EQ(d.children.size(), 2u);
      break;
    case Role::kDelta:
    case Role::kBoxZeta:
    case Role::kBoxGamma:
      EXPECT_TRUE(d.formula.is(K::kBox));
      EXPECT_EQ(d.children.size(), d.formula.arity() + 1);
      break;
  }
  for (const auto& c : d.children) check_consistent(c);
}

class ClassifierPropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(ClassifierPropertyTest, TiersAreNested) {
  Formula f = random_formula(4, {"p", "q"}, mix_seed(51, GetParam()));
  if (is_very_simple_antecedent(f)) {
    EXPECT_TRUE(is_simple_antecedent(f)) << print_inl(f);
  }
  if (is_simple_antecedent(f)) {
    EXPECT_TRUE(is_inl_sahlqvist_antecedent(f)) << print_inl(f);
  }
  if (is_pseudo_boxed_atom(f)) {
    EXPECT_TRUE(is_simple_antecedent(f)) << print_inl(f);
  }
  for (Tier t : {Tier::kVerySimple, Tier::kSimple, Tier::kFull}) {
    if (auto d = match_antecedent(f, t)) check_consistent(*d);
  }
}

INSTANTIATE_TEST_SUITE_P(Random, ClassifierPropertyTest, ::testing::Range(0, 500));

}  // namespace
}  // namespace inlc
