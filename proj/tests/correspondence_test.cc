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

#include <gtest/gtest.h>

#include <functional>

#include "inlc/corpus.h"
#include "inlc/errors.h"
#include "inlc/parser.h"
#include "inlc/print.h"
#include "inlc/standard_translation.h"
#include "oracle.h"

namespace inlc {
namespace {

const Var x = Var::world("x");

Formula P(const char* text) { return parse_inl(text); }

AntecedentNormalForm nf_of(const char* antecedent) {
  auto d = match_antecedent(P(antecedent), Tier::kFull);
  EXPECT_TRUE(d.has_value());
  FreshNames fresh;
  return antecedent_normal_form(*d, x, fresh);
}

TEST(NormalFormTest, BoxWithTop) {
  AntecedentNormalForm nf = nf_of("Box(p; top)");
  ASSERT_EQ(nf.disjuncts.size(), 1u);
  const auto& d = nf.disjuncts[0];
  const Var X0 = Var::subset("X0");
  const Var y1 = Var::world("y1");
  const Var y2 = Var::world("y2");
  ASSERT_EQ(d.rel.size(), 3u);
  EXPECT_EQ(d.rel[0], FoFormula::rel_n(x, X0));
  EXPECT_EQ(d.rel[1], FoFormula::rel_ni(X0, y1));
  EXPECT_EQ(d.rel[2], FoFormula::forall(y2, FoFormula::implies(FoFormula::rel_ni(X0, y2),
                                                               FoFormula::eq(y2, y2))));
  ASSERT_EQ(d.at.size(), 1u);
  const auto* occ = std::get_if<PointOcc>(&d.at[0]);
  ASSERT_NE(occ, nullptr);
  EXPECT_EQ(occ->predicate, "p");
  EXPECT_EQ(occ->at, y1);
  EXPECT_TRUE(d.neg.empty());
}

TEST(NormalFormTest, PropositionAndDisjunction) {
  AntecedentNormalForm p = nf_of("p");
  ASSERT_EQ(p.disjuncts.size(), 1u);
  EXPECT_TRUE(p.disjuncts[0].rel.empty());
  EXPECT_EQ(p.disjuncts[0].at.size(), 1u);
  EXPECT_EQ(nf_of("p | q").disjuncts.size(), 2u);
  EXPECT_EQ(nf_of("(p | q) & (p | ~q)").disjuncts.size(), 4u);
  EXPECT_TRUE(nf_of("bot").disjuncts.empty());
}

TEST(NormalFormTest, RelationsArePredicateFree) {
  for (const auto& f : sahlqvist_corpus()) {
    auto c = classify(f);
    FreshNames fresh;
    auto nf = antecedent_normal_form(*c.decomposition, x, fresh);
    for (const auto& d : nf.disjuncts) {
      for (const auto& r : d.rel) EXPECT_TRUE(predicates(r).empty()) << print_inl(f);
      for (const auto& occ : d.at) {
        if (const auto* s = std::get_if<SetOcc>(&occ)) {
          EXPECT_TRUE(predicates(s->guard).empty());
        }
      }
    }
  }
}

TEST(NormalFormTest, InconsistentTagsAreRejected) {
  FreshNames fresh;
  Decomposition bad{Role::kDelta, P("Box(p; q)"),
                    {Decomposition{Role::kProp, P("p"), {}},
                     Decomposition{Role::kPureTheta, P("q"), {}}}};
  EXPECT_THROW(antecedent_normal_form(bad, x, fresh), MalformedDecomposition);
  Decomposition wrong_arity{Role::kBoxZeta, P("Box(p; q)"), {}};
  EXPECT_THROW(antecedent_normal_form(wrong_arity, x, fresh), MalformedDecomposition);
  Decomposition theta_at_top{Role::kPureTheta, P("top"), {}};
  EXPECT_THROW(antecedent_normal_form(theta_at_top, x, fresh), MalformedDecomposition);
}

TEST(MinimalValuationTest, Examples) {
  const Var u = Var::world("u");
  auto point = minimal_valuation(nf_of("Box(p; top)"), 0, "p");
  EXPECT_EQ(point.hole, u);
  EXPECT_EQ(point.body, FoFormula::eq(u, Var::world("y1")));

  auto guarded = minimal_valuation(nf_of("Box(; p)"), 0, "p");
  EXPECT_EQ(guarded.body, FoFormula::rel_ni(Var::subset("X0"), u));

  auto absent = minimal_valuation(nf_of("Box(; p)"), 0, "q");
  EXPECT_EQ(absent.body, FoFormula::negation(FoFormula::eq(u, u)));

  auto both = minimal_valuation(nf_of("p & Box(; p)"), 0, "p");
  EXPECT_EQ(print_fo(both.body), "u = x | R_ni(X0,u)");
}

// Frame conditions written out by hand, evaluated on the reference frame.
using Condition = std::function<bool(const oracle::Frame&, int)>;

bool condition_reflexive_points(const oracle::Frame& f, int w) {
  // Every member of every neighbourhood of w is w itself.
  for (const auto& s : f.n[w]) {
    for (int y : s) {
      if (y != w) return false;
    }
  }
  return true;
}

bool condition_contains_self(const oracle::Frame& f, int w) {
  for (const auto& s : f.n[w]) {
    if (s.count(w)) return true;
  }
  return false;
}

bool condition_overlapping(const oracle::Frame& f, int w) {
  // Every neighbourhood of w meets some non-empty neighbourhood of w.
  for (const auto& s : f.n[w]) {
    bool met = false;
    for (const auto& t : f.n[w]) {
      for (int y : t) met = met || s.count(y);
    }
    if (!met) return false;
  }
  return true;
}

void expect_matches_condition(const char* text, const Condition& cond) {
  Formula f = P(text);
  FoFormula alpha = correspondent_direct(f);
  for (int n = 1; n <= 2; ++n) {
    for (const auto& ref : oracle::all_frames(n)) {
      NeighbourhoodFrame frame = oracle::to_library(ref);
      for (int w = 0; w < n; ++w) {
        const bool expected = cond(ref, w);
        ASSERT_EQ(oracle::valid_at(ref, w, f), expected) << text;
        ASSERT_EQ(eval_fo(frame, {}, {{"x", static_cast<World>(w)}}, alpha), expected)
            << text << "\n" << print_fo(alpha);
      }
    }
  }
}

TEST(CorrespondentTest, WorkedExamples) {
  expect_matches_condition("Box(p; top) -> p", condition_reflexive_points);
  expect_matches_condition("p -> Box(p; top)", condition_contains_self);
  expect_matches_condition("Box(; p) -> Box(p; top)", condition_overlapping);
}

TEST(CorrespondentTest, WorkedExampleShapes) {
  EXPECT_EQ(print_fo(correspondent_direct(P("Box(p; top) -> p"))),
            "forall X0 (forall y1 ((R_N(x,X0) & R_ni(X0,y1)) -> x = y1))");
  EXPECT_EQ(print_fo(correspondent_direct(P("p -> Box(p; top)"))),
            "exists X0 (R_N(x,X0) & R_ni(X0,x))");
}

TEST(CorrespondentTest, EmptyNeighbourhoodInstance) {
  NeighbourhoodFrame f(1, {{WorldSet()}});
  Formula phi = P("Box(; p) -> Box(p; top)");
  EXPECT_FALSE(valid_at(f, 0, phi));
  EXPECT_FALSE(eval_fo(f, {}, {{"x", 0u}}, correspondent_direct(phi)));
}

TEST(CorrespondentTest, TautologyGivesTruth) {
  EXPECT_EQ(correspondent_direct(P("p -> p")), FoFormula::truth());
}

TEST(CorrespondentTest, RejectsNonSahlqvist) {
  EXPECT_THROW(correspondent_direct(P("p -> ~p")), NotSahlqvistError);
  EXPECT_THROW(correspondent_direct(P("Box(p; Box(q; top)) -> p")), NotSahlqvistError);
}

TEST(CorrespondentTest, OutputInvariantsOverCorpus) {
  for (const auto& f : sahlqvist_corpus()) {
    FoFormula a = correspondent_direct(f);
    EXPECT_TRUE(predicates(a).empty()) << print_inl(f);
    auto fv = free_vars(a);
    EXPECT_TRUE(fv.empty() || fv == std::set<Var>{x}) << print_inl(f);
    EXPECT_TRUE(is_well_sorted(a));
    EXPECT_EQ(print_fo(a), print_fo(correspondent_direct(f)));
  }
}

TEST(CorrespondentTest, CorpusAgainstReferenceValidity) {
  for (const auto& f : sahlqvist_corpus()) {
    FoFormula a = correspondent_direct(f);
    for (int n = 1; n <= 2; ++n) {
      for (const auto& ref : oracle::all_frames(n)) {
        NeighbourhoodFrame frame = oracle::to_library(ref);
        FoEvaluator ev(frame, a);
        for (int w = 0; w < n; ++w) {
          ASSERT_EQ(ev({}, {{"x", static_cast<World>(w)}}), oracle::valid_at(ref, w, f))
              << print_inl(f) << "\n" << print_fo(a);
        }
      }
    }
  }
}

// The oracle notices a wrong correspondent.
TEST(CorrespondentTest, OracleDetectsWrongAnswer) {
  FoFormula wrong = correspondent_direct(P("p -> Box(p; top)"));
  Formula f = P("Box(p; top) -> p");
  bool differs = false;
  for (const auto& frame : enumerate_frames(2)) {
    WorldSet valid = valid_worlds(frame, f);
    for (World w = 0; w < 2; ++w) {
      differs = differs || valid.contains(w) != eval_fo(frame, {}, {{"x", w}}, wrong);
    }
  }
  EXPECT_TRUE(differs);
}

}  // namespace
}  // namespace inlc
