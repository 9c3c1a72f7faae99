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

#include "inlc/fo.h"

#include <gtest/gtest.h>

#include <random>

#include "inlc/errors.h"
#include "inlc/parser.h"
#include "inlc/print.h"
#include "inlc/standard_translation.h"

namespace inlc {
namespace {

const Var x = Var::world("x");
const Var y = Var::world("y");
const Var X = Var::subset("X");

TEST(EvalTest, Examples) {
  NeighbourhoodFrame one(1, {{WorldSet()}});
  EXPECT_TRUE(eval_fo(one, {}, {{"x", 0u}}, FoFormula::exists(X, FoFormula::rel_n(x, X))));
  EXPECT_TRUE(eval_fo(one, {}, {{"x", 0u}}, FoFormula::eq(x, x)));

  NeighbourhoodFrame two(2);
  FoFormula all_p = FoFormula::forall(
      y, FoFormula::implies(FoFormula::rel_ni(X, y), FoFormula::pred("p", y)));
  EXPECT_TRUE(eval_fo(two, {{"p", WorldSet(0b10)}}, {{"X", WorldSet(0b10)}}, all_p));
  EXPECT_FALSE(eval_fo(two, {{"p", WorldSet(0b10)}}, {{"X", WorldSet(0b11)}}, all_p));
}

TEST(EvalTest, SubsetQuantifiersRangeOverThePowerset) {
  // No neighbourhoods at all, yet some subset contains every world.
  NeighbourhoodFrame f(2);
  FoFormula a = FoFormula::exists(
      X, FoFormula::forall(y, FoFormula::rel_ni(X, y)));
  EXPECT_TRUE(eval_fo(f, {}, {}, a));
}

TEST(EvalTest, ContractViolations) {
  NeighbourhoodFrame f(1);
  EXPECT_THROW(eval_fo(f, {}, {}, FoFormula::eq(x, x)), EvalError);
  EXPECT_THROW(eval_fo(f, {}, {{"x", WorldSet()}}, FoFormula::eq(x, x)), EvalError);
  EXPECT_THROW(eval_fo(f, {}, {{"x", 0u}}, FoFormula::pred("p", x)), EvalError);
}

TEST(EvalTest, RelationsMatchTheFrame) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    NeighbourhoodFrame f = random_frame(3, s);
    for (World w = 0; w < 3; ++w) {
      for (std::uint32_t b = 0; b < 8; ++b) {
        Assignment a{{"x", w}, {"X", WorldSet(b)}};
        EXPECT_EQ(eval_fo(f, {}, a, FoFormula::rel_ni(X, x)), WorldSet(b).contains(w));
        EXPECT_EQ(eval_fo(f, {}, a, FoFormula::rel_n(x, X)),
                  f.has_neighbourhood(w, WorldSet(b)));
      }
    }
  }
}

TEST(SubstitutePredicateTest, Examples) {
  PredicateDescriptor eq_y{Var::world("u"), FoFormula::eq(Var::world("u"), y)};
  EXPECT_EQ(substitute_predicate(FoFormula::pred("p", x), "p", eq_y), FoFormula::eq(x, y));

  FoFormula renamed =
      substitute_predicate(FoFormula::forall(y, FoFormula::pred("p", y)), "p", eq_y);
  EXPECT_EQ(print_fo(renamed), "forall y' (y' = y)");

  PredicateDescriptor bottom{Var::world("u"), FoFormula::falsity()};
  EXPECT_EQ(substitute_predicate(FoFormula::pred("q", x), "p", bottom),
            FoFormula::pred("q", x));
}

TEST(SimplifyTest, Examples) {
  FoFormula beta = FoFormula::rel_n(x, X);
  EXPECT_EQ(simplify_fo(FoFormula::conj(FoFormula::truth(), beta)), beta);
  EXPECT_EQ(simplify_fo(FoFormula::negation(FoFormula::eq(x, x))), FoFormula::falsity());
  FoFormula delta = FoFormula::rel_ni(X, y);
  FoFormula gamma = FoFormula::pred("p", x);
  FoFormula in = FoFormula::conj(FoFormula::exists(y, delta), gamma);
  EXPECT_EQ(simplify_fo(in), FoFormula::exists(y, FoFormula::conj(delta, gamma)));
}

TEST(SimplifyTest, OnePointRule) {
  FoFormula a = FoFormula::exists(
      y, FoFormula::conj(FoFormula::eq(y, x), FoFormula::rel_ni(X, y)));
  EXPECT_EQ(simplify_fo(a), FoFormula::rel_ni(X, x));
}

TEST(SimplifyTest, NamesComeOutDistinct) {
  FoFormula inner = FoFormula::exists(X, FoFormula::rel_n(x, X));
  FoFormula a = FoFormula::conj(FoFormula::pred("p", x),
                                FoFormula::exists(X, FoFormula::conj(FoFormula::rel_ni(X, x), inner)));
  EXPECT_EQ(print_fo(simplify_fo(a)), "exists X (P(x) & R_ni(X,x) & exists X' (R_N(x,X')))");
}

TEST(FreeVarsTest, Translation) {
  FoFormula a = st(parse_inl("Box(p, q; Box(; r))"), x);
  EXPECT_EQ(free_vars(a), std::set<Var>{x});
  EXPECT_TRUE(is_well_sorted(a));
  EXPECT_EQ(predicates(a), (std::set<std::string>{"p", "q", "r"}));
}

// Random well-sorted formulas over x, X and one predicate.
FoFormula random_fo(std::mt19937_64& rng, int depth, std::vector<Var> worlds,
                    std::vector<Var> sets, int& counter) {
  auto pick = [&](const std::vector<Var>& vs) { return vs[rng() % vs.size()]; };
  const int choice = depth == 0 ? static_cast<int>(rng() % 5) : static_cast<int>(rng() % 11);
  switch (choice) {
    case 0: return FoFormula::pred("p", pick(worlds));
    case 1: return FoFormula::rel_ni(pick(sets), pick(worlds));
    case 2: return FoFormula::rel_n(pick(worlds), pick(sets));
    case 3: return FoFormula::eq(pick(worlds), pick(worlds));
    case 4: return rng() % 2 ? FoFormula::truth() : FoFormula::falsity();
    case 5: return FoFormula::negation(random_fo(rng, depth - 1, worlds, sets, counter));
    case 6:
      return FoFormula::conj(random_fo(rng, depth - 1, worlds, sets, counter),
                             random_fo(rng, depth - 1, worlds, sets, counter));
    case 7:
      return FoFormula::disj(random_fo(rng, depth - 1, worlds, sets, counter),
                             random_fo(rng, depth - 1, worlds, sets, counter));
    case 8:
      return FoFormula::implies(random_fo(rng, depth - 1, worlds, sets, counter),
                                random_fo(rng, depth - 1, worlds, sets, counter));
    case 9: {
      // Reuse names now and then to exercise shadowing.
      Var v = Var::world(rng() % 3 ? "y" + std::to_string(counter++) : "x");
      worlds.push_back(v);
      FoFormula body = random_fo(rng, depth - 1, worlds, sets, counter);
      return rng() % 2 ? FoFormula::forall(v, body) : FoFormula::exists(v, body);
    }
    default: {
      Var v = Var::subset(rng() % 3 ? "Y" + std::to_string(counter++) : "X");
      sets.push_back(v);
      FoFormula body = random_fo(rng, depth - 1, worlds, sets, counter);
      return rng() % 2 ? FoFormula::forall(v, body) : FoFormula::exists(v, body);
    }
  }
}

class FoPropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(FoPropertyTest, SimplifyPreservesTruth) {
  std::mt19937_64 rng(mix_seed(31, GetParam()));
  int counter = 0;
  FoFormula a = random_fo(rng, 5, {x}, {X}, counter);
  FoFormula s = simplify_fo(a);
  ASSERT_TRUE(is_well_sorted(s));
  for (std::size_t n : {1u, 2u}) {
    for (const auto& frame : enumerate_frames(n)) {
      for (std::uint32_t pv = 0; pv < (1u << n); ++pv) {
        for (World w = 0; w < n; ++w) {
          for (std::uint32_t b = 0; b < (1u << n); ++b) {
            Valuation v{{"p", WorldSet(pv)}};
            Assignment asg{{"x", w}, {"X", WorldSet(b)}};
            ASSERT_EQ(eval_fo(frame, v, asg, a), eval_fo(frame, v, asg, s))
                << print_fo(a) << "\n" << print_fo(s);
          }
        }
      }
    }
  }
}

TEST_P(FoPropertyTest, SubstitutionCommutesWithEvaluation) {
  std::mt19937_64 rng(mix_seed(32, GetParam()));
  int counter = 0;
  FoFormula a = random_fo(rng, 4, {x}, {X}, counter);
  // sigma(u) = exists y (R_ni(X, y) & u = y) | R_N(u, X), mentioning x's
  // neighbours so that capture is possible.
  const Var u = Var::world("u");
  PredicateDescriptor sigma{
      u, FoFormula::disj(FoFormula::exists(y, FoFormula::conj(FoFormula::rel_ni(X, y),
                                                              FoFormula::eq(u, y))),
                         FoFormula::rel_n(u, X))};
  FoFormula b = substitute_predicate(a, "p", sigma);
  ASSERT_TRUE(predicates(b).empty());
  for (const auto& frame : enumerate_frames(2)) {
    for (std::uint32_t bits = 0; bits < 4; ++bits) {
      WorldSet ext;
      for (World w = 0; w < 2; ++w) {
        if (eval_fo(frame, {}, {{"u", w}, {"X", WorldSet(bits)}}, sigma.body)) {
          ext = ext.with(w);
        }
      }
      for (World w = 0; w < 2; ++w) {
        Assignment asg{{"x", w}, {"X", WorldSet(bits)}};
        ASSERT_EQ(eval_fo(frame, {{"p", ext}}, asg, a), eval_fo(frame, {}, asg, b))
            << print_fo(a) << "\n" << print_fo(b);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Random, FoPropertyTest, ::testing::Range(0, 60));

TEST(FoEvaluatorTest, ReusableAcrossAssignments) {
  FoFormula a = st(parse_inl("Box(p; Box(; q))"), x);
  for (std::uint64_t s = 0; s < 10; ++s) {
    NeighbourhoodFrame f = random_frame(3, s);
    FoEvaluator ev(f, a);
    for (std::uint32_t p = 0; p < 8; ++p) {
      Valuation v{{"p", WorldSet(p)}, {"q", WorldSet(7 - p)}};
      for (World w = 0; w < 3; ++w) {
        EXPECT_EQ(ev(v, {{"x", w}}), eval_fo(f, v, {{"x", w}}, a));
      }
    }
  }
}

}  // namespace
}  // namespace inlc
