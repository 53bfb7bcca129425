// Copyright 2026 The lorenzen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include "lorenzen/linfeas.hpp"
#include "lorenzen/sampling.hpp"
#include "oracles.hpp"

namespace lorenzen {
namespace {

using E = GroupElement;

FeasibilityProblem product_problem(std::vector<E> cols) {
  const std::size_t d = cols.front().rank();
  return {std::move(cols), OrderedGroup::product(d)};
}

TEST(Feasible, ProductExamples) {
  const auto some = feasible(product_problem({E{0, -1}, E{-1, 0}}));
  ASSERT_TRUE(some.has_value());
  EXPECT_TRUE(verify_combination({E{0, -1}, E{-1, 0}}, OrderedGroup::product(2), *some));

  EXPECT_FALSE(feasible(product_problem({E{1, 0}, E{0, 1}})).has_value());

  const std::vector<E> cols{E{1, -2}, E{-2, 1}};
  const auto mixed = feasible(product_problem(cols));
  ASSERT_TRUE(mixed.has_value());
  EXPECT_TRUE(verify_combination(cols, OrderedGroup::product(2), *mixed));
  EXPECT_TRUE(verify_combination(cols, OrderedGroup::product(2), to_integer_vector(*mixed)));
}

TEST(Feasible, SeparatingFunctionalIsTheAlternative) {
  const auto rows = OrderedGroup::product(2).inequality_rows();
  const std::vector<E> none{E{1, 0}, E{0, 1}};
  const auto y = separating_functional(none, rows);
  ASSERT_TRUE(y.has_value());
  for (const auto& c : none) {
    Rational s = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      EXPECT_GE((*y)[r], 0);
      Rational rc = 0;
      for (std::size_t k = 0; k < c.rank(); ++k) rc += Rational(rows[r][k] * c[k]);
      s += (*y)[r] * rc;
    }
    EXPECT_GE(s, 1);
  }
  EXPECT_FALSE(separating_functional({E{0, -1}, E{-1, 0}}, rows).has_value());
}

TEST(Feasible, MatrixCone) {
  const auto g = OrderedGroup::matrix({{1, 1}, {1, -1}});
  EXPECT_TRUE(feasible(FeasibilityProblem{{E{-1, 0}}, g}).has_value());
  EXPECT_TRUE(feasible(FeasibilityProblem{{E{0, 1}, E{0, -1}}, g}).has_value());
  EXPECT_FALSE(feasible(FeasibilityProblem{{E{1, 0}}, g}).has_value());
  EXPECT_FALSE(feasible(FeasibilityProblem{{E{0, 1}}, g}).has_value());
}

TEST(Feasible, RejectsSemigroupCone) {
  EXPECT_THROW(feasible(FeasibilityProblem{{E{1}}, OrderedGroup::semigroup({2, 3})}),
               UnsupportedConeError);
}

TEST(Feasible, TrivialConeAsTwoSidedRows) {
  const IntMatrix rows{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  EXPECT_TRUE(feasible({E{1, 1}, E{-2, -2}}, rows).has_value());
  EXPECT_FALSE(feasible({E{1, 0}, E{0, 1}}, rows).has_value());
}

TEST(BruteForce, Examples) {
  const auto a = brute_force_feasible(product_problem({E{0, -1}, E{-1, 0}}), 1);
  ASSERT_TRUE(a.has_value());
  EXPECT_TRUE(verify_combination({E{0, -1}, E{-1, 0}}, OrderedGroup::product(2), *a));
  EXPECT_FALSE(brute_force_feasible(product_problem({E{1, 0}, E{0, 1}}), 5).has_value());
  EXPECT_FALSE(brute_force_feasible(product_problem({E{2, -1}, E{-1, 2}}), 3).has_value());
}

TEST(BruteForce, CancellingColumnsWithinOneHalf) {
  const std::vector<E> cols{E{1, 0}, E{-1, 0}, E{0, 5}, E{0, 7}};
  const auto p = brute_force_feasible(product_problem(cols), 2);
  ASSERT_TRUE(p.has_value());
  EXPECT_TRUE(verify_combination(cols, OrderedGroup::product(2), *p));
  const auto single = brute_force_feasible(product_problem({E{0, 0}}), 1);
  ASSERT_TRUE(single.has_value());
  EXPECT_EQ(*single, std::vector<Integer>{1});
}

TEST(BruteForce, SemigroupCone) {
  const auto g = OrderedGroup::semigroup({2, 3});
  const auto p = brute_force_feasible(FeasibilityProblem{{E{-1}}, g}, 4);
  ASSERT_TRUE(p.has_value());
  EXPECT_TRUE(oracle::in_monoid({2, 3}, (*p)[0].get_si()));
  EXPECT_TRUE(verify_combination({E{-1}}, g, *p));
  EXPECT_FALSE(brute_force_feasible(FeasibilityProblem{{E{1}}, g}, 6).has_value());
}

TEST(Engines, LpFourierMotzkinAndBruteForceAgree) {
  Sampler s(11);
  int feasible_count = 0;
  for (int t = 0; t < 400; ++t) {
    const std::size_t d = 2 + s.index(2);
    std::vector<E> cols;
    const std::size_t n = 1 + s.index(4);
    for (std::size_t k = 0; k < n; ++k) cols.push_back(s.element(d, -3, 3));
    const OrderedGroup g = OrderedGroup::product(d);
    const auto lp = feasible(FeasibilityProblem{cols, g});
    const bool fm = fourier_motzkin_feasible(cols, g.inequality_rows());
    EXPECT_EQ(lp.has_value(), fm);
    if (lp) {
      ++feasible_count;
      EXPECT_TRUE(verify_combination(cols, g, *lp));
    } else {
      EXPECT_TRUE(separating_functional(cols, g.inequality_rows()).has_value());
    }
    if (brute_force_feasible(FeasibilityProblem{cols, g}, 3)) EXPECT_TRUE(lp.has_value());
  }
  EXPECT_GT(feasible_count, 0);
}

TEST(Verify, RejectsBadCombinations) {
  const auto g = OrderedGroup::product(2);
  const std::vector<E> cols{E{0, -1}, E{-1, 0}};
  EXPECT_FALSE(verify_combination(cols, g, std::vector<Integer>{0, 0}));
  EXPECT_FALSE(verify_combination(cols, g, std::vector<Integer>{-1, 1}));
  EXPECT_FALSE(verify_combination({E{1, 0}}, g, std::vector<Integer>{1}));
  EXPECT_TRUE(verify_combination(cols, g, std::vector<Integer>{1, 0}));
}

TEST(SolveNonnegative, SmallSystems) {
  const RationalMatrix a{{1, 1}, {1, -1}};
  const auto x = solve_nonnegative(a, {Rational(4), Rational(2)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], 3);
  EXPECT_EQ((*x)[1], 1);
  EXPECT_FALSE(solve_nonnegative({{1, 1}}, {Rational(-1)}).has_value());
}

TEST(ToIntegerVector, ClearsDenominatorsAndContent) {
  const auto v = to_integer_vector({Rational(1, 2), Rational(1, 3), Rational(0)});
  EXPECT_EQ(v, (std::vector<Integer>{3, 2, 0}));
  EXPECT_EQ(to_integer_vector({Rational(4), Rational(6)}), (std::vector<Integer>{2, 3}));
}

TEST(RieszRefine, Examples) {
  EXPECT_EQ(riesz_refine({2, 1}, {1, 2}), (IntMatrix{{1, 1}, {0, 1}}));
  EXPECT_EQ(riesz_refine({3}, {3}), (IntMatrix{{3}}));
  EXPECT_EQ(riesz_refine({1, 1}, {2}), (IntMatrix{{1}, {1}}));
  EXPECT_THROW(riesz_refine({1}, {2}), ArgumentError);
}

TEST(RieszRefine, MarginsHold) {
  Sampler s(5);
  for (int t = 0; t < 200; ++t) {
    std::vector<Integer> n, m;
    Integer total = 0;
    for (std::size_t i = 0, k = 1 + s.index(4); i < k; ++i) {
      n.emplace_back(static_cast<long>(s.uniform(i == 0 ? 1 : 0, 6)));
      total += n.back();
    }
    Integer rest = total;
    for (std::size_t j = 0, k = 1 + s.index(4); j + 1 < k; ++j) {
      const Integer take = rest == 0 ? Integer(0) : Integer(static_cast<long>(s.uniform(0, rest.get_si())));
      m.push_back(take);
      rest -= take;
    }
    m.push_back(rest);
    const IntMatrix r = riesz_refine(n, m);
    for (std::size_t i = 0; i < n.size(); ++i) {
      Integer row = 0;
      for (const auto& v : r[i]) {
        EXPECT_GE(v, 0);
        row += v;
      }
      EXPECT_EQ(row, n[i]);
    }
    for (std::size_t j = 0; j < m.size(); ++j) {
      Integer col = 0;
      for (std::size_t i = 0; i < n.size(); ++i) col += r[i][j];
      EXPECT_EQ(col, m[j]);
    }
  }
}

}  // namespace
}  // namespace lorenzen
