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

#include <set>

#include "lorenzen/dedekind.hpp"
#include "lorenzen/regularise.hpp"
#include "lorenzen/sampling.hpp"
#include "oracles.hpp"

namespace lorenzen {
namespace {

using E = GroupElement;

const MonomialDomain kPoly2 = MonomialDomain::poly(2);
const MonomialDomain kS23 = MonomialDomain::semigroup({2, 3});

MonomialIdeal ideal(const MonomialDomain& d, FiniteSubset gens) { return MonomialIdeal(d, gens); }

// b is integral over the ideal generated by gens in k[S] iff some power
// t^(kb) lies in the k-th power of the ideal.
bool semigroup_integral_oracle(const std::vector<long>& monoid, const std::vector<long>& gens, long b) {
  std::set<long> sums{0};
  for (long k = 1; k <= 24; ++k) {
    std::set<long> next;
    for (long s : sums) {
      for (long g : gens) next.insert(s + g);
    }
    sums = std::move(next);
    for (long s : sums) {
      if (oracle::in_monoid(monoid, k * b - s)) return true;
    }
  }
  return false;
}

TEST(IdealMember, Examples) {
  EXPECT_TRUE(ideal_member(ideal(kPoly2, {E{3, 0}, E{0, 3}}), E{4, 1}));
  EXPECT_FALSE(ideal_member(ideal(kS23, {E{3}}), E{4}));
  EXPECT_TRUE(ideal_member(ideal(kS23, {E{3}}), E{5}));
}

TEST(MonomialIdeal, KeepsIrredundantGenerators) {
  EXPECT_EQ(ideal(kPoly2, {E{1, 0}, E{2, 1}, E{0, 2}}).generators(), (FiniteSubset{E{1, 0}, E{0, 2}}));
  EXPECT_EQ(ideal(kS23, {E{3}, E{5}, E{6}}).generators(), FiniteSubset{E{3}});
  EXPECT_EQ(ideal(kS23, {E{3}, E{4}, E{6}}).generators(), (FiniteSubset{E{3}, E{4}}));
  EXPECT_THROW(ideal(MonomialDomain::laurent(1), {E{1}}), UnsupportedConeError);
  EXPECT_THROW(ideal(kPoly2, {E{1}}), DimensionError);
}

TEST(IdealOps, ProductAndSum) {
  const auto a = ideal(kPoly2, {E{1, 0}, E{0, 1}});
  EXPECT_EQ(ideal_product(a, a).generators(), (FiniteSubset{E{2, 0}, E{1, 1}, E{0, 2}}));
  EXPECT_EQ(ideal_sum(ideal(kPoly2, {E{2, 0}}), ideal(kPoly2, {E{0, 1}})).generators(),
            (FiniteSubset{E{2, 0}, E{0, 1}}));
  EXPECT_TRUE(ideal_contains(a, ideal_product(a, a)));
  EXPECT_FALSE(ideal_contains(ideal_product(a, a), a));
  EXPECT_THROW(ideal_sum(ideal(kS23, {E{2}}), ideal(MonomialDomain::poly(1), {E{2}})),
               DomainMismatchError);
}

TEST(IntegralDependence, Examples) {
  const auto i = ideal(kPoly2, {E{3, 0}, E{0, 3}});
  const Decision yes = integral_dependence(i, E{2, 1});
  ASSERT_TRUE(yes.is_yes());
  EXPECT_TRUE(integral_dependence(i, E{1, 1}).is_no());
  EXPECT_TRUE(integral_dependence(ideal(kS23, {E{0}}), E{1}).is_yes());
  EXPECT_TRUE(integral_dependence_by_powers(ideal(kS23, {E{0}}), E{1}));
}

TEST(IntegralDependence, PolyMatchesPlaneOracle) {
  Sampler s(61);
  for (int t = 0; t < 300; ++t) {
    const FiniteSubset g = s.subset(2, 3, 0, 6);
    std::vector<std::pair<long, long>> gens;
    for (const auto& e : g) gens.emplace_back(e[0].get_si(), e[1].get_si());
    const E b = s.element(2, 0, 7);
    const bool expected = oracle::poly2_integral(gens, {b[0].get_si(), b[1].get_si()});
    EXPECT_EQ(integral_dependence(ideal(kPoly2, g), b).is_yes(), expected)
        << g.to_string() << " " << b.to_string();
  }
}

TEST(IntegralDependence, SemigroupMatchesPowerOracles) {
  for (const std::vector<long>& monoid : {std::vector<long>{2, 3}, std::vector<long>{3, 5}, std::vector<long>{4, 6, 9}}) {
    const MonomialDomain dom =
        MonomialDomain::semigroup(std::vector<Integer>(monoid.begin(), monoid.end()));
    Sampler s(62);
    for (int t = 0; t < 150; ++t) {
      const FiniteSubset g = s.subset(1, 2, 0, 9);
      std::vector<long> gens;
      for (const auto& e : g) gens.push_back(e[0].get_si());
      const long b = s.uniform(-2, 14);
      const bool expected = semigroup_integral_oracle(monoid, gens, b);
      const MonomialIdeal i(dom, g);
      EXPECT_EQ(integral_dependence(i, E{b}).is_yes(), expected) << g.to_string() << " " << b;
      EXPECT_EQ(integral_dependence_by_powers(i, E{b}), expected) << g.to_string() << " " << b;
    }
  }
}

TEST(IntegralDependence, WitnessIsAValidCombination) {
  Sampler s(63);
  for (int t = 0; t < 100; ++t) {
    const MonomialIdeal i(kPoly2, s.subset(2, 3, 0, 5));
    const E b = s.element(2, 0, 6);
    const Decision d = integral_dependence(i, b);
    if (!d.is_yes()) continue;
    const IntMatrix& p = std::get<CombinationWitness>(d.witness->value).p;
    E sum = E::zero(2);
    Integer total = 0;
    for (std::size_t k = 0; k < i.generators().size(); ++k) {
      EXPECT_GE(p[k][0], 0);
      total += p[k][0];
      sum += p[k][0] * (i.generators()[k] - b);
    }
    EXPECT_GT(total, 0);
    EXPECT_TRUE(kPoly2.divisibility_group().is_nonneg(-sum));
  }
}

TEST(IntegralClosure, Examples) {
  EXPECT_EQ(integral_closure(ideal(kS23, {E{3}})).generators(), (FiniteSubset{E{3}, E{4}}));
  EXPECT_EQ(integral_closure(ideal(kS23, {E{2}})).generators(), (FiniteSubset{E{2}, E{3}}));
  EXPECT_EQ(integral_closure(ideal(kPoly2, {E{3, 0}, E{0, 3}})).generators(),
            (FiniteSubset{E{3, 0}, E{2, 1}, E{1, 2}, E{0, 3}}));
}

TEST(IntegralClosure, PolyMatchesPlaneOracle) {
  Sampler s(64);
  for (int t = 0; t < 150; ++t) {
    const FiniteSubset g = s.subset(2, 3, 0, 7);
    std::vector<std::pair<long, long>> gens;
    for (const auto& e : g) gens.emplace_back(e[0].get_si(), e[1].get_si());
    std::vector<E> expected;
    for (const auto& [x, y] : oracle::poly2_closure(gens)) expected.push_back(E{x, y});
    EXPECT_EQ(integral_closure(ideal(kPoly2, g)).generators(), FiniteSubset(expected)) << g.to_string();
  }
}

TEST(IntegralClosure, IsIdempotentAndExtensive) {
  Sampler s(65);
  for (int t = 0; t < 60; ++t) {
    const MonomialIdeal i(kS23, s.subset(1, 3, 0, 10));
    const MonomialIdeal c = integral_closure(i);
    EXPECT_TRUE(ideal_contains(c, i));
    EXPECT_EQ(integral_closure(c), c);
  }
}

TEST(Divisor, SemigroupExample) {
  const Divisor d = divisor_sub(basic_divisor(kS23, {E{3}}), basic_divisor(kS23, {E{2}}));
  const Divisor zero = basic_divisor(kS23, {E{0}});
  EXPECT_TRUE(divisor_leq(zero, d));
  EXPECT_FALSE(divisor_leq(d, zero));
  EXPECT_TRUE(ideal_contains(integral_closure(ideal(kS23, {E{2}})), ideal(kS23, {E{3}})));
}

TEST(Divisor, PolyMeet) {
  const Divisor m = divisor_meet(basic_divisor(kPoly2, {E{3, 0}}), basic_divisor(kPoly2, {E{0, 3}}));
  const Divisor expected = basic_divisor(kPoly2, {E{3, 0}, E{0, 3}});
  EXPECT_TRUE(divisor_eq(m, expected));
  EXPECT_EQ(expected.pos().generators(), (FiniteSubset{E{3, 0}, E{2, 1}, E{1, 2}, E{0, 3}}));
}

TEST(Divisor, GroupLaws) {
  Sampler s(66);
  const Divisor zero = basic_divisor(kPoly2, {E{0, 0}});
  for (int t = 0; t < 40; ++t) {
    const Divisor a = basic_divisor(kPoly2, s.subset(2, 2, 0, 4));
    const Divisor b = basic_divisor(kPoly2, s.subset(2, 2, 0, 4));
    EXPECT_TRUE(divisor_eq(divisor_add(a, zero), a));
    EXPECT_TRUE(divisor_eq(divisor_add(a, divisor_neg(a)), zero));
    EXPECT_TRUE(divisor_eq(divisor_add(a, b), divisor_add(b, a)));
    EXPECT_TRUE(divisor_leq(divisor_meet(a, b), a));
    EXPECT_TRUE(divisor_leq(a, divisor_join(a, b)));
    EXPECT_TRUE(divisor_leq(zero, a));
  }
}

TEST(Divisor, AgreesWithRegularEntailment) {
  // basic(A) <= basic({b}) iff A |- b in the regularised Dedekind relation.
  const auto rel = RelationHandle::dedekind(kPoly2);
  Sampler s(67);
  for (int t = 0; t < 80; ++t) {
    const FiniteSubset a = s.subset(2, 3, 0, 5);
    const E b = s.element(2, 0, 5);
    EXPECT_EQ(divisor_leq(basic_divisor(kPoly2, a), basic_divisor(kPoly2, {b})),
              regular_entails(rel, Sequent(a, FiniteSubset{b}), 6).is_yes());
  }
}

TEST(Macaulay, PolyPlane) {
  const CheckReport r = macaulay_check(kPoly2, 300, 6, 71);
  EXPECT_TRUE(r.passed());
  EXPECT_GE(r.trials, 300);
}

TEST(DedekindForced, SemigroupTwoThree) {
  const MonomialDomain down = dedekind_forced(kS23, E{-1});
  EXPECT_EQ(down.kind(), MonomialDomain::Kind::Laurent);
  for (long v = -5; v <= 5; ++v) EXPECT_TRUE(down.contains(E{v}));

  const MonomialDomain up = dedekind_forced(kS23, E{1});
  for (long v = -3; v <= 8; ++v) EXPECT_EQ(up.contains(E{v}), v >= 0) << v;

  EXPECT_EQ(dedekind_forced(kS23, E{5}), kS23);
  EXPECT_EQ(dedekind_forced(kPoly2, E{1, 1}), kPoly2);
  const MonomialDomain ext = dedekind_forced(kPoly2, E{-1, 1});
  EXPECT_TRUE(ext.contains(E{0, 0}));
  EXPECT_TRUE(ext.contains(E{-2, 3}));
  EXPECT_FALSE(ext.contains(E{-1, 0}));
  EXPECT_THROW(dedekind_forced(ext, E{1, -1}), UnsupportedConeError);
}

}  // namespace
}  // namespace lorenzen
