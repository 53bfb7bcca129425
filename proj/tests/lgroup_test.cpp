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

#include "lorenzen/lgroup.hpp"
#include "lorenzen/sampling.hpp"

namespace lorenzen {
namespace {

using E = GroupElement;

const RelationHandle kIntegers = RelationHandle::finest(OrderedGroup::product(1));
const RelationHandle kRegPlane =
    RelationHandle::regularisation(RelationHandle::finest(OrderedGroup::product(2)), 6);

FormalDifference diff(const RelationHandle& rel, FiniteSubset pos, FiniteSubset neg) {
  return FormalDifference(canonicalize(rel, pos), canonicalize(rel, neg));
}

FormalDifference ints(long p, long n) {
  return diff(kIntegers, FiniteSubset{E{p}}, FiniteSubset{E{n}});
}

TEST(Grothendieck, Equality) {
  EXPECT_TRUE(groth_eq(ints(5, 3), ints(4, 2)).is_yes());
  EXPECT_TRUE(groth_eq(ints(5, 3), ints(4, 3)).is_no());
  const MeetTerm s = canonicalize(kIntegers, FiniteSubset{E{2}, E{7}});
  EXPECT_TRUE(groth_eq(FormalDifference(s, s), ints(0, 0)).is_yes());

  const auto plane = RelationHandle::finest(OrderedGroup::product(2));
  const auto lhs = diff(plane, FiniteSubset{E{1, 0}, E{0, 1}}, FiniteSubset{E{0, 0}});
  const auto rhs = diff(plane, FiniteSubset{E{1, 0}}, FiniteSubset{E{0, 0}});
  EXPECT_TRUE(groth_eq(lhs, rhs).is_no());
}

TEST(Grothendieck, LatticeOperations) {
  EXPECT_TRUE(groth_eq(groth_meet(ints(0, 0), ints(1, 0)), ints(0, 0)).is_yes());
  EXPECT_TRUE(groth_eq(groth_join(ints(0, 0), ints(1, 0)), ints(1, 0)).is_yes());
  EXPECT_TRUE(groth_eq(groth_abs(ints(2, 3)), ints(3, 2)).is_yes());
  EXPECT_TRUE(groth_leq(ints(0, 1), ints(0, 0)).is_yes());
  EXPECT_TRUE(groth_leq(ints(0, 0), ints(0, 1)).is_no());
  EXPECT_TRUE(groth_eq(groth_add(ints(4, 1), groth_neg(ints(4, 1))), ints(0, 0)).is_yes());
  EXPECT_TRUE(groth_eq(groth_sub(ints(4, 1), ints(2, 0)), ints(1, 0)).is_yes());
}

TEST(Grothendieck, RegularisedPlane) {
  const auto u = diff(kRegPlane, FiniteSubset{E{1, 0}, E{0, 1}}, FiniteSubset{E{0, 0}});
  const auto v = FormalDifference::embed(kRegPlane, E{1, 1});
  EXPECT_TRUE(groth_leq(u, v).is_yes());
  EXPECT_TRUE(groth_leq(v, u).is_no());
}

TEST(LatticeTermParse, RoundTrip) {
  const auto t = LatticeTerm::parse("(join (meet [1,0] [0,1]) (add [1,0] (neg [0,1])))");
  EXPECT_EQ(t.op(), LatticeTerm::Op::Join);
  EXPECT_EQ(t.rank(), 2u);
  EXPECT_EQ(LatticeTerm::parse(t.to_string()).to_string(), t.to_string());
  EXPECT_EQ(LatticeTerm::parse("(add 1 2 3)").to_string(), LatticeTerm::parse("(add (add 1 2) 3)").to_string());
  EXPECT_THROW(LatticeTerm::parse("(add 1"), ParseError);
  EXPECT_THROW(LatticeTerm::parse("(frob 1 2)"), ParseError);
  EXPECT_THROW(LatticeTerm::parse("(add 1 [1,2])"), DimensionError);
}

TEST(TermEval, SumOfJoinAndMeet) {
  const auto t = LatticeTerm::parse("(add (join 2 5) (meet 2 5))");
  EXPECT_TRUE(groth_eq(term_eval(kIntegers, t), ints(7, 0)).is_yes());
}

TEST(TermEval, PlaneJoinMeet) {
  const auto t = LatticeTerm::meet(LatticeTerm::leaf(E{1, 0}), LatticeTerm::leaf(E{0, 1}));
  const FormalDifference v = term_eval(kRegPlane, t);
  const auto expected = diff(kRegPlane, FiniteSubset{E{1, 0}, E{0, 1}}, FiniteSubset{E{0, 0}});
  EXPECT_TRUE(groth_eq(v, expected).is_yes());
  const auto j = term_eval(kRegPlane, LatticeTerm::join(LatticeTerm::leaf(E{1, 0}),
                                                         LatticeTerm::leaf(E{0, 1})));
  EXPECT_TRUE(groth_eq(groth_add(v, j), FormalDifference::embed(kRegPlane, E{1, 1})).is_yes());
}

TEST(LatticeGroup, RefusesNonCancellativeMonoid) {
  EXPECT_THROW(LatticeGroup{RelationHandle::dedekind(MonomialDomain::semigroup({2, 3}))},
               NonCancellativeError);
  EXPECT_THROW(LatticeGroup{RelationHandle::finest(OrderedGroup::product(2))}, NonCancellativeError);
}

TEST(RegularityInequality, HoldsOverIntegersAndRegularisedPlane) {
  const CheckReport a = regularity_inequality_check(LatticeGroup(kIntegers), 200, 8);
  EXPECT_TRUE(a.passed());
  EXPECT_GE(a.trials, 200);
  const CheckReport b = regularity_inequality_check(LatticeGroup(kRegPlane), 100, 8);
  EXPECT_TRUE(b.passed());
  EXPECT_GE(b.trials + b.skipped, 100);
}

}  // namespace
}  // namespace lorenzen
