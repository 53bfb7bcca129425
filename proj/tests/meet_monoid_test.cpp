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

#include "lorenzen/meet_monoid.hpp"
#include "lorenzen/sampling.hpp"

namespace lorenzen {
namespace {

using E = GroupElement;

const RelationHandle kIntegers = RelationHandle::finest(OrderedGroup::product(1));
const RelationHandle kPlane = RelationHandle::finest(OrderedGroup::product(2));

TEST(Preorder, Examples) {
  const Decision d = preorder_leq(kIntegers, FiniteSubset{E{3}, E{5}}, FiniteSubset{E{4}, E{7}});
  ASSERT_TRUE(d.is_yes());
  EXPECT_EQ(std::get<PerElementWitness>(d.witness->value).items.size(), 2u);
  EXPECT_TRUE(preorder_leq(kPlane, FiniteSubset{E{1, 0}}, FiniteSubset{E{0, 1}}).is_no());
  EXPECT_TRUE(preorder_leq(kPlane, FiniteSubset{E{0, 1}}, FiniteSubset{E{1, 0}}).is_no());
  EXPECT_TRUE(preorder_eq(kIntegers, FiniteSubset{E{3}, E{5}}, FiniteSubset{E{3}}).is_yes());
}

TEST(Canonicalize, DropsEntailedElements) {
  EXPECT_EQ(canonicalize(kIntegers, FiniteSubset{E{5}, E{3}, E{4}}).support(), FiniteSubset{E{3}});
  EXPECT_EQ(canonicalize(kPlane, FiniteSubset{E{1, 0}, E{0, 1}, E{1, 1}}).support(),
            (FiniteSubset{E{1, 0}, E{0, 1}}));
}

TEST(Canonicalize, IsEquivalentAndIrredundant) {
  Sampler s(9);
  for (int t = 0; t < 200; ++t) {
    const FiniteSubset a = s.subset(2, 5, -3, 3);
    const MeetTerm m = canonicalize(kPlane, a);
    EXPECT_TRUE(preorder_eq(kPlane, a, m.support()).is_yes());
    for (std::size_t i = 0; m.support().size() > 1 && i < m.support().size(); ++i) {
      EXPECT_TRUE(sc_entails(kPlane, m.support().without(i), m.support()[i]).is_no());
    }
  }
}

TEST(Canonicalize, UnknownThrows) {
  const auto prufer = RelationHandle::prufer(kPlane, 0);
  EXPECT_THROW(canonicalize(prufer, FiniteSubset{E{1, 0}, E{0, 1}}), BoundedRelationError);
}

TEST(IdealOps, AddAndMeet) {
  const MeetTerm u = canonicalize(kPlane, FiniteSubset{E{1, 0}, E{0, 1}});
  EXPECT_EQ(ideal_add(u, u).support(), (FiniteSubset{E{2, 0}, E{1, 1}, E{0, 2}}));
  const MeetTerm three = canonicalize(kIntegers, FiniteSubset{E{3}});
  const MeetTerm five = canonicalize(kIntegers, FiniteSubset{E{5}});
  EXPECT_EQ(ideal_meet(three, five).support(), FiniteSubset{E{3}});
  EXPECT_EQ(ideal_add(three, ideal_zero(kIntegers)).support(), FiniteSubset{E{3}});
  EXPECT_THROW(ideal_add(u, three), ArgumentError);
}

TEST(IdealOps, MonoidLaws) {
  Sampler s(4);
  for (int t = 0; t < 100; ++t) {
    const MeetTerm a = canonicalize(kPlane, s.subset(2, 3, -2, 2));
    const MeetTerm b = canonicalize(kPlane, s.subset(2, 3, -2, 2));
    const MeetTerm c = canonicalize(kPlane, s.subset(2, 3, -2, 2));
    EXPECT_EQ(ideal_add(a, b).support(), ideal_add(b, a).support());
    EXPECT_EQ(ideal_add(ideal_add(a, b), c).support(), ideal_add(a, ideal_add(b, c)).support());
    EXPECT_EQ(ideal_meet(a, a).support(), a.support());
    // Addition distributes over meet.
    EXPECT_EQ(ideal_add(a, ideal_meet(b, c)).support(),
              ideal_meet(ideal_add(a, b), ideal_add(a, c)).support());
  }
}

TEST(Gamma, FinestHasNoCounterexample) {
  EXPECT_FALSE(gamma_counterexample_search(kIntegers, 6, 2, 300, 1).has_value());
}

TEST(Gamma, DedekindTwoThreeIsNotCancellative) {
  const auto rel = RelationHandle::dedekind(MonomialDomain::semigroup({2, 3}));
  const auto cx = gamma_counterexample_search(rel, 8, 2, 2000, 1);
  ASSERT_TRUE(cx.has_value());
  EXPECT_TRUE(sc_entails(rel, cx->lhs, cx->rhs).is_no());
  EXPECT_TRUE(preorder_leq(rel, sumset(cx->lhs, cx->x), translate(cx->rhs, cx->x)).is_yes());

  const FiniteSubset a{E{2}}, x{E{2}, E{3}};
  EXPECT_TRUE(sc_entails(rel, a, E{3}).is_no());
  EXPECT_TRUE(preorder_leq(rel, sumset(a, x), translate(E{3}, x)).is_yes());
}

TEST(Gamma, RegularisationsHaveNone) {
  const auto reg =
      RelationHandle::regularisation(RelationHandle::dedekind(MonomialDomain::semigroup({2, 3})), 6);
  EXPECT_FALSE(gamma_counterexample_search(reg, 6, 2, 300, 3).has_value());
  const auto reg_plane = RelationHandle::regularisation(kPlane, 6);
  EXPECT_FALSE(gamma_counterexample_search(reg_plane, 3, 2, 200, 3).has_value());
}

}  // namespace
}  // namespace lorenzen
