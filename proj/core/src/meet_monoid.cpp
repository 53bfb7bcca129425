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

#include "lorenzen/meet_monoid.hpp"

#include <algorithm>

#include "lorenzen/sampling.hpp"

namespace lorenzen {

namespace {

void require_same(const RelationHandle& a, const RelationHandle& b) {
  if (!(a == b)) {
    throw ArgumentError("meet terms over different relations: " + a.describe() + " vs " +
                        b.describe());
  }
}

}  // namespace

Decision preorder_leq(const RelationHandle& rel, const FiniteSubset& lhs,
                      const FiniteSubset& rhs) {
  PerElementWitness per;
  std::optional<std::int64_t> unknown_bound;
  for (const auto& b : rhs) {
    Decision d = sc_entails(rel, lhs, b);
    if (d.is_no()) return Decision::no();
    if (d.is_unknown()) {
      unknown_bound = std::max(unknown_bound.value_or(0), d.bound_used.value_or(0));
      continue;
    }
    per.items.push_back(std::move(*d.witness));
  }
  if (unknown_bound) return Decision::unknown(*unknown_bound);
  return Decision::yes(Witness{std::move(per)});
}

Decision preorder_eq(const RelationHandle& rel, const FiniteSubset& a, const FiniteSubset& b) {
  Decision ab = preorder_leq(rel, a, b);
  if (ab.is_no()) return ab;
  Decision ba = preorder_leq(rel, b, a);
  if (ba.is_no()) return ba;
  if (ab.is_unknown()) return ab;
  if (ba.is_unknown()) return ba;
  PerElementWitness both;
  both.items.push_back(std::move(*ab.witness));
  both.items.push_back(std::move(*ba.witness));
  return Decision::yes(Witness{std::move(both)});
}

MeetTerm canonicalize(const RelationHandle& rel, const FiniteSubset& a) {
  if (a.rank() != rel.group().rank()) throw DimensionError("subset has wrong rank for relation");
  std::vector<GroupElement> current = a.elements();
  for (const auto& b : a) {
    if (current.size() < 2) break;
    std::vector<GroupElement> rest;
    for (const auto& e : current) {
      if (!(e == b)) rest.push_back(e);
    }
    const Decision d = sc_entails(rel, FiniteSubset(rest), b);
    if (d.is_unknown()) {
      throw BoundedRelationError("cannot canonicalise " + a.to_string() + ": " + rel.describe() +
                                 " is undecided on " + b.to_string() + " at bound " +
                                 std::to_string(d.bound_used.value_or(0)));
    }
    if (d.is_yes()) current = std::move(rest);
  }
  return MeetTerm(rel, FiniteSubset(std::move(current)));
}

MeetTerm ideal_add(const MeetTerm& s, const MeetTerm& t) {
  require_same(s.relation(), t.relation());
  return canonicalize(s.relation(), sumset(s.support(), t.support()));
}

MeetTerm ideal_meet(const MeetTerm& s, const MeetTerm& t) {
  require_same(s.relation(), t.relation());
  return canonicalize(s.relation(), set_union(s.support(), t.support()));
}

MeetTerm ideal_zero(const RelationHandle& rel) {
  return canonicalize(rel, FiniteSubset::singleton(GroupElement::zero(rel.group().rank())));
}

std::string GammaCounterexample::to_string() const {
  return "A=" + lhs.to_string() + " X=" + x.to_string() + " b=" + rhs.to_string();
}

std::optional<GammaCounterexample> gamma_counterexample_search(const RelationHandle& rel,
                                                               std::int64_t box,
                                                               std::size_t set_size,
                                                               std::int64_t trials,
                                                               std::uint64_t seed) {
  if (box < 1 || set_size < 1) throw ArgumentError("Gamma search needs box and set size >= 1");
  const OrderedGroup& g = rel.group();
  const std::size_t d = g.rank();
  const std::int64_t lo = g.kind() == ConeKind::Semigroup ? 0 : -box;
  Sampler s(seed);

  auto holds = [&](const FiniteSubset& a, const FiniteSubset& x, const GroupElement& b) {
    return preorder_leq(rel, sumset(a, x), translate(b, x)).is_yes();
  };

  for (std::int64_t t = 0; t < trials; ++t) {
    const FiniteSubset a = s.subset(d, set_size, lo, box);
    const GroupElement b = s.element(d, lo, box);
    if (!sc_entails(rel, a, b).is_no()) continue;

    std::vector<FiniteSubset> candidates{a.with(b), a, FiniteSubset::singleton(b), sumset(a, a)};
    for (const auto& e : a) {
      const GroupElement step = b - e;
      if (step.is_zero()) continue;
      candidates.push_back(progression(step, 0, 1));
      candidates.push_back(progression(step, 0, 2));
      candidates.push_back(progression(step, 1, 1));
    }
    candidates.push_back(s.subset(d, set_size + 1, lo, box));
    for (const auto& x : candidates) {
      if (holds(a, x, b)) return GammaCounterexample{a, x, b};
    }
  }
  return std::nullopt;
}

}  // namespace lorenzen
