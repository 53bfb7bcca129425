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

#include "lorenzen/axioms.hpp"

#include <algorithm>
#include <set>

#include "lorenzen/sampling.hpp"

namespace lorenzen {

namespace {

// An element likely to be entailed by lhs: a sum of two members, or a
// member pushed up the cone, or noise.
GroupElement biased_target(Sampler& s, const OrderedGroup& g, const FiniteSubset& lhs,
                           SampleBox box) {
  switch (s.uniform(0, 3)) {
    case 0:
      return lhs[s.index(lhs.size())] + lhs[s.index(lhs.size())];
    case 1:
    case 2:
      return lhs[s.index(lhs.size())] + s.cone_element(g);
    default:
      return s.element(g.rank(), box.lo, box.hi);
  }
}

}  // namespace

SuiteReport axiom_suite_sc(const OrderedGroup& g, const ScOracle& oracle, std::int64_t samples,
                           std::uint64_t seed) {
  Sampler s(seed);
  const SampleBox box = default_box(g);
  const std::size_t d = g.rank();
  constexpr std::size_t kSet = 3;
  SuiteReport report;

  CheckReport& s0 = report.add("S0");
  for (std::int64_t t = 0; t < samples; ++t) {
    const GroupElement a = s.element(d, box.lo, box.hi);
    const FiniteSubset rest = s.subset(d, kSet, box.lo, box.hi).with(a);
    const Decision single = oracle(FiniteSubset::singleton(a), a);
    const Decision inset = oracle(rest, a);
    if (single.is_unknown() || inset.is_unknown()) {
      ++s0.skipped;
      continue;
    }
    ++s0.trials;
    if (!single.is_yes() || !inset.is_yes()) {
      s0.record_failure(mass(rest), "a=" + a.to_string() + " A=" + rest.to_string());
    }
  }

  CheckReport& s1 = report.add("S1");
  for (std::int64_t t = 0; t < samples; ++t) {
    const FiniteSubset a = s.subset(d, kSet, box.lo, box.hi);
    const GroupElement b = biased_target(s, g, a, box);
    const FiniteSubset extra = s.subset(d, kSet, box.lo, box.hi);
    const Decision base = oracle(a, b);
    if (base.is_unknown()) {
      ++s1.skipped;
      continue;
    }
    if (!base.is_yes()) {
      ++s1.trials;
      continue;
    }
    const FiniteSubset wider = set_union(a, extra);
    const Decision more = oracle(wider, b);
    if (more.is_unknown()) {
      ++s1.skipped;
      continue;
    }
    ++s1.trials;
    if (!more.is_yes()) {
      s1.record_failure(mass(wider) + mass(b),
                        "A=" + a.to_string() + " A'=" + extra.to_string() + " b=" + b.to_string());
    }
  }

  CheckReport& s2 = report.add("S2");
  for (std::int64_t t = 0; t < samples; ++t) {
    const FiniteSubset a = s.subset(d, kSet, box.lo, box.hi);
    const GroupElement c = biased_target(s, g, a, box);
    const FiniteSubset ac = a.with(c);
    const GroupElement b =
        s.coin(0.7) ? c + s.cone_element(g) : biased_target(s, g, ac, box);
    const Decision left = oracle(a, c);
    const Decision right = oracle(ac, b);
    if (left.is_unknown() || right.is_unknown()) {
      ++s2.skipped;
      continue;
    }
    if (!left.is_yes() || !right.is_yes()) {
      ++s2.trials;
      continue;
    }
    const Decision cut = oracle(a, b);
    if (cut.is_unknown()) {
      ++s2.skipped;
      continue;
    }
    ++s2.trials;
    if (!cut.is_yes()) {
      s2.record_failure(mass(ac) + mass(b),
                        "A=" + a.to_string() + " c=" + c.to_string() + " b=" + b.to_string());
    }
  }

  CheckReport& s3 = report.add("S3");
  for (std::int64_t t = 0; t < samples; ++t) {
    const GroupElement a = s.element(d, box.lo, box.hi);
    const GroupElement b = s.coin(0.8) ? a + s.cone_element(g) : s.element(d, box.lo, box.hi);
    if (!g.leq(a, b)) {
      ++s3.trials;
      continue;
    }
    const Decision r = oracle(FiniteSubset::singleton(a), b);
    if (r.is_unknown()) {
      ++s3.skipped;
      continue;
    }
    ++s3.trials;
    if (!r.is_yes()) s3.record_failure(mass(a) + mass(b), "a=" + a.to_string() + " b=" + b.to_string());
  }

  CheckReport& s4 = report.add("S4");
  for (std::int64_t t = 0; t < samples; ++t) {
    const FiniteSubset a = s.subset(d, kSet, box.lo, box.hi);
    const GroupElement b = biased_target(s, g, a, box);
    const GroupElement x = s.element(d, box.lo, box.hi);
    const Decision before = oracle(a, b);
    const Decision after = oracle(translate(x, a), x + b);
    if (before.is_unknown() || after.is_unknown()) {
      ++s4.skipped;
      continue;
    }
    ++s4.trials;
    if (before.verdict != after.verdict) {
      s4.record_failure(mass(a) + mass(b) + mass(x), "A=" + a.to_string() + " b=" + b.to_string() +
                                                         " x=" + x.to_string());
    }
  }
  return report;
}

SuiteReport axiom_suite_sc(const RelationHandle& rel, std::int64_t samples, std::uint64_t seed) {
  return axiom_suite_sc(
      rel.group(),
      [&rel](const FiniteSubset& a, const GroupElement& b) { return sc_entails(rel, a, b); },
      samples, seed);
}

ReflectionReport order_reflection_check(const RelationHandle& rel, std::int64_t samples,
                                        std::uint64_t seed) {
  const OrderedGroup& g = rel.group();
  const std::size_t d = g.rank();
  ReflectionReport report;
  std::set<std::pair<GroupElement, GroupElement>> found;
  auto probe = [&](const GroupElement& a, const GroupElement& b) {
    const Decision r = sc_entails(rel, FiniteSubset::singleton(a), b);
    if (r.is_unknown()) {
      ++report.skipped;
      return;
    }
    ++report.trials;
    if (r.is_yes() && !g.leq(a, b)) found.emplace(a, b);
  };

  const SampleBox box = default_box(g);
  std::int64_t lo = box.lo, hi = box.hi;
  if (d == 2) lo = -2, hi = 2;
  if (d >= 3) lo = -1, hi = 1;
  const auto points = box_points(d, lo, hi);
  for (const auto& a : points) {
    for (const auto& b : points) probe(a, b);
  }
  Sampler s(seed);
  for (std::int64_t t = 0; t < samples; ++t) {
    probe(s.element(d, box.lo, box.hi), s.element(d, box.lo, box.hi));
  }
  report.violations.assign(found.begin(), found.end());
  return report;
}

}  // namespace lorenzen
