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

#include <algorithm>
#include <set>

#include "lorenzen/meet_monoid.hpp"
#include "lorenzen/regularise.hpp"
#include "lorenzen/sampling.hpp"

namespace lorenzen {

namespace {

constexpr std::size_t kMaxCandidateSize = 32;
constexpr std::size_t kMaxSubsetBase = 6;

// Candidate X sets in the order they are tried.
std::vector<FiniteSubset> prufer_candidates(const FiniteSubset& lhs, const GroupElement& rhs,
                                            std::int64_t bound) {
  const FiniteSubset u = lhs.with(rhs);
  const std::size_t d = u.rank();
  std::set<FiniteSubset> seen;
  std::vector<FiniteSubset> out;
  auto push = [&](FiniteSubset x) {
    if (x.size() > kMaxCandidateSize) return;
    if (seen.insert(x).second) out.push_back(std::move(x));
  };
  push(FiniteSubset::singleton(GroupElement::zero(d)));

  // Nonempty subsets of u, smallest first, then their k-fold sums.
  const std::size_t n = std::min(u.size(), kMaxSubsetBase);
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 1; m < (1u << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });
  std::vector<FiniteSubset> ys;
  const std::int64_t kmax = std::min<std::int64_t>(bound, 2);
  for (std::int64_t k = 1; k <= kmax; ++k) {
    for (std::uint32_t m : masks) {
      std::vector<GroupElement> pick;
      for (std::size_t i = 0; i < n; ++i) {
        if (m & (1u << i)) pick.push_back(u[i]);
      }
      FiniteSubset y = nfold(FiniteSubset(std::move(pick)), k);
      ys.push_back(y);
      push(std::move(y));
    }
  }

  // Progressions along pairwise differences.
  std::vector<FiniteSubset> zs;
  const std::int64_t pq = std::min<std::int64_t>(bound, 3);
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (i == j) continue;
      const GroupElement step = u[i] - u[j];
      for (std::int64_t p = 0; p <= pq; ++p) {
        for (std::int64_t q = 0; q <= pq; ++q) {
          if (p == 0 && q == 0) continue;
          FiniteSubset z = progression(step, q, p);
          zs.push_back(z);
          push(std::move(z));
        }
      }
    }
  }

  for (const auto& y : ys) {
    for (const auto& z : zs) {
      if (y.size() * z.size() > kMaxCandidateSize * 4) continue;
      push(sumset(y, z));
    }
  }
  return out;
}

}  // namespace

Decision prufer_entails(const RelationHandle& base, const FiniteSubset& lhs,
                        const GroupElement& rhs, std::int64_t bound) {
  if (bound < 0) throw ArgumentError("Prufer bound must be nonnegative");
  if (lhs.rank() != base.group().rank()) throw DimensionError("subset has wrong rank for relation");
  base.group().check_rank(rhs);
  for (const auto& x : prufer_candidates(lhs, rhs, bound)) {
    if (preorder_leq(base, sumset(lhs, x), translate(rhs, x)).is_yes()) {
      return Decision::yes(Witness{PruferWitness{x}}, bound);
    }
  }
  return Decision::unknown(bound);
}

AgreementReport agreement_check(const RelationHandle& base, std::int64_t samples,
                                std::uint64_t seed, AgreementBounds bounds) {
  const OrderedGroup& g = base.group();
  const std::size_t d = g.rank();
  const SampleBox box = default_box(g);
  Sampler s(seed);
  AgreementReport report;
  for (std::int64_t t = 0; t < samples; ++t) {
    const FiniteSubset a = s.subset(d, 3, box.lo, box.hi);
    GroupElement b = s.element(d, box.lo, box.hi);
    if (s.coin(0.5)) b = a[s.index(a.size())] + a[s.index(a.size())] - a[s.index(a.size())];
    ++report.trials;
    const Decision reg = regular_entails(base, Sequent(a, FiniteSubset::singleton(b)), bounds.depth);
    if (reg.is_unknown()) {
      ++report.regular_unknown;
      continue;
    }
    const Decision pr = prufer_entails(base, a, b, bounds.prufer_bound);
    if (pr.is_yes()) {
      ++report.decided;
      if (reg.is_yes()) {
        ++report.agreements;
      } else {
        report.disagreements.emplace_back(a, b);
      }
    } else if (reg.is_yes()) {
      ++report.prufer_unknown_regular_yes;
    } else {
      ++report.prufer_unknown_regular_no;
    }
  }
  return report;
}

ClosednessReport closedness_check(const RelationHandle& base, std::int64_t samples,
                                  std::uint64_t seed, std::int64_t depth) {
  const OrderedGroup& g = base.group();
  const std::size_t d = g.rank();
  const SampleBox box = default_box(g);
  ClosednessReport report;
  std::set<std::pair<GroupElement, GroupElement>> found;

  auto probe = [&](const GroupElement& a, const GroupElement& b) {
    const Decision r =
        regular_entails(base, Sequent(FiniteSubset::singleton(a), FiniteSubset::singleton(b)), depth);
    if (r.is_unknown()) {
      ++report.skipped;
      return;
    }
    ++report.trials;
    if (r.is_yes() && !g.leq(a, b)) found.emplace(a, b);
  };

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

  // X <= b + X in the base preorder with b not positive.
  for (const auto& b : points) {
    if (g.is_nonneg(b)) continue;
    for (std::int64_t p = 1; p <= 3; ++p) {
      const FiniteSubset x = progression(b, 0, p);
      if (preorder_leq(base, x, translate(b, x)).is_yes()) {
        report.delta.push_back(DeltaViolation{b, x});
        break;
      }
    }
  }
  return report;
}

}  // namespace lorenzen
