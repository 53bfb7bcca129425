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

#include "lorenzen/regularise.hpp"

#include <algorithm>

#include "lorenzen/dedekind.hpp"
#include "lorenzen/linfeas.hpp"
#include "lorenzen/sampling.hpp"

namespace lorenzen {

namespace {

constexpr std::size_t kPoolCap = 24;
constexpr std::int64_t kMaxAuxiliaries = 3;

std::vector<GroupElement> columns_of(const Sequent& s) {
  std::vector<GroupElement> cols;
  for (const auto& a : s.lhs) {
    for (const auto& b : s.rhs) cols.push_back(a - b);
  }
  return cols;
}

IntMatrix reshape(const std::vector<Integer>& flat, std::size_t rows, std::size_t cols) {
  IntMatrix p(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) p[i][j] = flat[i * cols + j];
  }
  return p;
}

void check_sequent(const OrderedGroup& g, const Sequent& s) {
  if (s.lhs.rank() != g.rank()) {
    throw DimensionError("sequent " + s.to_string() + " does not have rank " +
                         std::to_string(g.rank()));
  }
}

// Calls f on every m-subset of {0..n-1} in lexicographic order until it
// returns true.
template <typename F>
bool for_each_combination(std::size_t n, std::size_t m, F&& f) {
  if (m > n) return false;
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    if (f(idx)) return true;
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == n - m + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Sequent::Sequent(FiniteSubset l, FiniteSubset r) : lhs(std::move(l)), rhs(std::move(r)) {
  if (lhs.rank() != rhs.rank()) throw DimensionError("sequent sides have different ranks");
}

std::string Sequent::to_string() const { return lhs.to_string() + " |- " + rhs.to_string(); }

Decision free_entails(const OrderedGroup& g, const Sequent& s) {
  check_sequent(g, s);
  const std::vector<GroupElement> cols = columns_of(s);

  if (g.kind() == ConeKind::Semigroup) {
    // Some b_j >= a_i as integers; then n (b_j - a_i) lands in the
    // semigroup for a suitable multiple n of the gcd.
    for (std::size_t i = 0; i < s.lhs.size(); ++i) {
      for (std::size_t j = 0; j < s.rhs.size(); ++j) {
        const GroupElement gap = s.rhs[j] - s.lhs[i];
        if (gap[0] < 0) continue;
        Integer n = 1;
        while (!g.is_nonneg(n * gap)) ++n;
        IntMatrix p(s.lhs.size(), std::vector<Integer>(s.rhs.size(), Integer(0)));
        p[i][j] = n;
        return Decision::yes(Witness{CombinationWitness{std::move(p)}});
      }
    }
    return Decision::no();
  }

  auto p = feasible(cols, g.inequality_rows());
  if (!p) return Decision::no();
  return Decision::yes(
      Witness{CombinationWitness{reshape(to_integer_vector(*p), s.lhs.size(), s.rhs.size())}});
}

Decision regular_entails(const RelationHandle& base, const Sequent& s, std::int64_t depth) {
  check_sequent(base.group(), s);
  switch (base.kind()) {
    case RelationHandle::Kind::Finest:
      return free_entails(base.group(), s);
    case RelationHandle::Kind::Dedekind: {
      const MonomialIdeal ideal(base.domain(), difference_set(s.lhs, s.rhs));
      Decision d = integral_dependence(ideal, GroupElement::zero(base.group().rank()));
      if (!d.is_yes()) return d;
      const auto& k = std::get<CombinationWitness>(d.witness->value).p;
      IntMatrix p(s.lhs.size(), std::vector<Integer>(s.rhs.size(), Integer(0)));
      const FiniteSubset& gens = ideal.generators();
      for (std::size_t l = 0; l < gens.size(); ++l) {
        bool placed = false;
        for (std::size_t i = 0; i < s.lhs.size() && !placed; ++i) {
          for (std::size_t j = 0; j < s.rhs.size() && !placed; ++j) {
            if (s.lhs[i] - s.rhs[j] == gens[l]) {
              p[i][j] += k[l][0];
              placed = true;
            }
          }
        }
        if (!placed) throw InternalError("ideal generator outside A - B");
      }
      return Decision::yes(Witness{CombinationWitness{std::move(p)}});
    }
    default:
      return sign_tree_entails(base, s, depth);
  }
}

std::vector<GroupElement> sign_tree_pool(const FiniteSubset& d) {
  std::vector<GroupElement> pool;
  auto add = [&](const GroupElement& e) {
    if (pool.size() >= kPoolCap || e.is_zero()) return;
    const GroupElement minus = -e;
    for (const auto& q : pool) {
      if (q == e || q == minus) return;
    }
    pool.push_back(e);
  };
  for (const auto& e : d) add(e);
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) add(d[i] - d[j]);
  }
  return pool;
}

Decision sign_tree_entails(const RelationHandle& base, const Sequent& s, std::int64_t depth) {
  check_sequent(base.group(), s);
  if (depth < 0) throw ArgumentError("search depth must be nonnegative");
  const FiniteSubset diffs = difference_set(s.lhs, s.rhs);
  const GroupElement zero = GroupElement::zero(base.group().rank());

  const Decision plain = multi_forced_entails(base, {}, diffs, zero, depth);
  if (plain.is_yes()) return Decision::yes(*plain.witness, depth);

  const std::vector<GroupElement> pool = sign_tree_pool(diffs);
  const auto max_aux = static_cast<std::size_t>(std::min(depth, kMaxAuxiliaries));
  std::optional<SignTreeWitness> found;
  for (std::size_t m = 1; m <= max_aux && !found; ++m) {
    for_each_combination(pool.size(), m, [&](const std::vector<std::size_t>& pick) {
      SignTreeWitness tree;
      for (std::size_t i : pick) tree.auxiliaries.push_back(pool[i]);
      for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        SignLeaf leaf;
        std::vector<GroupElement> xs;
        for (std::size_t i = 0; i < m; ++i) {
          const int sign = (mask >> i) & 1 ? -1 : 1;
          leaf.signs.push_back(sign);
          xs.push_back(sign > 0 ? tree.auxiliaries[i] : -tree.auxiliaries[i]);
        }
        Decision d = multi_forced_entails(base, xs, diffs, zero, depth);
        if (!d.is_yes()) return false;
        leaf.forcing = std::get<ForcingWitness>(d.witness->value);
        tree.leaves.push_back(std::move(leaf));
      }
      found = std::move(tree);
      return true;
    });
  }
  if (found) return Decision::yes(Witness{std::move(*found)}, depth);
  return Decision::unknown(depth);
}

Decision forced_regular_entails(const RelationHandle& base, const GroupElement& x,
                                const Sequent& s, std::int64_t depth) {
  check_sequent(base.group(), s);
  base.group().check_rank(x);
  std::int64_t bound = depth;
  for (std::int64_t p = 0; p <= depth; ++p) {
    const FiniteSubset widened = sumset(s.lhs, progression(x, 0, p));
    Decision d = regular_entails(base, Sequent(widened, s.rhs), depth);
    if (d.is_yes()) {
      auto inner = std::make_shared<const Witness>(std::move(*d.witness));
      return Decision::yes(Witness{ForcingWitness{{Integer(static_cast<long>(p))}, 0, inner}},
                           depth);
    }
    if (d.bound_used) bound = std::max(bound, *d.bound_used);
  }
  return Decision::unknown(bound);
}

// ---------------------------------------------------------------------------

SuiteReport regular_axiom_suite(const RelationHandle& base, std::int64_t samples,
                                std::uint64_t seed, std::int64_t depth) {
  const OrderedGroup& g = base.group();
  const std::size_t d = g.rank();
  const SampleBox box = default_box(g);
  constexpr std::size_t kSet = 3;
  Sampler s(seed);
  SuiteReport report;

  auto entails = [&](const FiniteSubset& a, const FiniteSubset& b) {
    return regular_entails(base, Sequent(a, b), depth);
  };
  auto set = [&]() { return s.subset(d, kSet, box.lo, box.hi); };
  auto elem = [&]() { return s.element(d, box.lo, box.hi); };
  auto show = [](const FiniteSubset& a, const FiniteSubset& b) { return a.to_string() + " |- " + b.to_string(); };

  CheckReport& r0 = report.add("R0");
  for (std::int64_t t = 0; t < samples; ++t) {
    const GroupElement a = elem();
    const FiniteSubset lhs = set().with(a);
    const FiniteSubset rhs = set().with(a);
    const Decision r = entails(lhs, rhs);
    if (r.is_unknown()) {
      ++r0.skipped;
      continue;
    }
    ++r0.trials;
    if (!r.is_yes()) r0.record_failure(mass(lhs) + mass(rhs), show(lhs, rhs));
  }

  CheckReport& r1 = report.add("R1");
  for (std::int64_t t = 0; t < samples; ++t) {
    const FiniteSubset a = set();
    FiniteSubset b = set();
    if (s.coin(0.5)) b = b.with(a[s.index(a.size())] + s.cone_element(g));
    const Decision before = entails(a, b);
    if (before.is_unknown()) {
      ++r1.skipped;
      continue;
    }
    if (!before.is_yes()) {
      ++r1.trials;
      continue;
    }
    const FiniteSubset a2 = set_union(a, set());
    const FiniteSubset b2 = set_union(b, set());
    const Decision after = entails(a2, b2);
    if (after.is_unknown()) {
      ++r1.skipped;
      continue;
    }
    ++r1.trials;
    if (!after.is_yes()) {
      r1.record_failure(mass(a2) + mass(b2), show(a, b) + " widened to " + show(a2, b2));
    }
  }

  CheckReport& r2 = report.add("R2");
  for (std::int64_t t = 0; t < samples; ++t) {
    const FiniteSubset a = set();
    const FiniteSubset b = set();
    const GroupElement c = s.coin(0.5) ? a[s.index(a.size())] + s.cone_element(g) : elem();
    const Decision left = entails(a, b.with(c));
    const Decision right = entails(a.with(c), b);
    if (left.is_unknown() || right.is_unknown()) {
      ++r2.skipped;
      continue;
    }
    if (!left.is_yes() || !right.is_yes()) {
      ++r2.trials;
      continue;
    }
    const Decision cut = entails(a, b);
    if (cut.is_unknown()) {
      ++r2.skipped;
      continue;
    }
    ++r2.trials;
    if (!cut.is_yes()) {
      r2.record_failure(mass(a) + mass(b) + mass(c), show(a, b) + " c=" + c.to_string());
    }
  }

  CheckReport& r3 = report.add("R3");
  for (std::int64_t t = 0; t < samples; ++t) {
    const GroupElement a = elem();
    const GroupElement b = a + s.cone_element(g);
    const Decision r = entails(FiniteSubset::singleton(a), FiniteSubset::singleton(b));
    if (r.is_unknown()) {
      ++r3.skipped;
      continue;
    }
    ++r3.trials;
    if (!r.is_yes()) r3.record_failure(mass(a) + mass(b), "a=" + a.to_string() + " b=" + b.to_string());
  }

  CheckReport& r4 = report.add("R4");
  for (std::int64_t t = 0; t < samples; ++t) {
    const FiniteSubset a = set();
    const FiniteSubset b = s.coin(0.5) ? set().with(a[0] + s.cone_element(g)) : set();
    const GroupElement x = elem();
    const Decision before = entails(a, b);
    const Decision after = entails(translate(x, a), translate(x, b));
    if (before.is_unknown() || after.is_unknown()) {
      ++r4.skipped;
      continue;
    }
    ++r4.trials;
    if (before.verdict != after.verdict) {
      r4.record_failure(mass(a) + mass(b) + mass(x), show(a, b) + " x=" + x.to_string());
    }
  }

  CheckReport& r5 = report.add("R5");
  for (std::int64_t t = 0; t < samples; ++t) {
    const GroupElement x1 = elem(), x2 = elem(), y1 = elem();
    const GroupElement y2 = x1 + x2 - y1;
    const FiniteSubset lhs{x1, x2};
    const FiniteSubset rhs{y1, y2};
    const Decision r = entails(lhs, rhs);
    if (r.is_unknown()) {
      ++r5.skipped;
      continue;
    }
    ++r5.trials;
    if (!r.is_yes()) r5.record_failure(mass(lhs) + mass(rhs), show(lhs, rhs));
  }

  CheckReport& reg = report.add("R5-regularity");
  for (std::int64_t t = 0; t < samples; ++t) {
    const GroupElement x = elem(), y = elem(), a = elem(), b = elem();
    const FiniteSubset lhs{x + a, y + b};
    const FiniteSubset rhs{y + a, x + b};
    const Decision r = entails(lhs, rhs);
    if (r.is_unknown()) {
      ++reg.skipped;
      continue;
    }
    ++reg.trials;
    if (!r.is_yes()) reg.record_failure(mass(lhs) + mass(rhs), show(lhs, rhs));
  }
  return report;
}

CheckReport linearisation_check(const RelationHandle& base, std::int64_t samples,
                                std::uint64_t seed, std::int64_t depth) {
  const OrderedGroup& g = base.group();
  const std::size_t d = g.rank();
  const SampleBox box = default_box(g);
  Sampler s(seed);
  CheckReport report;
  report.name = "linearisation";
  for (std::int64_t t = 0; t < samples; ++t) {
    const Sequent seq(s.subset(d, 3, box.lo, box.hi), s.subset(d, 3, box.lo, box.hi));
    const GroupElement x = s.element(d, box.lo, box.hi);
    const Decision up = forced_regular_entails(base, x, seq, depth);
    const Decision down = forced_regular_entails(base, -x, seq, depth);
    if (!up.is_yes() || !down.is_yes()) {
      ++report.skipped;
      continue;
    }
    const Decision r = regular_entails(base, seq, depth);
    if (r.is_unknown()) {
      ++report.skipped;
      continue;
    }
    ++report.trials;
    if (!r.is_yes()) {
      report.record_failure(mass(seq.lhs) + mass(seq.rhs) + mass(x),
                            seq.to_string() + " x=" + x.to_string());
    }
  }
  return report;
}

}  // namespace lorenzen
