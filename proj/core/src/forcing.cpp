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

// Forcing positivity of constraint elements over a base relation.

#include <algorithm>
#include <optional>

#include "lorenzen/linfeas.hpp"
#include "lorenzen/relation.hpp"

namespace lorenzen {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Smallest j >= 0 with v - j x in the cone of g, if any. Exact.
std::optional<Integer> least_step(const OrderedGroup& g, const GroupElement& v,
                                  const GroupElement& x) {
  if (g.is_polyhedral()) {
    Integer lo = 0;
    std::optional<Integer> hi;
    for (const auto& row : g.inequality_rows()) {
      Integer rv = 0, rx = 0;
      for (std::size_t i = 0; i < row.size(); ++i) {
        rv += row[i] * v[i];
        rx += row[i] * x[i];
      }
      // rv - j rx >= 0
      if (rx == 0) {
        if (rv < 0) return std::nullopt;
      } else if (rx > 0) {
        Integer h = floor_div(rv, rx);
        if (!hi || h < *hi) hi = h;
      } else {
        Integer l = ceil_div(rv, rx);
        if (l > lo) lo = l;
      }
    }
    if (hi && lo > *hi) return std::nullopt;
    return lo;
  }

  // Semigroup cone on Z. Beyond frobenius * gcd membership only depends on
  // divisibility by the gcd, which is periodic in j with period dividing gcd.
  const Integer& val = v[0];
  const Integer& step = x[0];
  const Integer gcd = g.generator_gcd();
  const Integer top = g.frobenius() * gcd;
  auto in_cone = [&](const Integer& j) { return g.is_nonneg(GroupElement(std::vector<Integer>{val - j * step})); };
  if (step == 0) return in_cone(0) ? std::optional<Integer>(0) : std::nullopt;
  if (step < 0) {
    // Values val + j |step| increase with j.
    const Integer up = -step;
    Integer start = val >= 0 ? Integer(0) : ceil_div(-val, up);
    Integer past_top = val > top ? Integer(0) : ceil_div(top + 1 - val, up);
    Integer end = std::max(start, past_top) + gcd;
    for (Integer j = start; j <= end; ++j) {
      if (in_cone(j)) return j;
    }
    return std::nullopt;
  }
  // Values val - j step decrease; only j <= val / step can land in the cone.
  if (val < 0) return std::nullopt;
  const Integer last = floor_div(val, step);
  // While the value stays above top, a hit at j forces a hit at j - gcd.
  for (Integer j = 0; j <= last && j < gcd; ++j) {
    if (in_cone(j)) return j;
  }
  Integer j = std::max(Integer(gcd), val > top ? ceil_div(val - top, step) : Integer(0));
  for (; j <= last; ++j) {
    if (in_cone(j)) return j;
  }
  return std::nullopt;
}

// Is v in cone + N x_1 + ... + N x_k? Semigroup cones only.
bool in_forced_monoid(const OrderedGroup& g, const std::vector<GroupElement>& xs,
                      const GroupElement& v) {
  Integer gcd = g.generator_gcd();
  bool negative = false;
  std::vector<Integer> gens = g.generators();
  for (const auto& x : xs) {
    if (x[0] < 0) negative = true;
    if (x[0] > 0) gens.push_back(x[0]);
    Integer a = abs(x[0]);
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), a.get_mpz_t());
  }
  // Both signs present: the monoid is the whole subgroup gcd * Z.
  if (negative) return mpz_divisible_p(v[0].get_mpz_t(), gcd.get_mpz_t()) != 0;
  return OrderedGroup::semigroup(std::move(gens)).is_nonneg(v);
}

bool relaxation_feasible(const OrderedGroup& g, const std::vector<GroupElement>& xs,
                         const GroupElement& v) {
  // j >= 0 rational with rows (v - sum j_i x_i) >= 0.
  const IntMatrix rows = g.inequality_rows();
  const std::size_t k = xs.size();
  RationalMatrix a(rows.size(), std::vector<Rational>(k + rows.size(), Rational(0)));
  std::vector<Rational> rhs(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Integer rv = 0;
    for (std::size_t i = 0; i < v.rank(); ++i) rv += rows[r][i] * v[i];
    rhs[r] = rv;
    for (std::size_t c = 0; c < k; ++c) {
      Integer rx = 0;
      for (std::size_t i = 0; i < v.rank(); ++i) rx += rows[r][i] * xs[c][i];
      a[r][c] = rx;
    }
    a[r][k + r] = 1;
  }
  return solve_nonnegative(a, rhs).has_value();
}

// Calls f on every j in [0, t]^k with max(j) = t, lexicographically.
template <typename F>
bool for_each_shell(std::size_t k, std::int64_t t, F&& f) {
  std::vector<Integer> j(k, Integer(0));
  while (true) {
    bool on_shell = std::any_of(j.begin(), j.end(), [&](const Integer& x) { return x == t; });
    if (on_shell && f(j)) return true;
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (j[i] < t) {
        ++j[i];
        break;
      }
      j[i] = 0;
      if (i == 0) return false;
    }
    if (k == 0) return false;
  }
}

Decision finest_like_forced(const RelationHandle& base, const std::vector<GroupElement>& xs,
                            const FiniteSubset& lhs, const GroupElement& rhs,
                            std::int64_t depth) {
  const OrderedGroup& g = base.group();
  const std::size_t k = xs.size();
  if (k == 0) {
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      if (g.leq(lhs[i], rhs)) return Decision::yes(Witness{ForcingWitness{{}, i, nullptr}});
    }
    return Decision::no();
  }
  if (k == 1) {
    std::optional<std::pair<Integer, std::size_t>> best;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      auto j = least_step(g, rhs - lhs[i], xs[0]);
      if (j && (!best || *j < best->first)) best = std::make_pair(*j, i);
    }
    if (!best) return Decision::no();
    return Decision::yes(Witness{ForcingWitness{{best->first}, best->second, nullptr}});
  }

  // Several constraints: refute exactly where possible, else search a box.
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    const GroupElement v = rhs - lhs[i];
    const bool possible =
        g.is_polyhedral() ? relaxation_feasible(g, xs, v) : in_forced_monoid(g, xs, v);
    if (possible) candidates.push_back(i);
  }
  if (candidates.empty()) return Decision::no();
  std::optional<Witness> found;
  for (std::int64_t t = 0; t <= depth && !found; ++t) {
    for_each_shell(k, t, [&](const std::vector<Integer>& j) {
      for (std::size_t i : candidates) {
        GroupElement e = lhs[i];
        for (std::size_t c = 0; c < k; ++c) e += j[c] * xs[c];
        if (g.leq(e, rhs)) {
          found = Witness{ForcingWitness{j, i, nullptr}};
          return true;
        }
      }
      return false;
    });
  }
  if (found) return Decision::yes(std::move(*found), depth);
  return Decision::unknown(depth);
}

FiniteSubset enlarge(const FiniteSubset& lhs, const std::vector<GroupElement>& xs,
                     std::int64_t p) {
  FiniteSubset out = lhs;
  for (const auto& x : xs) out = sumset(out, progression(x, 0, p));
  return out;
}

}  // namespace

Decision multi_forced_entails(const RelationHandle& base_in, const std::vector<GroupElement>& xs_in,
                              const FiniteSubset& lhs, const GroupElement& rhs,
                              std::int64_t depth) {
  if (depth < 0) throw ArgumentError("forcing depth must be nonnegative");
  RelationHandle base = base_in;
  std::vector<GroupElement> xs = xs_in;
  if (base.kind() == RelationHandle::Kind::Forced) {
    xs = base.constraints();
    xs.insert(xs.end(), xs_in.begin(), xs_in.end());
    base = base_in.base();
  }
  const OrderedGroup& g = base.group();
  if (lhs.rank() != g.rank()) throw DimensionError("subset has wrong rank for the relation");
  g.check_rank(rhs);
  for (const auto& x : xs) g.check_rank(x);

  if (base.is_finest_like()) return finest_like_forced(base, xs, lhs, rhs, depth);

  // Generic base: A + {0..p x_1} + ... |> b is monotone in p, so test the
  // full depth first and then look for the least p.
  const Decision top = sc_entails(base, enlarge(lhs, xs, depth), rhs);
  if (!top.is_yes()) return Decision::unknown(depth);
  for (std::int64_t p = 0; p < depth; ++p) {
    Decision d = sc_entails(base, enlarge(lhs, xs, p), rhs);
    if (d.is_yes()) {
      auto inner = std::make_shared<const Witness>(std::move(*d.witness));
      return Decision::yes(
          Witness{ForcingWitness{std::vector<Integer>(xs.size(), Integer(p)), 0, inner}}, depth);
    }
  }
  auto inner = std::make_shared<const Witness>(*top.witness);
  return Decision::yes(
      Witness{ForcingWitness{std::vector<Integer>(xs.size(), Integer(static_cast<long>(depth))), 0,
                             inner}},
      depth);
}

}  // namespace lorenzen
