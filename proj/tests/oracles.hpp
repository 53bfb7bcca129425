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

// Small independent reference implementations used to derive expected
// values. They share no code with the library beyond plain integers.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

/// Elements of the monoid generated by gens that are <= limit (0 included).
inline std::vector<bool> monoid_members(const std::vector<long>& gens, long limit) {
  std::vector<bool> in(static_cast<std::size_t>(limit + 1), false);
  in[0] = true;
  for (long v = 1; v <= limit; ++v) {
    for (long g : gens) {
      if (g <= v && in[static_cast<std::size_t>(v - g)]) in[static_cast<std::size_t>(v)] = true;
    }
  }
  return in;
}

inline bool in_monoid(const std::vector<long>& gens, long v) {
  if (v < 0) return false;
  return monoid_members(gens, v)[static_cast<std::size_t>(v)];
}

struct Frac {
  long num;
  long den;  // > 0
};

inline bool frac_leq(Frac a, Frac b) { return a.num * b.den <= b.num * a.den; }

/// Is b above a point of the segment [p, q] componentwise (rank 2)?
/// lambda p + (1 - lambda) q <= b, lambda in [0, 1], solved per coordinate.
inline bool above_segment(std::pair<long, long> p, std::pair<long, long> q,
                          std::pair<long, long> b) {
  Frac lo{0, 1}, hi{1, 1};
  auto constrain = [&](long pc, long qc, long bc) {
    // lambda (pc - qc) <= bc - qc
    const long coef = pc - qc, rhs = bc - qc;
    if (coef == 0) return rhs >= 0;
    if (coef > 0) {
      const Frac f{rhs, coef};
      if (frac_leq(f, hi)) hi = f;
    } else {
      const Frac f{-rhs, -coef};
      if (frac_leq(lo, f)) lo = f;
    }
    return true;
  };
  if (!constrain(p.first, q.first, b.first)) return false;
  if (!constrain(p.second, q.second, b.second)) return false;
  return frac_leq(lo, hi);
}

/// Integral dependence over a monomial ideal of k[t, u]: b lies in the
/// convex hull of the generators plus the positive quadrant. In the plane
/// two generators suffice.
inline bool poly2_integral(const std::vector<std::pair<long, long>>& gens,
                           std::pair<long, long> b) {
  for (const auto& p : gens) {
    for (const auto& q : gens) {
      if (above_segment(p, q, b)) return true;
    }
  }
  return false;
}

/// Minimal lattice points of the integral closure within the bounding box.
inline std::vector<std::pair<long, long>> poly2_closure(
    const std::vector<std::pair<long, long>>& gens) {
  long x0 = gens[0].first, x1 = x0, y0 = gens[0].second, y1 = y0;
  for (const auto& [x, y] : gens) {
    x0 = std::min(x0, x), x1 = std::max(x1, x);
    y0 = std::min(y0, y), y1 = std::max(y1, y);
  }
  std::vector<std::pair<long, long>> members;
  for (long x = x0; x <= x1; ++x) {
    for (long y = y0; y <= y1; ++y) {
      if (poly2_integral(gens, {x, y})) members.emplace_back(x, y);
    }
  }
  std::vector<std::pair<long, long>> minimal;
  for (const auto& m : members) {
    bool dominated = false;
    for (const auto& o : members) {
      if (o != m && o.first <= m.first && o.second <= m.second) dominated = true;
    }
    if (!dominated) minimal.push_back(m);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

}  // namespace oracle
