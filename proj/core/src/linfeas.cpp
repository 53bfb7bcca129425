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

#include "lorenzen/linfeas.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace lorenzen {

namespace {

Integer dot(const std::vector<Integer>& row, const GroupElement& v) {
  Integer s = 0;
  for (std::size_t i = 0; i < row.size(); ++i) s += row[i] * v[i];
  return s;
}

// rows * column for each column: the r x m matrix the engines work on.
std::vector<std::vector<Integer>> transformed(const std::vector<GroupElement>& columns,
                                              const IntMatrix& rows) {
  std::vector<std::vector<Integer>> m(rows.size(), std::vector<Integer>(columns.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t k = 0; k < columns.size(); ++k) m[r][k] = dot(rows[r], columns[k]);
  }
  return m;
}

void check_columns(const std::vector<GroupElement>& columns, std::size_t rank) {
  if (columns.empty()) throw ArgumentError("feasibility problem needs at least one column");
  for (const auto& c : columns) {
    if (c.rank() != rank) throw DimensionError("column " + c.to_string() + " has wrong rank");
  }
}

void check_rows(const IntMatrix& rows, std::size_t rank) {
  for (const auto& r : rows) {
    if (r.size() != rank) throw DimensionError("inequality row has wrong length");
  }
}

// Integer inequality alpha . q <= beta, stored primitive so that duplicates
// compare equal.
struct Ineq {
  std::vector<Integer> alpha;
  Integer beta;
  friend bool operator<(const Ineq& a, const Ineq& b) {
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return a.beta < b.beta;
  }
};

void make_primitive(Ineq& q) {
  Integer g = 0;
  for (const auto& a : q.alpha) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.beta.get_mpz_t());
  if (g > 1) {
    for (auto& a : q.alpha) a /= g;
    q.beta /= g;
  }
}

// Minimal z among inserted points with y-rank <= i, with the point index.
class MinFenwick {
 public:
  explicit MinFenwick(std::size_t n) : tree_(n + 1) {}
  void insert(std::size_t i, const Integer& z, std::size_t idx) {
    for (++i; i < tree_.size(); i += i & (~i + 1)) {
      if (!tree_[i] || z < tree_[i]->first) tree_[i] = std::make_pair(z, idx);
    }
  }
  std::optional<std::pair<Integer, std::size_t>> query(std::size_t i) const {
    std::optional<std::pair<Integer, std::size_t>> best;
    for (++i; i > 0; i -= i & (~i + 1)) {
      if (tree_[i] && (!best || tree_[i]->first < best->first)) best = tree_[i];
    }
    return best;
  }

 private:
  std::vector<std::optional<std::pair<Integer, std::size_t>>> tree_;
};

struct HalfSums {
  std::vector<std::vector<Integer>> sums;  // one per distinct sum, in the column space
  std::vector<std::vector<Integer>> p;     // a multiplier vector reaching it
  std::optional<std::vector<Integer>> nonzero_kernel;  // nonzero p with zero sum
};

// All sums of columns[lo, hi) with multipliers in [0, bound], deduplicated.
bool all_zero(const std::vector<Integer>& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

HalfSums enumerate_half(const std::vector<std::vector<Integer>>& cols, std::size_t lo,
                        std::size_t hi, std::int64_t bound, std::size_t dim) {
  HalfSums out;
  std::map<std::vector<Integer>, std::vector<Integer>> reached;
  reached.emplace(std::vector<Integer>(dim, Integer(0)), std::vector<Integer>(hi - lo, Integer(0)));
  for (std::size_t k = lo; k < hi; ++k) {
    std::map<std::vector<Integer>, std::vector<Integer>> next;
    for (const auto& [sum, p] : reached) {
      std::vector<Integer> s = sum;
      std::vector<Integer> q = p;
      for (std::int64_t t = 0; t <= bound; ++t) {
        q[k - lo] = t;
        // The zero sum always keeps the zero vector; a nonzero vector that
        // reaches it is a solution on its own and is kept aside.
        if (all_zero(s)) {
          if (!all_zero(q) && !out.nonzero_kernel) out.nonzero_kernel = q;
          next.insert_or_assign(s, std::vector<Integer>(hi - lo, Integer(0)));
        } else {
          next.emplace(s, q);
        }
        for (std::size_t i = 0; i < dim; ++i) s[i] += cols[k][i];
      }
    }
    reached = std::move(next);
  }
  for (auto& [s, p] : reached) {
    out.sums.push_back(s);
    out.p.push_back(p);
  }
  return out;
}

bool all_nonpositive(const std::vector<Integer>& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x <= 0; });
}

}  // namespace

// ---------------------------------------------------------------------------
// simplex

std::optional<std::vector<Rational>> solve_nonnegative(const RationalMatrix& a,
                                                       const std::vector<Rational>& rhs) {
  const std::size_t m = a.size();
  if (rhs.size() != m) throw DimensionError("right-hand side length mismatch");
  const std::size_t n = m ? a.front().size() : 0;
  for (const auto& row : a) {
    if (row.size() != n) throw DimensionError("ragged constraint matrix");
  }
  if (m == 0) return std::vector<Rational>(n, Rational(0));

  // Columns: n structural, m artificial, then the right-hand side.
  const std::size_t width = n + m + 1;
  const std::size_t rhs_col = n + m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = rhs[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    t[i][n + i] = 1;
    t[i][rhs_col] = flip ? Rational(-rhs[i]) : rhs[i];
    basis[i] = n + i;
  }
  // Phase-1 objective: sum of artificials, expressed in nonbasic terms.
  std::vector<Rational> z(width, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) z[j] += t[i][j];
    z[rhs_col] += t[i][rhs_col];
  }

  while (true) {
    std::size_t enter = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (z[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter == n) break;
    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][rhs_col] / t[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) throw InternalError("phase-1 objective unbounded");
    const Rational piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    if (z[enter] != 0) {
      const Rational f = z[enter];
      for (std::size_t j = 0; j < width; ++j) z[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  if (z[rhs_col] != 0) return std::nullopt;
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) x[basis[i]] = t[i][rhs_col];
  }
  return x;
}

// ---------------------------------------------------------------------------

std::optional<std::vector<Rational>> feasible(const std::vector<GroupElement>& columns,
                                              const IntMatrix& rows) {
  if (rows.empty()) throw ArgumentError("cone needs at least one inequality row");
  const std::size_t d = rows.front().size();
  check_rows(rows, d);
  check_columns(columns, d);
  const std::size_t m = columns.size();
  const std::size_t r = rows.size();
  const auto rc = transformed(columns, rows);

  // Unknowns (p_1..p_m, s_1..s_r): rows*C*p + s = 0, sum p = 1.
  RationalMatrix a(r + 1, std::vector<Rational>(m + r, Rational(0)));
  std::vector<Rational> rhs(r + 1, Rational(0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < m; ++k) a[i][k] = rc[i][k];
    a[i][m + i] = 1;
  }
  for (std::size_t k = 0; k < m; ++k) a[r][k] = 1;
  rhs[r] = 1;

  auto sol = solve_nonnegative(a, rhs);
  if (!sol) return std::nullopt;
  std::vector<Rational> p(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(m));

  // Independent re-check of every returned witness.
  Rational total = 0;
  for (const auto& x : p) {
    if (x < 0) throw InternalError("simplex returned a negative multiplier");
    total += x;
  }
  if (total != 1) throw InternalError("simplex witness is not normalised");
  for (std::size_t i = 0; i < r; ++i) {
    Rational s = 0;
    for (std::size_t k = 0; k < m; ++k) s += p[k] * rc[i][k];
    if (s > 0) throw InternalError("simplex witness violates an inequality row");
  }
  return p;
}

std::optional<std::vector<Rational>> feasible(const FeasibilityProblem& prob) {
  const ConeKind kind = prob.cone.kind();
  if (kind != ConeKind::Matrix && kind != ConeKind::Product) {
    throw UnsupportedConeError(std::string("feasible() needs a matrix or product cone, got ") +
                               to_string(kind));
  }
  check_columns(prob.columns, prob.cone.rank());
  auto p = feasible(prob.columns, prob.cone.inequality_rows());
  if (p && !verify_combination(prob.columns, prob.cone, *p)) {
    throw InternalError("feasibility witness failed independent verification");
  }
  return p;
}

std::optional<std::vector<Rational>> separating_functional(const std::vector<GroupElement>& columns,
                                                           const IntMatrix& rows) {
  if (rows.empty()) throw ArgumentError("cone needs at least one inequality row");
  const std::size_t d = rows.front().size();
  check_rows(rows, d);
  check_columns(columns, d);
  const std::size_t m = columns.size();
  const std::size_t r = rows.size();
  const auto rc = transformed(columns, rows);

  // Unknowns (y_1..y_r, t_1..t_m): (rows*C)^T y - t = 1.
  RationalMatrix a(m, std::vector<Rational>(r + m, Rational(0)));
  std::vector<Rational> rhs(m, Rational(1));
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < r; ++i) a[k][i] = rc[i][k];
    a[k][r + k] = -1;
  }
  auto sol = solve_nonnegative(a, rhs);
  if (!sol) return std::nullopt;
  std::vector<Rational> y(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(r));
  for (std::size_t k = 0; k < m; ++k) {
    Rational s = 0;
    for (std::size_t i = 0; i < r; ++i) s += y[i] * rc[i][k];
    if (s < 1) throw InternalError("separating functional fails on a column");
  }
  return y;
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin

bool fourier_motzkin_feasible(const std::vector<GroupElement>& columns, const IntMatrix& rows) {
  if (rows.empty()) throw ArgumentError("cone needs at least one inequality row");
  const std::size_t d = rows.front().size();
  check_rows(rows, d);
  check_columns(columns, d);
  const std::size_t m = columns.size();
  const auto rc = transformed(columns, rows);

  // Eliminate p_m through sum p = 1; unknowns q_k = p_k for k < m.
  const std::size_t nv = m - 1;
  std::set<Ineq> system;
  auto add = [&](Ineq q) {
    make_primitive(q);
    system.insert(std::move(q));
  };
  for (std::size_t k = 0; k < nv; ++k) {
    Ineq q{std::vector<Integer>(nv, Integer(0)), 0};
    q.alpha[k] = -1;
    add(q);
  }
  if (nv > 0) add(Ineq{std::vector<Integer>(nv, Integer(1)), 1});
  for (const auto& row : rc) {
    Ineq q{std::vector<Integer>(nv), -row[m - 1]};
    for (std::size_t k = 0; k < nv; ++k) q.alpha[k] = row[k] - row[m - 1];
    add(q);
  }

  for (std::size_t v = 0; v < nv; ++v) {
    std::vector<Ineq> pos, neg;
    std::set<Ineq> next;
    for (const auto& q : system) {
      const int s = sgn(q.alpha[v]);
      if (s > 0) {
        pos.push_back(q);
      } else if (s < 0) {
        neg.push_back(q);
      } else {
        next.insert(q);
      }
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        const Integer fp = -n.alpha[v];
        const Integer fn = p.alpha[v];
        Ineq q{std::vector<Integer>(nv), fp * p.beta + fn * n.beta};
        for (std::size_t k = 0; k < nv; ++k) q.alpha[k] = fp * p.alpha[k] + fn * n.alpha[k];
        make_primitive(q);
        next.insert(std::move(q));
      }
    }
    system = std::move(next);
    // Constant rows decide early; keep only the nonconstant ones.
    std::set<Ineq> kept;
    for (const auto& q : system) {
      if (all_zero(q.alpha)) {
        if (q.beta < 0) return false;
      } else {
        kept.insert(q);
      }
    }
    system = std::move(kept);
  }
  for (const auto& q : system) {
    if (q.beta < 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// brute force

std::optional<std::vector<Integer>> brute_force_feasible(const FeasibilityProblem& prob,
                                                         std::int64_t bound) {
  if (bound < 1) throw ArgumentError("brute-force bound must be >= 1");
  const OrderedGroup& g = prob.cone;
  check_columns(prob.columns, g.rank());
  const std::size_t m = prob.columns.size();

  // Work in the image space rows*c when the cone is polyhedral (target: all
  // coordinates <= 0); otherwise in the group itself (target: -sum in cone).
  const bool polyhedral = g.is_polyhedral();
  std::vector<std::vector<Integer>> cols;
  std::size_t dim;
  if (polyhedral) {
    const IntMatrix rows = g.inequality_rows();
    const auto rc = transformed(prob.columns, rows);
    dim = rows.size();
    cols.assign(m, std::vector<Integer>(dim));
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t i = 0; i < dim; ++i) cols[k][i] = rc[i][k];
    }
  } else {
    dim = g.rank();
    for (const auto& c : prob.columns) cols.emplace_back(c.coords().begin(), c.coords().end());
  }
  auto good = [&](const std::vector<Integer>& s) {
    if (polyhedral) return all_nonpositive(s);
    std::vector<Integer> neg(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) neg[i] = -s[i];
    return g.is_nonneg(GroupElement(std::move(neg)));
  };

  // Meet in the middle: all sums of the first half against all sums of the
  // second half.
  const std::size_t split = (m + 1) / 2;
  const HalfSums left = enumerate_half(cols, 0, split, bound, dim);
  const HalfSums right = enumerate_half(cols, split, m, bound, dim);
  auto join = [&](std::size_t li, std::size_t ri) {
    std::vector<Integer> p = left.p[li];
    p.insert(p.end(), right.p[ri].begin(), right.p[ri].end());
    return p;
  };
  std::size_t right_zero = right.sums.size();
  for (std::size_t j = 0; j < right.sums.size(); ++j) {
    if (all_zero(right.p[j])) right_zero = j;
  }

  if (left.nonzero_kernel) {
    std::vector<Integer> p = *left.nonzero_kernel;
    p.resize(m, Integer(0));
    return p;
  }
  if (right.nonzero_kernel) {
    std::vector<Integer> p(split, Integer(0));
    p.insert(p.end(), right.nonzero_kernel->begin(), right.nonzero_kernel->end());
    return p;
  }

  // Second half contributes nothing: the first half alone must be nonzero.
  for (std::size_t i = 0; i < left.sums.size(); ++i) {
    if (!all_zero(left.p[i]) && good(left.sums[i])) return join(i, right_zero);
  }

  if (!polyhedral || dim > 3) {
    for (std::size_t j = 0; j < right.sums.size(); ++j) {
      if (all_zero(right.p[j])) continue;
      for (std::size_t i = 0; i < left.sums.size(); ++i) {
        std::vector<Integer> s = left.sums[i];
        for (std::size_t k = 0; k < dim; ++k) s[k] += right.sums[j][k];
        if (good(s)) return join(i, j);
      }
    }
    return std::nullopt;
  }

  // Polyhedral with at most three rows: an offline dominance query. Is there
  // a left sum l with l <= -r coordinatewise? Sweep the first coordinate,
  // index the second with a Fenwick tree holding the minimal third.
  auto coord = [&](const std::vector<Integer>& v, std::size_t k) {
    return k < v.size() ? v[k] : Integer(0);
  };
  std::vector<std::size_t> lorder(left.sums.size());
  for (std::size_t i = 0; i < lorder.size(); ++i) lorder[i] = i;
  std::sort(lorder.begin(), lorder.end(), [&](std::size_t a, std::size_t b) {
    return coord(left.sums[a], 0) < coord(left.sums[b], 0);
  });
  std::vector<Integer> ys;
  for (const auto& s : left.sums) ys.push_back(coord(s, 1));
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  struct Query {
    Integer x, y, z;
    std::size_t right_index;
  };
  std::vector<Query> queries;
  for (std::size_t j = 0; j < right.sums.size(); ++j) {
    if (all_zero(right.p[j])) continue;
    queries.push_back({-coord(right.sums[j], 0), -coord(right.sums[j], 1),
                       -coord(right.sums[j], 2), j});
  }
  std::sort(queries.begin(), queries.end(),
            [](const Query& a, const Query& b) { return a.x < b.x; });

  MinFenwick tree(ys.size());
  std::size_t next = 0;
  for (const auto& q : queries) {
    while (next < lorder.size() && coord(left.sums[lorder[next]], 0) <= q.x) {
      const std::size_t i = lorder[next++];
      const auto rank = static_cast<std::size_t>(
          std::lower_bound(ys.begin(), ys.end(), coord(left.sums[i], 1)) - ys.begin());
      tree.insert(rank, coord(left.sums[i], 2), i);
    }
    const auto it = std::upper_bound(ys.begin(), ys.end(), q.y);
    if (it == ys.begin()) continue;
    const auto best = tree.query(static_cast<std::size_t>(it - ys.begin()) - 1);
    if (best && best->first <= q.z) return join(best->second, q.right_index);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::vector<Integer> to_integer_vector(const std::vector<Rational>& p) {
  Integer lcm = 1;
  for (const auto& x : p) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<Integer> out;
  out.reserve(p.size());
  Integer g = 0;
  for (const auto& x : p) {
    Integer v = x.get_num() * (lcm / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (g > 1) {
    for (auto& v : out) v /= g;
  }
  return out;
}

bool verify_combination(const std::vector<GroupElement>& columns, const OrderedGroup& cone,
                        const std::vector<Integer>& p) {
  if (p.size() != columns.size()) return false;
  bool nonzero = false;
  GroupElement sum = GroupElement::zero(cone.rank());
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] < 0) return false;
    if (p[k] != 0) nonzero = true;
    if (columns[k].rank() != cone.rank()) return false;
    sum += p[k] * columns[k];
  }
  return nonzero && cone.is_nonneg(-sum);
}

bool verify_combination(const std::vector<GroupElement>& columns, const OrderedGroup& cone,
                        const std::vector<Rational>& p) {
  if (p.size() != columns.size()) return false;
  for (const auto& x : p) {
    if (x < 0) return false;
  }
  if (!cone.is_polyhedral()) {
    std::vector<Integer> ip;
    for (const auto& x : p) {
      if (x.get_den() != 1) return false;
      ip.push_back(x.get_num());
    }
    return verify_combination(columns, cone, ip);
  }
  // Positive rescaling preserves membership in a polyhedral cone.
  return verify_combination(columns, cone, to_integer_vector(p));
}

// ---------------------------------------------------------------------------

IntMatrix riesz_refine(const std::vector<Integer>& n, const std::vector<Integer>& m) {
  if (n.empty() || m.empty()) throw ArgumentError("riesz_refine needs nonempty vectors");
  Integer sn = 0, sm = 0;
  for (const auto& x : n) {
    if (x < 0) throw ArgumentError("riesz_refine entries must be nonnegative");
    sn += x;
  }
  for (const auto& x : m) {
    if (x < 0) throw ArgumentError("riesz_refine entries must be nonnegative");
    sm += x;
  }
  if (sn != sm) throw ArgumentError("riesz_refine: row total " + sn.get_str() +
                                    " differs from column total " + sm.get_str());
  if (sn < 1) throw ArgumentError("riesz_refine: totals must be at least 1");

  IntMatrix p(n.size(), std::vector<Integer>(m.size(), Integer(0)));
  std::vector<Integer> rrow = n, rcol = m;
  std::size_t i = 0, j = 0;
  while (i < n.size() && j < m.size()) {
    const Integer t = std::min(rrow[i], rcol[j]);
    p[i][j] = t;
    rrow[i] -= t;
    rcol[j] -= t;
    if (rrow[i] == 0) {
      ++i;
    } else {
      ++j;
    }
  }
  for (std::size_t a = 0; a < n.size(); ++a) {
    Integer s = 0;
    for (const auto& x : p[a]) s += x;
    if (s != n[a]) throw InternalError("riesz_refine row sum contract violated");
  }
  for (std::size_t b = 0; b < m.size(); ++b) {
    Integer s = 0;
    for (std::size_t a = 0; a < n.size(); ++a) s += p[a][b];
    if (s != m[b]) throw InternalError("riesz_refine column sum contract violated");
  }
  return p;
}

}  // namespace lorenzen
