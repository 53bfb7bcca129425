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

#include "lorenzen/group.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <sstream>
#include <utility>

namespace lorenzen {

namespace {

// Semigroup tables are indexed by machine words; refuse anything larger.
constexpr long kMaxSemigroupTable = 10'000'000;

void require_same_rank(const GroupElement& a, const GroupElement& b) {
  if (a.rank() != b.rank()) {
    throw DimensionError("rank mismatch: " + std::to_string(a.rank()) + " vs " +
                         std::to_string(b.rank()));
  }
}

std::size_t matrix_rank(const IntMatrix& rows, std::size_t cols) {
  std::vector<std::vector<Rational>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<Rational> q(r.begin(), r.end());
    m.push_back(std::move(q));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

// ---------------------------------------------------------------------------
// GroupElement

GroupElement::GroupElement(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

GroupElement GroupElement::zero(std::size_t rank) {
  return GroupElement(std::vector<Integer>(rank, Integer(0)));
}

bool GroupElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

GroupElement GroupElement::operator-() const {
  GroupElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

GroupElement& GroupElement::operator+=(const GroupElement& other) {
  require_same_rank(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

GroupElement& GroupElement::operator-=(const GroupElement& other) {
  require_same_rank(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

GroupElement operator*(const Integer& n, const GroupElement& a) {
  GroupElement r = a;
  for (auto& c : r.coords_) c *= n;
  return r;
}

std::string GroupElement::to_string() const {
  if (coords_.size() == 1) return coords_[0].get_str();
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += coords_[i].get_str();
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// OrderedGroup

struct OrderedGroup::SemigroupTable {
  std::vector<Integer> generators;
  Integer gcd;
  Integer frobenius;  // of generators / gcd
  long limit = 0;     // membership of reduced values in [0, limit] is tabulated
  std::vector<bool> member;
};

const char* to_string(ConeKind kind) {
  switch (kind) {
    case ConeKind::Product:
      return "product";
    case ConeKind::Matrix:
      return "matrix";
    case ConeKind::Semigroup:
      return "semigroup";
    case ConeKind::Trivial:
      return "trivial";
  }
  return "?";
}

OrderedGroup OrderedGroup::product(std::size_t rank) {
  if (rank == 0) throw ArgumentError("group rank must be positive");
  return OrderedGroup(rank, ConeKind::Product);
}

OrderedGroup OrderedGroup::trivial(std::size_t rank) {
  if (rank == 0) throw ArgumentError("group rank must be positive");
  return OrderedGroup(rank, ConeKind::Trivial);
}

OrderedGroup OrderedGroup::matrix(IntMatrix rows) {
  if (rows.empty() || rows.front().empty()) throw ArgumentError("cone matrix must be nonempty");
  const std::size_t d = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != d) throw DimensionError("cone matrix rows have different lengths");
  }
  // Antisymmetry of the order is equivalent to M having full column rank.
  if (matrix_rank(rows, d) != d) {
    throw ArgumentError("cone matrix must have rank " + std::to_string(d) +
                        " (otherwise the order is not antisymmetric)");
  }
  OrderedGroup g(d, ConeKind::Matrix);
  g.rows_ = std::move(rows);
  return g;
}

OrderedGroup OrderedGroup::semigroup(std::vector<Integer> generators) {
  if (generators.empty()) throw ArgumentError("semigroup needs at least one generator");
  for (const auto& x : generators) {
    if (x <= 0) throw ArgumentError("semigroup generators must be positive");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  auto table = std::make_shared<SemigroupTable>();
  table->generators = generators;
  Integer g = 0;
  for (const auto& x : generators) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  table->gcd = g;

  std::vector<long> reduced;
  for (const auto& x : generators) {
    Integer r = x / g;
    if (r > kMaxSemigroupTable) throw ArgumentError("semigroup generator too large to tabulate");
    reduced.push_back(r.get_si());
  }

  // Apery set with respect to the smallest generator, by Dijkstra over the
  // residues mod m; the Frobenius number is max(Apery) - m.
  const long m = reduced.front();
  const long inf = std::numeric_limits<long>::max();
  std::vector<long> apery(static_cast<std::size_t>(m), inf);
  apery[0] = 0;
  using Item = std::pair<long, long>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [dist, r] = queue.top();
    queue.pop();
    if (dist != apery[static_cast<std::size_t>(r)]) continue;
    for (long x : reduced) {
      long nd = dist + x;
      long nr = nd % m;
      if (nd < apery[static_cast<std::size_t>(nr)]) {
        if (nd > kMaxSemigroupTable) throw ArgumentError("semigroup Frobenius number too large");
        apery[static_cast<std::size_t>(nr)] = nd;
        queue.emplace(nd, nr);
      }
    }
  }
  const long frob = *std::max_element(apery.begin(), apery.end()) - m;
  table->frobenius = frob;
  table->limit = std::max(0L, frob + reduced.back());
  table->member.assign(static_cast<std::size_t>(table->limit) + 1, false);
  for (long v = 0; v <= table->limit; ++v) {
    table->member[static_cast<std::size_t>(v)] = v >= apery[static_cast<std::size_t>(v % m)];
  }

  OrderedGroup out(1, ConeKind::Semigroup);
  out.semigroup_ = std::move(table);
  return out;
}

const IntMatrix& OrderedGroup::matrix_rows() const {
  if (kind_ != ConeKind::Matrix) throw UnsupportedConeError("not a matrix cone");
  return rows_;
}

const std::vector<Integer>& OrderedGroup::generators() const {
  if (kind_ != ConeKind::Semigroup) throw UnsupportedConeError("not a semigroup cone");
  return semigroup_->generators;
}

const Integer& OrderedGroup::frobenius() const {
  if (kind_ != ConeKind::Semigroup) throw UnsupportedConeError("not a semigroup cone");
  return semigroup_->frobenius;
}

const Integer& OrderedGroup::generator_gcd() const {
  if (kind_ != ConeKind::Semigroup) throw UnsupportedConeError("not a semigroup cone");
  return semigroup_->gcd;
}

IntMatrix OrderedGroup::inequality_rows() const {
  IntMatrix rows;
  switch (kind_) {
    case ConeKind::Product:
    case ConeKind::Trivial:
      for (std::size_t i = 0; i < rank_; ++i) {
        std::vector<Integer> r(rank_, Integer(0));
        r[i] = 1;
        rows.push_back(r);
      }
      if (kind_ == ConeKind::Trivial) {
        for (std::size_t i = 0; i < rank_; ++i) {
          std::vector<Integer> r(rank_, Integer(0));
          r[i] = -1;
          rows.push_back(r);
        }
      }
      return rows;
    case ConeKind::Matrix:
      return rows_;
    case ConeKind::Semigroup:
      break;
  }
  throw UnsupportedConeError("semigroup cones are not cut out by linear inequalities");
}

void OrderedGroup::check_rank(const GroupElement& a) const {
  if (a.rank() != rank_) {
    throw DimensionError("element " + a.to_string() + " has rank " + std::to_string(a.rank()) +
                         ", group has rank " + std::to_string(rank_));
  }
}

bool OrderedGroup::is_nonneg(const GroupElement& a) const {
  check_rank(a);
  switch (kind_) {
    case ConeKind::Product:
      return std::all_of(a.coords().begin(), a.coords().end(),
                         [](const Integer& c) { return c >= 0; });
    case ConeKind::Trivial:
      return a.is_zero();
    case ConeKind::Matrix:
      for (const auto& row : rows_) {
        Integer s = 0;
        for (std::size_t i = 0; i < rank_; ++i) s += row[i] * a[i];
        if (s < 0) return false;
      }
      return true;
    case ConeKind::Semigroup: {
      const Integer& v = a[0];
      if (v == 0) return true;
      if (v < 0) return false;
      if (!mpz_divisible_p(v.get_mpz_t(), semigroup_->gcd.get_mpz_t())) return false;
      Integer r = v / semigroup_->gcd;
      if (r > semigroup_->limit) return true;
      return semigroup_->member[r.get_ui()];
    }
  }
  return false;
}

bool OrderedGroup::leq(const GroupElement& a, const GroupElement& b) const {
  check_rank(a);
  check_rank(b);
  return is_nonneg(b - a);
}

bool operator==(const OrderedGroup& a, const OrderedGroup& b) {
  if (a.kind_ != b.kind_ || a.rank_ != b.rank_) return false;
  if (a.kind_ == ConeKind::Matrix) return a.rows_ == b.rows_;
  if (a.kind_ == ConeKind::Semigroup) return a.semigroup_->generators == b.semigroup_->generators;
  return true;
}

std::string OrderedGroup::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case ConeKind::Product:
      os << "product:" << rank_;
      break;
    case ConeKind::Trivial:
      os << "trivial:" << rank_;
      break;
    case ConeKind::Matrix:
      os << "matrix:";
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) os << ';';
        for (std::size_t c = 0; c < rows_[r].size(); ++c) os << (c ? "," : "") << rows_[r][c];
      }
      break;
    case ConeKind::Semigroup:
      os << "semigroup:";
      for (std::size_t i = 0; i < semigroup_->generators.size(); ++i)
        os << (i ? "," : "") << semigroup_->generators[i];
      break;
  }
  return os.str();
}

bool leq(const OrderedGroup& g, const GroupElement& a, const GroupElement& b) {
  return g.leq(a, b);
}

// ---------------------------------------------------------------------------
// FiniteSubset

FiniteSubset::FiniteSubset(std::vector<GroupElement> elems) : elems_(std::move(elems)) {
  if (elems_.empty()) throw ArgumentError("finite subsets must be nonempty");
  const std::size_t d = elems_.front().rank();
  for (const auto& e : elems_) {
    if (e.rank() != d) throw DimensionError("finite subset mixes ranks");
  }
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

FiniteSubset FiniteSubset::singleton(GroupElement a) {
  return FiniteSubset(std::vector<GroupElement>{std::move(a)});
}

bool FiniteSubset::contains(const GroupElement& a) const {
  return std::binary_search(elems_.begin(), elems_.end(), a);
}

FiniteSubset FiniteSubset::without(std::size_t i) const {
  if (elems_.size() < 2) throw ArgumentError("cannot remove the only element of a finite subset");
  std::vector<GroupElement> rest;
  rest.reserve(elems_.size() - 1);
  for (std::size_t k = 0; k < elems_.size(); ++k) {
    if (k != i) rest.push_back(elems_[k]);
  }
  return FiniteSubset(std::move(rest));
}

FiniteSubset FiniteSubset::with(const GroupElement& a) const {
  std::vector<GroupElement> all = elems_;
  all.push_back(a);
  return FiniteSubset(std::move(all));
}

std::string FiniteSubset::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) s += ",";
    s += elems_[i].to_string();
  }
  return s + "}";
}

FiniteSubset set_union(const FiniteSubset& a, const FiniteSubset& b) {
  if (a.rank() != b.rank()) throw DimensionError("union of subsets of different rank");
  std::vector<GroupElement> all = a.elements();
  all.insert(all.end(), b.begin(), b.end());
  return FiniteSubset(std::move(all));
}

FiniteSubset sumset(const FiniteSubset& a, const FiniteSubset& b) {
  std::vector<GroupElement> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(x + y);
  }
  return FiniteSubset(std::move(out));
}

FiniteSubset nfold(const FiniteSubset& a, std::int64_t n) {
  if (n < 1) throw ArgumentError("nfold requires n >= 1");
  FiniteSubset acc = a;
  for (std::int64_t i = 1; i < n; ++i) acc = sumset(acc, a);
  return acc;
}

FiniteSubset negate(const FiniteSubset& a) {
  std::vector<GroupElement> out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(-x);
  return FiniteSubset(std::move(out));
}

FiniteSubset translate(const GroupElement& x, const FiniteSubset& a) {
  std::vector<GroupElement> out;
  out.reserve(a.size());
  for (const auto& y : a) out.push_back(x + y);
  return FiniteSubset(std::move(out));
}

FiniteSubset difference_set(const FiniteSubset& a, const FiniteSubset& b) {
  std::vector<GroupElement> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(x - y);
  }
  return FiniteSubset(std::move(out));
}

FiniteSubset progression(const GroupElement& x, std::int64_t q, std::int64_t p) {
  if (q < 0 || p < 0) throw ArgumentError("progression bounds must be nonnegative");
  std::vector<GroupElement> out;
  for (std::int64_t k = -q; k <= p; ++k) out.push_back(Integer(static_cast<long>(k)) * x);
  return FiniteSubset(std::move(out));
}

// ---------------------------------------------------------------------------

std::optional<LcdViolation> lcd_condition_violation(const OrderedGroup& g, std::int64_t box,
                                                    std::int64_t n_max) {
  if (box < 1 || n_max < 1) throw ArgumentError("search_box and n_max must be >= 1");
  const std::size_t d = g.rank();
  std::vector<Integer> coords(d, Integer(-box));
  while (true) {
    GroupElement a(coords);
    if (!g.is_nonneg(a)) {
      for (std::int64_t n = 2; n <= n_max; ++n) {
        Integer mult(static_cast<long>(n));
        if (g.is_nonneg(mult * a)) return LcdViolation{a, mult};
      }
    }
    // odometer, last coordinate fastest
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (coords[i] < box) {
        ++coords[i];
        break;
      }
      coords[i] = -box;
      if (i == 0) return std::nullopt;
    }
  }
}

}  // namespace lorenzen
