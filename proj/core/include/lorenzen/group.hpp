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

// Ordered abelian groups Z^d with a decidable positive cone, their elements,
// and the finite-subset arithmetic every other module is built on.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lorenzen/errors.hpp"

namespace lorenzen {

using Integer = mpz_class;
using Rational = mpq_class;
using IntMatrix = std::vector<std::vector<Integer>>;

/// A point of Z^d. The rank is fixed at construction.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  GroupElement(std::initializer_list<long> coords);

  static GroupElement zero(std::size_t rank);

  std::size_t rank() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Integer> coords() const { return coords_; }
  bool is_zero() const;

  GroupElement operator-() const;
  GroupElement& operator+=(const GroupElement& other);
  GroupElement& operator-=(const GroupElement& other);

  friend GroupElement operator+(GroupElement lhs, const GroupElement& rhs) { return lhs += rhs; }
  friend GroupElement operator-(GroupElement lhs, const GroupElement& rhs) { return lhs -= rhs; }
  friend GroupElement operator*(const Integer& n, const GroupElement& a);

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.coords_ == b.coords_;
  }
  /// Lexicographic on the coordinate sequence.
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    return a.coords_ < b.coords_;
  }

  /// "(1,-2)"; rank-1 elements print as a bare integer.
  std::string to_string() const;

 private:
  std::vector<Integer> coords_;
};

enum class ConeKind { Product, Matrix, Semigroup, Trivial };

const char* to_string(ConeKind kind);

/// Z^d together with a positive cone P; a <= b iff b - a lies in P.
///
/// Product: componentwise order. Matrix(M): a >= 0 iff M a >= 0, M of full
/// column rank. Semigroup(gens): d = 1 and a >= 0 iff a is 0 or a sum of
/// generators. Trivial: a >= 0 iff a = 0.
class OrderedGroup {
 public:
  static OrderedGroup product(std::size_t rank);
  static OrderedGroup matrix(IntMatrix rows);
  static OrderedGroup semigroup(std::vector<Integer> generators);
  static OrderedGroup trivial(std::size_t rank);

  std::size_t rank() const { return rank_; }
  ConeKind kind() const { return kind_; }

  /// Matrix rows as given (Matrix kind only).
  const IntMatrix& matrix_rows() const;
  /// Sorted, deduplicated generators (Semigroup kind only).
  const std::vector<Integer>& generators() const;
  /// Frobenius number of the generated semigroup, measured in units of
  /// the generators' gcd; -1 when every multiple of the gcd is reached.
  const Integer& frobenius() const;
  /// gcd of the generators (Semigroup kind only).
  const Integer& generator_gcd() const;

  /// True iff the cone is cut out by finitely many homogeneous linear
  /// inequalities (Product, Matrix, Trivial).
  bool is_polyhedral() const { return kind_ != ConeKind::Semigroup; }
  /// Rows R with a >= 0 iff R a >= 0 componentwise. Throws
  /// UnsupportedConeError for Semigroup cones.
  IntMatrix inequality_rows() const;

  bool is_nonneg(const GroupElement& a) const;
  bool leq(const GroupElement& a, const GroupElement& b) const;

  void check_rank(const GroupElement& a) const;

  friend bool operator==(const OrderedGroup& a, const OrderedGroup& b);

  std::string describe() const;

 private:
  struct SemigroupTable;

  OrderedGroup(std::size_t rank, ConeKind kind) : rank_(rank), kind_(kind) {}

  std::size_t rank_ = 0;
  ConeKind kind_ = ConeKind::Product;
  IntMatrix rows_;
  std::shared_ptr<const SemigroupTable> semigroup_;
};

/// Free function form of OrderedGroup::leq.
bool leq(const OrderedGroup& g, const GroupElement& a, const GroupElement& b);

/// A nonempty finite set of group elements, stored sorted and deduplicated,
/// so that set equality is sequence equality.
class FiniteSubset {
 public:
  explicit FiniteSubset(std::vector<GroupElement> elems);
  FiniteSubset(std::initializer_list<GroupElement> elems)
      : FiniteSubset(std::vector<GroupElement>(elems)) {}

  static FiniteSubset singleton(GroupElement a);

  std::size_t size() const { return elems_.size(); }
  std::size_t rank() const { return elems_.front().rank(); }
  const GroupElement& operator[](std::size_t i) const { return elems_[i]; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }
  const std::vector<GroupElement>& elements() const { return elems_; }

  bool contains(const GroupElement& a) const;
  /// The set without its i-th element; requires size() >= 2.
  FiniteSubset without(std::size_t i) const;
  FiniteSubset with(const GroupElement& a) const;

  friend bool operator==(const FiniteSubset& a, const FiniteSubset& b) {
    return a.elems_ == b.elems_;
  }
  friend bool operator<(const FiniteSubset& a, const FiniteSubset& b) {
    return a.elems_ < b.elems_;
  }

  std::string to_string() const;

 private:
  std::vector<GroupElement> elems_;
};

FiniteSubset set_union(const FiniteSubset& a, const FiniteSubset& b);
/// {a + b | a in A, b in B}
FiniteSubset sumset(const FiniteSubset& a, const FiniteSubset& b);
/// A + ... + A (n times); n >= 1.
FiniteSubset nfold(const FiniteSubset& a, std::int64_t n);
FiniteSubset negate(const FiniteSubset& a);
FiniteSubset translate(const GroupElement& x, const FiniteSubset& a);
/// {a - b | a in A, b in B}
FiniteSubset difference_set(const FiniteSubset& a, const FiniteSubset& b);
/// {0, x, 2x, ..., px} translated to start at -q x: {-q x, ..., p x}.
FiniteSubset progression(const GroupElement& x, std::int64_t q, std::int64_t p);

struct LcdViolation {
  GroupElement element;
  Integer multiplier;
};

/// Searches the box [-box, box]^d for a with 0 <= n a but not 0 <= a for
/// some 2 <= n <= n_max. Enumeration is lexicographic in a, then in n.
std::optional<LcdViolation> lcd_condition_violation(const OrderedGroup& g, std::int64_t box,
                                                    std::int64_t n_max);

}  // namespace lorenzen
