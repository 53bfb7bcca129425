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

// Monomial integral domains, described by the monoid of exponents of their
// monomials inside Z^d.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lorenzen/group.hpp"

namespace lorenzen {

/// Poly(d): k[t_1..t_d], exponents N^d.
/// Semigroup(gens): k[t^g : g in gens], exponents the generated monoid.
/// ExtendedPoly(d, x): k[t_1..t_d][t^x], exponents N^d + N x.
/// Laurent(g): k[t^g, t^-g], exponents g Z.
///
/// Only Poly and Semigroup carry an antisymmetric divisibility order; the
/// other two arise from adjoining an element and are membership-only.
class MonomialDomain {
 public:
  enum class Kind { Poly, Semigroup, ExtendedPoly, Laurent };

  static MonomialDomain poly(std::size_t rank);
  static MonomialDomain semigroup(std::vector<Integer> generators);
  static MonomialDomain extended_poly(std::size_t rank, GroupElement adjoined);
  static MonomialDomain laurent(Integer period);

  Kind kind() const { return kind_; }
  std::size_t rank() const { return rank_; }
  bool is_ordered() const { return group_.has_value(); }

  /// Exponent group ordered by divisibility. Poly and Semigroup only.
  const OrderedGroup& divisibility_group() const;
  /// Semigroup generators (sorted); Semigroup kind only.
  const std::vector<Integer>& generators() const;
  const GroupElement& adjoined() const;
  const Integer& period() const;

  /// Is t^v a monomial of the ring?
  bool contains(const GroupElement& v) const;
  /// Does t^a divide t^b in the ring?
  bool divides(const GroupElement& a, const GroupElement& b) const { return contains(b - a); }

  void check_rank(const GroupElement& v) const;
  std::string describe() const;
  friend bool operator==(const MonomialDomain& a, const MonomialDomain& b);

 private:
  MonomialDomain(Kind kind, std::size_t rank) : kind_(kind), rank_(rank) {}

  Kind kind_;
  std::size_t rank_;
  std::optional<OrderedGroup> group_;
  std::vector<Integer> generators_;
  GroupElement adjoined_;
  Integer period_;
};

}  // namespace lorenzen
