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

#include "lorenzen/domain.hpp"

#include <algorithm>
#include <sstream>

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

}  // namespace

MonomialDomain MonomialDomain::poly(std::size_t rank) {
  MonomialDomain d(Kind::Poly, rank);
  d.group_ = OrderedGroup::product(rank);
  return d;
}

MonomialDomain MonomialDomain::semigroup(std::vector<Integer> generators) {
  OrderedGroup g = OrderedGroup::semigroup(std::move(generators));
  MonomialDomain d(Kind::Semigroup, 1);
  d.generators_ = g.generators();
  d.group_ = std::move(g);
  return d;
}

MonomialDomain MonomialDomain::extended_poly(std::size_t rank, GroupElement adjoined) {
  if (rank == 0) throw ArgumentError("domain rank must be positive");
  if (adjoined.rank() != rank) throw DimensionError("adjoined exponent has wrong rank");
  MonomialDomain d(Kind::ExtendedPoly, rank);
  d.adjoined_ = std::move(adjoined);
  return d;
}

MonomialDomain MonomialDomain::laurent(Integer period) {
  if (period <= 0) throw ArgumentError("Laurent period must be positive");
  MonomialDomain d(Kind::Laurent, 1);
  d.period_ = std::move(period);
  return d;
}

const OrderedGroup& MonomialDomain::divisibility_group() const {
  if (!group_) throw UnsupportedConeError("domain " + describe() + " has no divisibility order");
  return *group_;
}

const std::vector<Integer>& MonomialDomain::generators() const {
  if (kind_ != Kind::Semigroup) throw ArgumentError("not a semigroup ring");
  return generators_;
}

const GroupElement& MonomialDomain::adjoined() const {
  if (kind_ != Kind::ExtendedPoly) throw ArgumentError("not an extended polynomial ring");
  return adjoined_;
}

const Integer& MonomialDomain::period() const {
  if (kind_ != Kind::Laurent) throw ArgumentError("not a Laurent ring");
  return period_;
}

void MonomialDomain::check_rank(const GroupElement& v) const {
  if (v.rank() != rank_) {
    throw DimensionError("exponent " + v.to_string() + " does not have rank " +
                         std::to_string(rank_));
  }
}

bool MonomialDomain::contains(const GroupElement& v) const {
  check_rank(v);
  switch (kind_) {
    case Kind::Poly:
    case Kind::Semigroup:
      return group_->is_nonneg(v);
    case Kind::Laurent:
      return mpz_divisible_p(v[0].get_mpz_t(), period_.get_mpz_t()) != 0;
    case Kind::ExtendedPoly: {
      // v - j x >= 0 componentwise for some integer j >= 0: an interval in j.
      Integer lo = 0;
      std::optional<Integer> hi;
      for (std::size_t i = 0; i < rank_; ++i) {
        const Integer& xi = adjoined_[i];
        const Integer& vi = v[i];
        if (xi == 0) {
          if (vi < 0) return false;
        } else if (xi > 0) {
          Integer h = floor_div(vi, xi);
          if (!hi || h < *hi) hi = h;
        } else {
          Integer l = ceil_div(vi, xi);
          if (l > lo) lo = l;
        }
      }
      return !hi || lo <= *hi;
    }
  }
  return false;
}

std::string MonomialDomain::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Poly:
      os << "poly:" << rank_;
      break;
    case Kind::Semigroup:
      os << "semigroup:";
      for (std::size_t i = 0; i < generators_.size(); ++i) os << (i ? "," : "") << generators_[i];
      break;
    case Kind::ExtendedPoly:
      os << "extended-poly:" << rank_ << ":" << adjoined_.to_string();
      break;
    case Kind::Laurent:
      os << "laurent:" << period_;
      break;
  }
  return os.str();
}

bool operator==(const MonomialDomain& a, const MonomialDomain& b) {
  if (a.kind_ != b.kind_ || a.rank_ != b.rank_) return false;
  switch (a.kind_) {
    case MonomialDomain::Kind::Poly:
      return true;
    case MonomialDomain::Kind::Semigroup:
      return a.generators_ == b.generators_;
    case MonomialDomain::Kind::ExtendedPoly:
      return a.adjoined_ == b.adjoined_;
    case MonomialDomain::Kind::Laurent:
      return a.period_ == b.period_;
  }
  return false;
}

}  // namespace lorenzen
