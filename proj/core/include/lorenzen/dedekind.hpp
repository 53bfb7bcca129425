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

// Monomial ideals, integral dependence and closure, and divisors as formal
// differences of integrally closed ideals.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lorenzen/decision.hpp"
#include "lorenzen/domain.hpp"
#include "lorenzen/report.hpp"

namespace lorenzen {

/// Fractional monomial ideal; generators kept irredundant under divisibility.
/// Poly and Semigroup domains only.
class MonomialIdeal {
 public:
  MonomialIdeal(MonomialDomain domain, const FiniteSubset& generators);

  const MonomialDomain& domain() const { return domain_; }
  const FiniteSubset& generators() const { return gens_; }
  std::string to_string() const { return gens_.to_string(); }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.domain_ == b.domain_ && a.gens_ == b.gens_;
  }

 private:
  MonomialDomain domain_;
  FiniteSubset gens_;
};

bool ideal_member(const MonomialIdeal& ideal, const GroupElement& b);
/// Every generator of `inner` lies in `outer`.
bool ideal_contains(const MonomialIdeal& outer, const MonomialIdeal& inner);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);

/// Is t^b integral over the ideal? Exact. Yes carries a one-column
/// CombinationWitness k with sum k_i (a_i - b) <= 0 over the generators.
Decision integral_dependence(const MonomialIdeal& ideal, const GroupElement& b);

/// Semigroup rings only: the k-fold sumset search, for k up to the
/// Frobenius-derived bound. Independent of integral_dependence.
bool integral_dependence_by_powers(const MonomialIdeal& ideal, const GroupElement& b);

MonomialIdeal integral_closure(const MonomialIdeal& ideal);

/// pos - neg with both parts integrally closed.
class Divisor {
 public:
  /// Closes both parts.
  Divisor(const MonomialIdeal& pos, const MonomialIdeal& neg);

  const MonomialIdeal& pos() const { return pos_; }
  const MonomialIdeal& neg() const { return neg_; }
  const MonomialDomain& domain() const { return pos_.domain(); }
  std::string to_string() const;

 private:
  struct Closed {};
  Divisor(MonomialIdeal pos, MonomialIdeal neg, Closed) : pos_(std::move(pos)), neg_(std::move(neg)) {}
  friend Divisor divisor_neg(const Divisor& d);

  MonomialIdeal pos_;
  MonomialIdeal neg_;
};

/// closure(A) - closure({0}).
Divisor basic_divisor(const MonomialDomain& domain, const FiniteSubset& a);
Divisor divisor_add(const Divisor& d1, const Divisor& d2);
Divisor divisor_neg(const Divisor& d);
Divisor divisor_sub(const Divisor& d1, const Divisor& d2);
Divisor divisor_meet(const Divisor& d1, const Divisor& d2);
Divisor divisor_join(const Divisor& d1, const Divisor& d2);
/// closure(pos1 + neg2) contains closure(pos2 + neg1).
bool divisor_leq(const Divisor& d1, const Divisor& d2);
bool divisor_eq(const Divisor& d1, const Divisor& d2);

/// Random integral ideals a, b, c in [0, box]^d; checks that
/// closure(ab) >= closure(ac) implies closure(b) >= closure(c).
CheckReport macaulay_check(const MonomialDomain& domain, std::int64_t trials, std::int64_t box,
                           std::uint64_t seed);

/// The domain obtained by adjoining t^x.
MonomialDomain dedekind_forced(const MonomialDomain& domain, const GroupElement& x);

}  // namespace lorenzen
