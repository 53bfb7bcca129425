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

// Exact rational feasibility: is there a nonnegative, not-all-zero
// combination of the columns that lands in the negative cone?

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lorenzen/group.hpp"

namespace lorenzen {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct FeasibilityProblem {
  std::vector<GroupElement> columns;
  OrderedGroup cone;
};

/// p >= 0 with sum(p) = 1 and sum_k p_k c_k <= 0 in the cone order, or
/// nothing. Matrix and Product cones only.
std::optional<std::vector<Rational>> feasible(const FeasibilityProblem& prob);

/// Same question for the cone {v : rows . v >= 0}. Any rank-d row set is
/// accepted, so the Trivial cone can be fed in as [I; -I].
std::optional<std::vector<Rational>> feasible(const std::vector<GroupElement>& columns,
                                              const IntMatrix& rows);

/// The alternative: y >= 0 indexed by the inequality rows with
/// y . (rows c_k) >= 1 for every column. Exists iff feasible() is empty.
std::optional<std::vector<Rational>> separating_functional(const std::vector<GroupElement>& columns,
                                                           const IntMatrix& rows);

/// Second engine: Fourier-Motzkin elimination, boolean answer only.
bool fourier_motzkin_feasible(const std::vector<GroupElement>& columns, const IntMatrix& rows);

/// Exhaustive integer search over 0 <= p_k <= bound, not all zero. Works for
/// every cone kind; intended as a test oracle.
std::optional<std::vector<Integer>> brute_force_feasible(const FeasibilityProblem& prob,
                                                         std::int64_t bound);

/// Checks p >= 0, p != 0 and -(sum p_k c_k) in the cone, using only group
/// arithmetic. Rational p is accepted unnormalised.
bool verify_combination(const std::vector<GroupElement>& columns, const OrderedGroup& cone,
                        const std::vector<Rational>& p);
bool verify_combination(const std::vector<GroupElement>& columns, const OrderedGroup& cone,
                        const std::vector<Integer>& p);

/// Smallest positive integer multiple of p (common denominator cleared,
/// content divided out).
std::vector<Integer> to_integer_vector(const std::vector<Rational>& p);

/// x >= 0 with a x = rhs, exact simplex phase 1 with Bland's rule.
std::optional<std::vector<Rational>> solve_nonnegative(const RationalMatrix& a,
                                                       const std::vector<Rational>& rhs);

/// Northwest-corner transport matrix with row sums n and column sums m.
IntMatrix riesz_refine(const std::vector<Integer>& n, const std::vector<Integer>& m);

}  // namespace lorenzen
