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

// Multi-conclusion regular entailment A |- B: the free l-group over an
// ordered group, the regularisation of a system of ideals, and the
// construction through Prufer's X.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lorenzen/relation.hpp"
#include "lorenzen/report.hpp"

namespace lorenzen {

struct Sequent {
  FiniteSubset lhs;
  FiniteSubset rhs;

  Sequent(FiniteSubset l, FiniteSubset r);
  std::string to_string() const;
};

/// Exact for Product, Matrix and Trivial cones (rational feasibility) and
/// for Semigroup cones (closed form). Yes carries an integer p-matrix.
Decision free_entails(const OrderedGroup& g, const Sequent& s);

/// Decides lhs |- rhs in the regularisation of base. Finest bases go through
/// free_entails, Dedekind bases through integral dependence, anything else
/// through the sign-tree search.
Decision regular_entails(const RelationHandle& base, const Sequent& s, std::int64_t depth);

/// The generic search: auxiliary elements drawn from sign_tree_pool, at most
/// min(depth, 3) of them, each sign case settled by forcing at `depth`.
Decision sign_tree_entails(const RelationHandle& base, const Sequent& s, std::int64_t depth);

/// Nonzero elements of d, then the nonzero pairwise differences of d not
/// already listed; capped at 24 entries.
std::vector<GroupElement> sign_tree_pool(const FiniteSubset& d);

/// Is there p <= depth with lhs + {0, x, ..., p x} |- rhs? Never answers No.
Decision forced_regular_entails(const RelationHandle& base, const GroupElement& x,
                                const Sequent& s, std::int64_t depth);

/// R0 (reflexivity), R1 (monotonicity), R2 (cut), R3 (order preservation),
/// R4 (translation), R5 (x1 + x2 = y1 + y2 gives x1, x2 |- y1, y2) and
/// R5-regularity (x + a, y + b |- y + a, x + b).
SuiteReport regular_axiom_suite(const RelationHandle& base, std::int64_t samples,
                                std::uint64_t seed, std::int64_t depth = 6);

/// Samples (A, B, x); both forcings Yes must imply A |- B.
CheckReport linearisation_check(const RelationHandle& base, std::int64_t samples,
                                std::uint64_t seed, std::int64_t depth = 6);

/// Searches X over sumsets of subsets of A u {b} combined with progressions
/// along pairwise differences. Yes carries X; never answers No.
Decision prufer_entails(const RelationHandle& base, const FiniteSubset& lhs,
                        const GroupElement& rhs, std::int64_t bound);

struct AgreementBounds {
  std::int64_t prufer_bound = 2;
  std::int64_t depth = 6;
};

struct AgreementReport {
  std::int64_t trials = 0;
  std::int64_t decided = 0;      // prufer Yes and regular decided
  std::int64_t agreements = 0;
  std::int64_t regular_unknown = 0;
  std::int64_t prufer_unknown_regular_yes = 0;
  std::int64_t prufer_unknown_regular_no = 0;
  std::vector<std::pair<FiniteSubset, GroupElement>> disagreements;

  bool passed() const { return disagreements.empty(); }
};

AgreementReport agreement_check(const RelationHandle& base, std::int64_t samples,
                                std::uint64_t seed, AgreementBounds bounds = {});

struct DeltaViolation {
  GroupElement element;  // b with X <= b + X but not 0 <= b
  FiniteSubset x;
};

struct ClosednessReport {
  std::int64_t trials = 0;
  std::int64_t skipped = 0;
  std::vector<std::pair<GroupElement, GroupElement>> violations;  // {a} |- b, not a <= b
  std::vector<DeltaViolation> delta;

  bool closed() const { return violations.empty() && delta.empty(); }
};

/// Exhausts a small box of singleton sequents, then samples more.
ClosednessReport closedness_check(const RelationHandle& base, std::int64_t samples,
                                  std::uint64_t seed, std::int64_t depth = 6);

}  // namespace lorenzen
