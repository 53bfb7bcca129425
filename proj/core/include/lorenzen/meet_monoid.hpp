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

// The monoid of ideals: finite sets up to the preorder A <= B iff A |> b
// for every b in B, with sumset as addition and union as meet.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lorenzen/relation.hpp"

namespace lorenzen {

/// An irredundant support set: no element is entailed by the others.
class MeetTerm {
 public:
  const RelationHandle& relation() const { return rel_; }
  const FiniteSubset& support() const { return support_; }
  std::string to_string() const { return support_.to_string(); }

 private:
  MeetTerm(RelationHandle rel, FiniteSubset support)
      : rel_(std::move(rel)), support_(std::move(support)) {}
  friend MeetTerm canonicalize(const RelationHandle& rel, const FiniteSubset& a);

  RelationHandle rel_;
  FiniteSubset support_;
};

/// Yes iff lhs |> b for every b in rhs; the witness lists one per b.
Decision preorder_leq(const RelationHandle& rel, const FiniteSubset& lhs, const FiniteSubset& rhs);
/// Both directions of preorder_leq.
Decision preorder_eq(const RelationHandle& rel, const FiniteSubset& a, const FiniteSubset& b);

/// Drops, in canonical order, every element entailed by the remaining ones.
/// Throws BoundedRelationError when the relation answers Unknown.
MeetTerm canonicalize(const RelationHandle& rel, const FiniteSubset& a);

MeetTerm ideal_add(const MeetTerm& s, const MeetTerm& t);
MeetTerm ideal_meet(const MeetTerm& s, const MeetTerm& t);
/// The neutral element {0}.
MeetTerm ideal_zero(const RelationHandle& rel);

struct GammaCounterexample {
  FiniteSubset lhs;  // A
  FiniteSubset x;    // X
  GroupElement rhs;  // b

  std::string to_string() const;
};

/// Looks for A + X <= b + X with A |> b false. Elements come from
/// [-box, box]^d (for a Semigroup cone, [0, box]). Structured X candidates
/// are tried for every sampled (A, b) before a random X.
std::optional<GammaCounterexample> gamma_counterexample_search(const RelationHandle& rel,
                                                               std::int64_t box,
                                                               std::size_t set_size,
                                                               std::int64_t trials,
                                                               std::uint64_t seed);

}  // namespace lorenzen
