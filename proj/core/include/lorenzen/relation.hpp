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

// Single-conclusion entailment relations A |> b over an ordered group.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lorenzen/decision.hpp"
#include "lorenzen/domain.hpp"
#include "lorenzen/group.hpp"

namespace lorenzen {

/// Immutable, cheaply copyable description of a relation.
///
///   Finest(G)             A |> b iff a <= b for some a in A
///   Dedekind(R)           monomial membership of b in the ideal <A> of R
///   Forced(base, xs, n)   base with 0 <= x forced for every x in xs
///   Prufer(base, n)       A |> b iff A + X <= b + X in the base for some X
///   Regularisation(base, n)
///                         restriction to single conclusions of the
///                         regularisation of base
///
/// n is the search depth or bound used where the relation is only
/// semi-decidable.
class RelationHandle {
 public:
  enum class Kind { Finest, Dedekind, Forced, Prufer, Regularisation };

  static RelationHandle finest(OrderedGroup group);
  static RelationHandle dedekind(MonomialDomain domain);
  /// Forcing on top of a Forced handle concatenates the constraint lists.
  static RelationHandle forced(const RelationHandle& base, std::vector<GroupElement> constraints,
                               std::int64_t depth);
  static RelationHandle prufer(const RelationHandle& base, std::int64_t bound);
  static RelationHandle regularisation(const RelationHandle& base, std::int64_t depth);

  Kind kind() const;
  const OrderedGroup& group() const;
  /// Dedekind only.
  const MonomialDomain& domain() const;
  /// Forced, Prufer and Regularisation only.
  const RelationHandle& base() const;
  /// Forced only.
  const std::vector<GroupElement>& constraints() const;
  /// Search depth (Forced, Regularisation) or bound (Prufer); 0 otherwise.
  std::int64_t depth() const;

  /// Finest or Dedekind: A |> b iff some a in A is below b in group().
  bool is_finest_like() const;
  /// Never answers Unknown.
  bool is_decidable() const;

  /// Short CLI-style name: finest, dedekind, forced, prufer-finest, ...
  std::string name() const;
  std::string describe() const;

  friend bool operator==(const RelationHandle& a, const RelationHandle& b) {
    return a.describe() == b.describe();
  }

 private:
  struct Node;
  explicit RelationHandle(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Decision sc_entails(const RelationHandle& rel, const FiniteSubset& lhs, const GroupElement& rhs);

/// Is there p with lhs + {0, x, ..., p x} |> rhs in base?
Decision forced_entails(const RelationHandle& base, const GroupElement& x, const FiniteSubset& lhs,
                        const GroupElement& rhs, std::int64_t depth);

Decision multi_forced_entails(const RelationHandle& base, const std::vector<GroupElement>& xs,
                              const FiniteSubset& lhs, const GroupElement& rhs,
                              std::int64_t depth);

/// Independent checkers. They re-derive the claim from the witness using
/// group arithmetic and, for nested witnesses, the base relation.
bool verify_sc_witness(const RelationHandle& rel, const FiniteSubset& lhs, const GroupElement& rhs,
                       const Witness& w);
bool verify_forcing_witness(const RelationHandle& base, const std::vector<GroupElement>& xs,
                            const FiniteSubset& lhs, const GroupElement& rhs,
                            const ForcingWitness& w);
/// Witness for the multi-conclusion lhs |- rhs in the regularisation of base.
bool verify_sequent_witness(const RelationHandle& base, const FiniteSubset& lhs,
                            const FiniteSubset& rhs, const Witness& w);

}  // namespace lorenzen
