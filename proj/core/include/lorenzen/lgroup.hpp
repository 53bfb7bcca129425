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

// Formal differences of meet terms: the Grothendieck l-group of a
// cancellative monoid of ideals, and lattice-group terms evaluated in it.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lorenzen/meet_monoid.hpp"
#include "lorenzen/report.hpp"

namespace lorenzen {

/// meet(pos) - meet(neg).
class FormalDifference {
 public:
  FormalDifference(MeetTerm pos, MeetTerm neg);
  /// {g} - {0}.
  static FormalDifference embed(const RelationHandle& rel, const GroupElement& g);
  /// S - {0}.
  static FormalDifference embed(const MeetTerm& s);

  const MeetTerm& pos() const { return pos_; }
  const MeetTerm& neg() const { return neg_; }
  const RelationHandle& relation() const { return pos_.relation(); }
  std::string to_string() const;

 private:
  MeetTerm pos_;
  MeetTerm neg_;
};

Decision groth_eq(const FormalDifference& d1, const FormalDifference& d2);
Decision groth_leq(const FormalDifference& d1, const FormalDifference& d2);

FormalDifference groth_add(const FormalDifference& d1, const FormalDifference& d2);
FormalDifference groth_neg(const FormalDifference& d);
FormalDifference groth_sub(const FormalDifference& d1, const FormalDifference& d2);
FormalDifference groth_meet(const FormalDifference& d1, const FormalDifference& d2);
FormalDifference groth_join(const FormalDifference& d1, const FormalDifference& d2);
FormalDifference groth_abs(const FormalDifference& d);

/// Expression tree over group elements with add, neg, meet and join.
class LatticeTerm {
 public:
  enum class Op { Leaf, Add, Neg, Meet, Join };

  static LatticeTerm leaf(GroupElement g);
  static LatticeTerm add(LatticeTerm a, LatticeTerm b);
  static LatticeTerm neg(LatticeTerm a);
  static LatticeTerm meet(LatticeTerm a, LatticeTerm b);
  static LatticeTerm join(LatticeTerm a, LatticeTerm b);

  /// S-expression: (join (meet [1,0] [0,1]) (add [1,0] (neg [0,1]))).
  /// Bare integers stand for rank-1 leaves.
  static LatticeTerm parse(const std::string& text);

  Op op() const { return node_->op; }
  const GroupElement& value() const;
  const LatticeTerm& left() const;
  const LatticeTerm& right() const;
  std::size_t rank() const;
  std::string to_string() const;

 private:
  struct Node {
    Op op = Op::Leaf;
    GroupElement value;
    std::vector<LatticeTerm> children;
  };
  explicit LatticeTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct GammaBudget {
  std::int64_t box = 3;
  std::size_t set_size = 2;
  std::int64_t trials = 400;
  std::uint64_t seed = 0x1a77u;
};

/// The Grothendieck l-group of a relation whose monoid of ideals passed the
/// cancellativity search. Construction throws NonCancellativeError naming
/// the counterexample otherwise.
class LatticeGroup {
 public:
  explicit LatticeGroup(RelationHandle rel, GammaBudget budget = {});

  const RelationHandle& relation() const { return rel_; }
  FormalDifference eval(const LatticeTerm& t) const;

 private:
  RelationHandle rel_;
};

/// Convenience: builds a LatticeGroup with the default budget each call.
FormalDifference term_eval(const RelationHandle& rel, const LatticeTerm& t);

/// Random leaves x', y', a', b'; checks
/// (x'+a') meet (y'+b') <= (y'+a') join (x'+b').
CheckReport regularity_inequality_check(const LatticeGroup& lg, std::int64_t samples,
                                        std::uint64_t seed);

}  // namespace lorenzen
