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

#include "lorenzen/lgroup.hpp"

#include "lorenzen/sampling.hpp"

namespace lorenzen {

FormalDifference::FormalDifference(MeetTerm pos, MeetTerm neg)
    : pos_(std::move(pos)), neg_(std::move(neg)) {
  if (!(pos_.relation() == neg_.relation())) {
    throw ArgumentError("formal difference over two relations");
  }
}

FormalDifference FormalDifference::embed(const RelationHandle& rel, const GroupElement& g) {
  rel.group().check_rank(g);
  return FormalDifference(canonicalize(rel, FiniteSubset::singleton(g)), ideal_zero(rel));
}

FormalDifference FormalDifference::embed(const MeetTerm& s) {
  return FormalDifference(s, ideal_zero(s.relation()));
}

std::string FormalDifference::to_string() const {
  return pos_.to_string() + " - " + neg_.to_string();
}

Decision groth_leq(const FormalDifference& d1, const FormalDifference& d2) {
  const MeetTerm left = ideal_add(d1.pos(), d2.neg());
  const MeetTerm right = ideal_add(d2.pos(), d1.neg());
  return preorder_leq(d1.relation(), left.support(), right.support());
}

Decision groth_eq(const FormalDifference& d1, const FormalDifference& d2) {
  const MeetTerm left = ideal_add(d1.pos(), d2.neg());
  const MeetTerm right = ideal_add(d2.pos(), d1.neg());
  return preorder_eq(d1.relation(), left.support(), right.support());
}

FormalDifference groth_add(const FormalDifference& d1, const FormalDifference& d2) {
  return FormalDifference(ideal_add(d1.pos(), d2.pos()), ideal_add(d1.neg(), d2.neg()));
}

FormalDifference groth_neg(const FormalDifference& d) { return FormalDifference(d.neg(), d.pos()); }

FormalDifference groth_sub(const FormalDifference& d1, const FormalDifference& d2) {
  return groth_add(d1, groth_neg(d2));
}

FormalDifference groth_meet(const FormalDifference& d1, const FormalDifference& d2) {
  return FormalDifference(
      ideal_meet(ideal_add(d1.pos(), d2.neg()), ideal_add(d2.pos(), d1.neg())),
      ideal_add(d1.neg(), d2.neg()));
}

FormalDifference groth_join(const FormalDifference& d1, const FormalDifference& d2) {
  return groth_neg(groth_meet(groth_neg(d1), groth_neg(d2)));
}

FormalDifference groth_abs(const FormalDifference& d) { return groth_join(d, groth_neg(d)); }

LatticeGroup::LatticeGroup(RelationHandle rel, GammaBudget budget) : rel_(std::move(rel)) {
  const auto cex = gamma_counterexample_search(rel_, budget.box, budget.set_size, budget.trials,
                                               budget.seed);
  if (cex) {
    throw NonCancellativeError("the ideal monoid of " + rel_.describe() +
                               " is not cancellative: " + cex->to_string());
  }
}

FormalDifference LatticeGroup::eval(const LatticeTerm& t) const {
  switch (t.op()) {
    case LatticeTerm::Op::Leaf:
      return FormalDifference::embed(rel_, t.value());
    case LatticeTerm::Op::Add:
      return groth_add(eval(t.left()), eval(t.right()));
    case LatticeTerm::Op::Neg:
      return groth_neg(eval(t.left()));
    case LatticeTerm::Op::Meet:
      return groth_meet(eval(t.left()), eval(t.right()));
    case LatticeTerm::Op::Join:
      return groth_join(eval(t.left()), eval(t.right()));
  }
  throw InternalError("unhandled term operator");
}

FormalDifference term_eval(const RelationHandle& rel, const LatticeTerm& t) {
  return LatticeGroup(rel).eval(t);
}

CheckReport regularity_inequality_check(const LatticeGroup& lg, std::int64_t samples,
                                        std::uint64_t seed) {
  const RelationHandle& rel = lg.relation();
  const std::size_t d = rel.group().rank();
  const SampleBox box = default_box(rel.group());
  Sampler s(seed);
  CheckReport report;
  report.name = "regularity-inequality";
  for (std::int64_t t = 0; t < samples; ++t) {
    const GroupElement x = s.element(d, box.lo, box.hi), y = s.element(d, box.lo, box.hi);
    const GroupElement a = s.element(d, box.lo, box.hi), b = s.element(d, box.lo, box.hi);
    auto leaf = [&](const GroupElement& e) { return FormalDifference::embed(rel, e); };
    const FormalDifference lhs = groth_meet(leaf(x + a), leaf(y + b));
    const FormalDifference rhs = groth_join(leaf(y + a), leaf(x + b));
    const Decision r = groth_leq(lhs, rhs);
    if (r.is_unknown()) {
      ++report.skipped;
      continue;
    }
    ++report.trials;
    if (!r.is_yes()) {
      report.record_failure(mass(x) + mass(y) + mass(a) + mass(b),
                            "x=" + x.to_string() + " y=" + y.to_string() + " a=" + a.to_string() +
                                " b=" + b.to_string());
    }
  }
  return report;
}

}  // namespace lorenzen
