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

#include "lorenzen/relation.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "lorenzen/linfeas.hpp"
#include "lorenzen/regularise.hpp"

namespace lorenzen {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::Unknown:
      return "unknown";
  }
  return "?";
}

struct RelationHandle::Node {
  Kind kind;
  OrderedGroup group;
  std::optional<MonomialDomain> domain;
  std::optional<RelationHandle> base;
  std::vector<GroupElement> constraints;
  std::int64_t depth = 0;
};

RelationHandle RelationHandle::finest(OrderedGroup group) {
  return RelationHandle(std::make_shared<const Node>(Node{Kind::Finest, std::move(group), {}, {}, {}, 0}));
}

RelationHandle RelationHandle::dedekind(MonomialDomain domain) {
  OrderedGroup g = domain.divisibility_group();
  return RelationHandle(
      std::make_shared<const Node>(Node{Kind::Dedekind, std::move(g), std::move(domain), {}, {}, 0}));
}

RelationHandle RelationHandle::forced(const RelationHandle& base,
                                      std::vector<GroupElement> constraints, std::int64_t depth) {
  if (constraints.empty()) throw ArgumentError("forcing needs at least one constraint");
  if (depth < 0) throw ArgumentError("forcing depth must be nonnegative");
  for (const auto& x : constraints) base.group().check_rank(x);
  if (base.kind() == Kind::Forced) {
    std::vector<GroupElement> all = base.constraints();
    all.insert(all.end(), constraints.begin(), constraints.end());
    return forced(base.base(), std::move(all), std::max(depth, base.depth()));
  }
  return RelationHandle(std::make_shared<const Node>(
      Node{Kind::Forced, base.group(), {}, base, std::move(constraints), depth}));
}

RelationHandle RelationHandle::prufer(const RelationHandle& base, std::int64_t bound) {
  if (bound < 0) throw ArgumentError("Prufer bound must be nonnegative");
  return RelationHandle(
      std::make_shared<const Node>(Node{Kind::Prufer, base.group(), {}, base, {}, bound}));
}

RelationHandle RelationHandle::regularisation(const RelationHandle& base, std::int64_t depth) {
  if (depth < 0) throw ArgumentError("regularisation depth must be nonnegative");
  return RelationHandle(
      std::make_shared<const Node>(Node{Kind::Regularisation, base.group(), {}, base, {}, depth}));
}

RelationHandle::Kind RelationHandle::kind() const { return node_->kind; }
const OrderedGroup& RelationHandle::group() const { return node_->group; }
std::int64_t RelationHandle::depth() const { return node_->depth; }

const MonomialDomain& RelationHandle::domain() const {
  if (!node_->domain) throw ArgumentError("relation " + describe() + " has no domain");
  return *node_->domain;
}

const RelationHandle& RelationHandle::base() const {
  if (!node_->base) throw ArgumentError("relation " + describe() + " has no base");
  return *node_->base;
}

const std::vector<GroupElement>& RelationHandle::constraints() const {
  return node_->constraints;
}

bool RelationHandle::is_finest_like() const {
  return node_->kind == Kind::Finest || node_->kind == Kind::Dedekind;
}

bool RelationHandle::is_decidable() const {
  if (is_finest_like()) return true;
  if (node_->kind == Kind::Regularisation) {
    const RelationHandle& b = base();
    return b.is_finest_like();
  }
  return false;
}

std::string RelationHandle::name() const {
  switch (node_->kind) {
    case Kind::Finest:
      return "finest";
    case Kind::Dedekind:
      return "dedekind";
    case Kind::Forced:
      return "forced";
    case Kind::Prufer:
      return "prufer-" + base().name();
    case Kind::Regularisation:
      return "regular-" + base().name();
  }
  return "?";
}

std::string RelationHandle::describe() const {
  std::ostringstream os;
  switch (node_->kind) {
    case Kind::Finest:
      os << "finest(" << node_->group.describe() << ")";
      break;
    case Kind::Dedekind:
      os << "dedekind(" << node_->domain->describe() << ")";
      break;
    case Kind::Forced:
      os << "forced(" << base().describe() << ";";
      for (std::size_t i = 0; i < node_->constraints.size(); ++i)
        os << (i ? "," : "") << node_->constraints[i].to_string();
      os << ";" << node_->depth << ")";
      break;
    case Kind::Prufer:
      os << "prufer(" << base().describe() << ";" << node_->depth << ")";
      break;
    case Kind::Regularisation:
      os << "regularisation(" << base().describe() << ";" << node_->depth << ")";
      break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

void check_query(const RelationHandle& rel, const FiniteSubset& lhs, const GroupElement& rhs) {
  const OrderedGroup& g = rel.group();
  if (lhs.rank() != g.rank()) {
    throw DimensionError("subset " + lhs.to_string() + " does not have rank " +
                         std::to_string(g.rank()));
  }
  g.check_rank(rhs);
}

// Forced(base', ys) as base: fold the constraint lists together.
std::pair<RelationHandle, std::vector<GroupElement>> flatten(const RelationHandle& base,
                                                             const std::vector<GroupElement>& xs) {
  if (base.kind() != RelationHandle::Kind::Forced) return {base, xs};
  std::vector<GroupElement> all = base.constraints();
  all.insert(all.end(), xs.begin(), xs.end());
  return {base.base(), std::move(all)};
}

}  // namespace

Decision sc_entails(const RelationHandle& rel, const FiniteSubset& lhs, const GroupElement& rhs) {
  check_query(rel, lhs, rhs);
  switch (rel.kind()) {
    case RelationHandle::Kind::Finest:
    case RelationHandle::Kind::Dedekind: {
      const OrderedGroup& g = rel.group();
      for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (g.leq(lhs[i], rhs)) return Decision::yes(Witness{MemberWitness{i}});
      }
      return Decision::no();
    }
    case RelationHandle::Kind::Forced:
      return multi_forced_entails(rel.base(), rel.constraints(), lhs, rhs, rel.depth());
    case RelationHandle::Kind::Prufer:
      return prufer_entails(rel.base(), lhs, rhs, rel.depth());
    case RelationHandle::Kind::Regularisation:
      return regular_entails(rel.base(), Sequent(lhs, FiniteSubset::singleton(rhs)), rel.depth());
  }
  throw InternalError("unhandled relation kind");
}

Decision forced_entails(const RelationHandle& base, const GroupElement& x, const FiniteSubset& lhs,
                        const GroupElement& rhs, std::int64_t depth) {
  return multi_forced_entails(base, std::vector<GroupElement>{x}, lhs, rhs, depth);
}

// ---------------------------------------------------------------------------
// verification

bool verify_forcing_witness(const RelationHandle& base_in, const std::vector<GroupElement>& xs_in,
                            const FiniteSubset& lhs, const GroupElement& rhs,
                            const ForcingWitness& w) {
  auto [base, xs] = flatten(base_in, xs_in);
  if (w.steps.size() != xs.size()) return false;
  for (const auto& s : w.steps) {
    if (s < 0) return false;
  }
  const OrderedGroup& g = base.group();
  if (lhs.rank() != g.rank() || rhs.rank() != g.rank()) return false;
  for (const auto& x : xs) {
    if (x.rank() != g.rank()) return false;
  }
  if (!w.inner) {
    if (!base.is_finest_like() || w.index >= lhs.size()) return false;
    GroupElement e = lhs[w.index];
    for (std::size_t i = 0; i < xs.size(); ++i) e += w.steps[i] * xs[i];
    return g.leq(e, rhs);
  }
  FiniteSubset enlarged = lhs;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!w.steps[i].fits_slong_p()) return false;
    enlarged = sumset(enlarged, progression(xs[i], 0, w.steps[i].get_si()));
  }
  return verify_sc_witness(base, enlarged, rhs, *w.inner);
}

bool verify_sequent_witness(const RelationHandle& base, const FiniteSubset& lhs,
                            const FiniteSubset& rhs, const Witness& w) {
  if (lhs.rank() != base.group().rank() || rhs.rank() != base.group().rank()) return false;
  if (const auto* c = std::get_if<CombinationWitness>(&w.value)) {
    if (!base.is_finest_like()) return false;
    if (c->p.size() != lhs.size()) return false;
    std::vector<GroupElement> cols;
    std::vector<Integer> p;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      if (c->p[i].size() != rhs.size()) return false;
      for (std::size_t j = 0; j < rhs.size(); ++j) {
        cols.push_back(lhs[i] - rhs[j]);
        p.push_back(c->p[i][j]);
      }
    }
    return verify_combination(cols, base.group(), p);
  }
  if (const auto* t = std::get_if<SignTreeWitness>(&w.value)) {
    const FiniteSubset diffs = difference_set(lhs, rhs);
    const std::size_t m = t->auxiliaries.size();
    if (m >= 20 || t->leaves.size() != (std::size_t{1} << m)) return false;
    const GroupElement zero = GroupElement::zero(base.group().rank());
    for (std::size_t mask = 0; mask < t->leaves.size(); ++mask) {
      const SignLeaf& leaf = t->leaves[mask];
      if (leaf.signs.size() != m) return false;
      std::vector<GroupElement> xs;
      for (std::size_t i = 0; i < m; ++i) {
        const int expected = (mask >> i) & 1 ? -1 : 1;
        if (leaf.signs[i] != expected) return false;
        xs.push_back(expected > 0 ? t->auxiliaries[i] : -t->auxiliaries[i]);
      }
      if (!verify_forcing_witness(base, xs, diffs, zero, leaf.forcing)) return false;
    }
    return true;
  }
  if (const auto* f = std::get_if<ForcingWitness>(&w.value)) {
    // A single sign case with no auxiliaries.
    return verify_forcing_witness(base, {}, difference_set(lhs, rhs),
                                  GroupElement::zero(base.group().rank()), *f);
  }
  return false;
}

bool verify_sc_witness(const RelationHandle& rel, const FiniteSubset& lhs, const GroupElement& rhs,
                       const Witness& w) {
  if (lhs.rank() != rel.group().rank() || rhs.rank() != rel.group().rank()) return false;
  switch (rel.kind()) {
    case RelationHandle::Kind::Finest:
    case RelationHandle::Kind::Dedekind: {
      const auto* m = std::get_if<MemberWitness>(&w.value);
      return m && m->index < lhs.size() && rel.group().leq(lhs[m->index], rhs);
    }
    case RelationHandle::Kind::Forced: {
      const auto* f = std::get_if<ForcingWitness>(&w.value);
      return f && verify_forcing_witness(rel.base(), rel.constraints(), lhs, rhs, *f);
    }
    case RelationHandle::Kind::Prufer: {
      const auto* p = std::get_if<PruferWitness>(&w.value);
      if (!p || p->x.rank() != lhs.rank()) return false;
      const FiniteSubset left = sumset(lhs, p->x);
      for (const auto& c : translate(rhs, p->x)) {
        const Decision d = sc_entails(rel.base(), left, c);
        if (!d.is_yes() || !verify_sc_witness(rel.base(), left, c, *d.witness)) return false;
      }
      return true;
    }
    case RelationHandle::Kind::Regularisation:
      return verify_sequent_witness(rel.base(), lhs, FiniteSubset::singleton(rhs), w);
  }
  return false;
}

}  // namespace lorenzen
