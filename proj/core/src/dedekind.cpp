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

#include "lorenzen/dedekind.hpp"

#include <algorithm>

#include "lorenzen/linfeas.hpp"
#include "lorenzen/sampling.hpp"

namespace lorenzen {

namespace {

// Enumeration guard for closures of ideals with huge bounding boxes.
constexpr std::size_t kMaxClosurePoints = 2'000'000;

void require_same(const MonomialDomain& a, const MonomialDomain& b) {
  if (!(a == b)) {
    throw DomainMismatchError("ideals over different domains: " + a.describe() + " vs " +
                              b.describe());
  }
}

FiniteSubset minimal_under(const OrderedGroup& g, const FiniteSubset& a) {
  std::vector<GroupElement> keep;
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < a.size() && !redundant; ++j) {
      if (i != j && g.leq(a[j], a[i])) redundant = true;
    }
    if (!redundant) keep.push_back(a[i]);
  }
  return FiniteSubset(std::move(keep));
}

Decision one_column(std::size_t n, std::size_t index, Integer mult) {
  IntMatrix p(n, std::vector<Integer>(1, Integer(0)));
  p[index][0] = std::move(mult);
  return Decision::yes(Witness{CombinationWitness{std::move(p)}});
}

}  // namespace

MonomialIdeal::MonomialIdeal(MonomialDomain domain, const FiniteSubset& generators)
    : domain_(std::move(domain)), gens_(generators) {
  if (!domain_.is_ordered()) {
    throw UnsupportedConeError("ideals need a polynomial or semigroup ring, got " +
                               domain_.describe());
  }
  if (generators.rank() != domain_.rank()) {
    throw DimensionError("ideal generators do not have rank " + std::to_string(domain_.rank()));
  }
  gens_ = minimal_under(domain_.divisibility_group(), generators);
}

bool ideal_member(const MonomialIdeal& ideal, const GroupElement& b) {
  ideal.domain().check_rank(b);
  const auto& gens = ideal.generators();
  return std::any_of(gens.begin(), gens.end(),
                     [&](const GroupElement& a) { return ideal.domain().divides(a, b); });
}

bool ideal_contains(const MonomialIdeal& outer, const MonomialIdeal& inner) {
  require_same(outer.domain(), inner.domain());
  const auto& gens = inner.generators();
  return std::all_of(gens.begin(), gens.end(),
                     [&](const GroupElement& b) { return ideal_member(outer, b); });
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same(a.domain(), b.domain());
  return MonomialIdeal(a.domain(), sumset(a.generators(), b.generators()));
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same(a.domain(), b.domain());
  return MonomialIdeal(a.domain(), set_union(a.generators(), b.generators()));
}

Decision integral_dependence(const MonomialIdeal& ideal, const GroupElement& b) {
  const MonomialDomain& dom = ideal.domain();
  dom.check_rank(b);
  const FiniteSubset& gens = ideal.generators();
  const OrderedGroup& g = dom.divisibility_group();

  if (dom.kind() == MonomialDomain::Kind::Semigroup) {
    // Integral iff b >= the least generator.
    const GroupElement& least = gens[0];
    if (b[0] < least[0]) return Decision::no();
    const GroupElement diff = b - least;
    for (Integer n = 1;; ++n) {
      if (g.is_nonneg(n * diff)) return one_column(gens.size(), 0, n);
    }
  }

  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (g.leq(gens[i], b)) return one_column(gens.size(), i, 1);
  }
  for (std::size_t k = 0; k < b.rank(); ++k) {
    const bool below_all = std::all_of(gens.begin(), gens.end(),
                                       [&](const GroupElement& a) { return b[k] < a[k]; });
    if (below_all) return Decision::no();
  }
  std::vector<GroupElement> cols;
  for (const auto& a : gens) cols.push_back(a - b);
  auto p = feasible(FeasibilityProblem{cols, g});
  if (!p) return Decision::no();
  const std::vector<Integer> ip = to_integer_vector(*p);
  IntMatrix m;
  for (const auto& x : ip) m.push_back({x});
  return Decision::yes(Witness{CombinationWitness{std::move(m)}});
}

bool integral_dependence_by_powers(const MonomialIdeal& ideal, const GroupElement& b) {
  const MonomialDomain& dom = ideal.domain();
  if (dom.kind() != MonomialDomain::Kind::Semigroup) {
    throw UnsupportedConeError("the power search is implemented for semigroup rings only");
  }
  dom.check_rank(b);
  const OrderedGroup& g = dom.divisibility_group();
  const FiniteSubset& gens = ideal.generators();
  Integer least = gens[0][0];
  for (const auto& a : gens) least = std::min(least, a[0]);
  const Integer gap = std::max(Integer(1), Integer(b[0] - least));
  const Integer top = g.frobenius() * g.generator_gcd() + 1;
  Integer kstar;
  mpz_cdiv_q(kstar.get_mpz_t(), top.get_mpz_t(), gap.get_mpz_t());
  kstar = (std::max(kstar, Integer(1)) + 1) * g.generator_gcd();
  if (!kstar.fits_slong_p() || kstar > 10000) {
    throw ArgumentError("power search bound too large");
  }

  // k b in A^k + S for some k <= k*.
  FiniteSubset power = gens;
  for (long k = 1; k <= kstar.get_si(); ++k) {
    const GroupElement kb = Integer(k) * b;
    for (const auto& s : power) {
      if (g.leq(s, kb)) return true;
    }
    power = sumset(power, gens);
  }
  return false;
}

MonomialIdeal integral_closure(const MonomialIdeal& ideal) {
  const MonomialDomain& dom = ideal.domain();
  const FiniteSubset& gens = ideal.generators();
  const OrderedGroup& g = dom.divisibility_group();

  if (dom.kind() == MonomialDomain::Kind::Semigroup) {
    const Integer least = gens[0][0];
    const Integer gcd = g.generator_gcd();
    const Integer span = gcd * (g.frobenius() + 2);
    if (!span.fits_slong_p() || span > 1000000) throw ArgumentError("closure range too large");
    std::vector<GroupElement> minimal;
    for (long off = 0; off < span.get_si(); ++off) {
      GroupElement c(std::vector<Integer>{least + off});
      const bool covered = std::any_of(minimal.begin(), minimal.end(),
                                       [&](const GroupElement& m) { return g.leq(m, c); });
      if (!covered) minimal.push_back(std::move(c));
    }
    return MonomialIdeal(dom, FiniteSubset(std::move(minimal)));
  }

  // Lattice points of the bounding box in lexicographic order: anything
  // below a point comes before it, so a point above a known minimal member
  // is never minimal and needs no test.
  const std::size_t d = dom.rank();
  std::vector<Integer> lo(d), hi(d);
  for (std::size_t k = 0; k < d; ++k) {
    lo[k] = gens[0][k];
    hi[k] = gens[0][k];
    for (const auto& a : gens) {
      lo[k] = std::min(lo[k], a[k]);
      hi[k] = std::max(hi[k], a[k]);
    }
  }
  Integer count = 1;
  for (std::size_t k = 0; k < d; ++k) count *= hi[k] - lo[k] + 1;
  if (count > kMaxClosurePoints) throw ArgumentError("closure bounding box too large");

  std::vector<GroupElement> minimal;
  std::vector<Integer> c = lo;
  while (true) {
    GroupElement p(c);
    const bool covered = std::any_of(minimal.begin(), minimal.end(),
                                     [&](const GroupElement& m) { return g.leq(m, p); });
    if (!covered && integral_dependence(ideal, p).is_yes()) minimal.push_back(std::move(p));
    std::size_t k = d;
    bool done = true;
    while (k > 0) {
      --k;
      if (c[k] < hi[k]) {
        ++c[k];
        done = false;
        break;
      }
      c[k] = lo[k];
    }
    if (done) break;
  }
  return MonomialIdeal(dom, FiniteSubset(std::move(minimal)));
}

// ---------------------------------------------------------------------------

Divisor::Divisor(const MonomialIdeal& pos, const MonomialIdeal& neg)
    : pos_(integral_closure(pos)), neg_(integral_closure(neg)) {
  require_same(pos.domain(), neg.domain());
}

std::string Divisor::to_string() const { return pos_.to_string() + " - " + neg_.to_string(); }

Divisor basic_divisor(const MonomialDomain& domain, const FiniteSubset& a) {
  return Divisor(MonomialIdeal(domain, a),
                 MonomialIdeal(domain, FiniteSubset::singleton(GroupElement::zero(domain.rank()))));
}

Divisor divisor_add(const Divisor& d1, const Divisor& d2) {
  return Divisor(ideal_product(d1.pos(), d2.pos()), ideal_product(d1.neg(), d2.neg()));
}

Divisor divisor_neg(const Divisor& d) { return Divisor(d.neg(), d.pos(), Divisor::Closed{}); }

Divisor divisor_sub(const Divisor& d1, const Divisor& d2) {
  return divisor_add(d1, divisor_neg(d2));
}

Divisor divisor_meet(const Divisor& d1, const Divisor& d2) {
  return Divisor(ideal_sum(ideal_product(d1.pos(), d2.neg()), ideal_product(d2.pos(), d1.neg())),
                 ideal_product(d1.neg(), d2.neg()));
}

Divisor divisor_join(const Divisor& d1, const Divisor& d2) {
  return divisor_neg(divisor_meet(divisor_neg(d1), divisor_neg(d2)));
}

bool divisor_leq(const Divisor& d1, const Divisor& d2) {
  require_same(d1.domain(), d2.domain());
  // The outer ideal is closed, so containing the inner generators suffices.
  return ideal_contains(integral_closure(ideal_product(d1.pos(), d2.neg())),
                        ideal_product(d2.pos(), d1.neg()));
}

bool divisor_eq(const Divisor& d1, const Divisor& d2) {
  return divisor_leq(d1, d2) && divisor_leq(d2, d1);
}

// ---------------------------------------------------------------------------

CheckReport macaulay_check(const MonomialDomain& domain, std::int64_t trials, std::int64_t box,
                           std::uint64_t seed) {
  if (box < 0) throw ArgumentError("Macaulay box must be nonnegative");
  CheckReport report;
  report.name = "macaulay";
  Sampler s(seed);
  const std::size_t d = domain.rank();
  auto ideal = [&]() { return MonomialIdeal(domain, s.subset(d, 3, 0, box)); };
  for (std::int64_t t = 0; t < trials; ++t) {
    const MonomialIdeal a = ideal();
    const MonomialIdeal b = ideal();
    const MonomialIdeal c = s.coin(0.2) ? b : ideal();
    ++report.trials;
    const bool antecedent =
        ideal_contains(integral_closure(ideal_product(a, b)), ideal_product(a, c));
    if (!antecedent) continue;
    if (!ideal_contains(integral_closure(b), c)) {
      report.record_failure(mass(a.generators()) + mass(b.generators()) + mass(c.generators()),
                            "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string());
    }
  }
  return report;
}

MonomialDomain dedekind_forced(const MonomialDomain& domain, const GroupElement& x) {
  domain.check_rank(x);
  switch (domain.kind()) {
    case MonomialDomain::Kind::Semigroup: {
      if (domain.contains(x)) return domain;
      if (x[0] > 0) {
        std::vector<Integer> gens = domain.generators();
        gens.push_back(x[0]);
        return MonomialDomain::semigroup(std::move(gens));
      }
      Integer g = abs(x[0]);
      for (const auto& a : domain.generators()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
      return MonomialDomain::laurent(g);
    }
    case MonomialDomain::Kind::Poly:
      if (domain.contains(x)) return domain;
      return MonomialDomain::extended_poly(domain.rank(), x);
    case MonomialDomain::Kind::Laurent: {
      if (x[0] == 0) return domain;
      Integer g = abs(x[0]);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), domain.period().get_mpz_t());
      return MonomialDomain::laurent(g);
    }
    case MonomialDomain::Kind::ExtendedPoly:
      if (domain.contains(x)) return domain;
      break;
  }
  throw UnsupportedConeError("cannot adjoin " + x.to_string() + " to " + domain.describe());
}

}  // namespace lorenzen
