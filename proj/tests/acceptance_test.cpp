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


// Runs every acceptance criterion and prints one PASS/FAIL line for each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lorenzen/axioms.hpp"
#include "lorenzen/dedekind.hpp"
#include "lorenzen/lgroup.hpp"
#include "lorenzen/linfeas.hpp"
#include "lorenzen/regularise.hpp"
#include "lorenzen/sampling.hpp"

namespace lorenzen {
namespace {

using E = GroupElement;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string num(std::int64_t n) { return std::to_string(n); }

Outcome closures_over_cusp() {
  const MonomialDomain s23 = MonomialDomain::semigroup({2, 3});
  const auto c3 = integral_closure(MonomialIdeal(s23, {E{3}})).generators();
  const auto c2 = integral_closure(MonomialIdeal(s23, {E{2}})).generators();
  const Divisor d = divisor_sub(basic_divisor(s23, {E{3}}), basic_divisor(s23, {E{2}}));
  const bool positive = divisor_leq(basic_divisor(s23, {E{0}}), d);
  const bool member = ideal_member(MonomialIdeal(s23, {E{0}}), E{1});
  const bool ok = c3 == FiniteSubset{E{3}, E{4}} && c2 == FiniteSubset{E{2}, E{3}} && positive && !member;
  return {ok, "Icl<3>=" + c3.to_string() + " Icl<2>=" + c2.to_string() +
                  " 0<=D:" + (positive ? "yes" : "no") + " 1 in <0>:" + (member ? "yes" : "no")};
}

Outcome plane_gcd() {
  const MonomialDomain poly = MonomialDomain::poly(2);
  const Divisor m = divisor_meet(basic_divisor(poly, {E{3, 0}}), basic_divisor(poly, {E{0, 3}}));
  const FiniteSubset expected{E{3, 0}, E{2, 1}, E{1, 2}, E{0, 3}};
  const bool neg_is_unit = m.neg().generators() == FiniteSubset{E{0, 0}};
  return {m.pos().generators() == expected && neg_is_unit, "meet = " + m.to_string()};
}

Outcome oracle_equivalence() {
  Sampler s(0xacce55);
  std::int64_t oracle_yes = 0, free_yes = 0, contradictions = 0, bad_witness = 0, beyond_bound = 0;
  const std::int64_t samples = 1000;
  for (std::int64_t t = 0; t < samples; ++t) {
    const std::size_t d = 1 + s.index(3);
    const OrderedGroup g = OrderedGroup::product(d);
    const Sequent q(s.subset(d, 3, -4, 4), s.subset(d, 3, -4, 4));
    std::vector<GroupElement> cols;
    for (const auto& a : q.lhs) {
      for (const auto& b : q.rhs) cols.push_back(a - b);
    }
    const bool oracle = brute_force_feasible(FeasibilityProblem{cols, g}, 6).has_value();
    const Decision dec = free_entails(g, q);
    oracle_yes += oracle;
    if (oracle && !dec.is_yes()) ++contradictions;
    if (!dec.is_yes()) continue;
    ++free_yes;
    const IntMatrix& p = std::get<CombinationWitness>(dec.witness->value).p;
    std::vector<Integer> flat;
    bool within = true;
    for (const auto& row : p) {
      for (const auto& v : row) {
        flat.push_back(v);
        within = within && v <= 6;
      }
    }
    if (!within) ++beyond_bound;
    if (!verify_combination(cols, g, flat)) ++bad_witness;
  }
  return {contradictions == 0 && bad_witness == 0,
          num(samples) + " sequents, oracle yes " + num(oracle_yes) + ", free yes " + num(free_yes) +
              ", contradictions " + num(contradictions) + ", bad witnesses " + num(bad_witness) +
              ", witnesses beyond bound " + num(beyond_bound)};
}

Outcome axiom_suites() {
  std::string detail;
  bool ok = true;
  auto take = [&](const std::string& label, const SuiteReport& r, std::int64_t need) {
    const bool good = r.passed() && r.min_trials() >= need;
    ok = ok && good;
    detail += label + (good ? " ok" : " FAILED") + " (min trials " + num(r.min_trials()) + "); ";
  };
  take("finest Z^2", axiom_suite_sc(RelationHandle::finest(OrderedGroup::product(2)), 500, 1), 500);
  take("dedekind <2,3>",
       axiom_suite_sc(RelationHandle::dedekind(MonomialDomain::semigroup({2, 3})), 500, 2), 500);
  take("regular Z", regular_axiom_suite(RelationHandle::finest(OrderedGroup::product(1)), 200, 3), 200);
  take("regular Z^2", regular_axiom_suite(RelationHandle::finest(OrderedGroup::product(2)), 200, 4),
       200);
  return {ok, detail};
}

bool flags_zero_one(const ClosednessReport& r) {
  for (const auto& [a, b] : r.violations) {
    if (a == E{0} && b == E{1}) return true;
  }
  return false;
}

Outcome lcd_theorem() {
  const auto product = lcd_condition_violation(OrderedGroup::product(2), 4, 4);
  const auto matrix = lcd_condition_violation(OrderedGroup::matrix({{1, 1}, {1, -1}}), 4, 4);
  const auto cusp = lcd_condition_violation(OrderedGroup::semigroup({2, 3}), 4, 4);
  const bool cusp_ok = cusp && cusp->element == E{1} && cusp->multiplier == 2;
  const ClosednessReport bad =
      closedness_check(RelationHandle::finest(OrderedGroup::semigroup({2, 3})), 100, 5);
  const ClosednessReport good = closedness_check(RelationHandle::finest(OrderedGroup::product(1)), 100, 5);
  const ClosednessReport plane = closedness_check(RelationHandle::finest(OrderedGroup::product(2)), 100, 5);
  const bool ok = !product && !matrix && cusp_ok && flags_zero_one(bad) && good.closed() && plane.closed();
  std::string cusp_text = cusp ? "(" + cusp->element.to_string() + "," + cusp->multiplier.get_str() + ")" : "none";
  return {ok, std::string("product ") + (product ? "violation" : "none") + ", matrix " +
                  (matrix ? "violation" : "none") + ", <2,3> " + cusp_text + ", 0|-1 flagged on <2,3>: " +
                  (flags_zero_one(bad) ? "yes" : "no") + ", on Z: " + (flags_zero_one(good) ? "yes" : "no")};
}

Outcome cancellativity() {
  const auto dedekind = RelationHandle::dedekind(MonomialDomain::semigroup({2, 3}));
  const auto found = gamma_counterexample_search(dedekind, 8, 2, 2000, 6);
  const auto reg = gamma_counterexample_search(RelationHandle::regularisation(dedekind, 6), 8, 2, 2000, 6);
  return {found.has_value() && !reg.has_value(),
          "dedekind: " + (found ? found->to_string() : std::string("none")) +
              "; regularised: " + (reg ? reg->to_string() : std::string("none"))};
}

Outcome agreement() {
  std::string detail;
  bool ok = true;
  auto take = [&](const std::string& label, const AgreementReport& r) {
    ok = ok && r.passed() && r.trials >= 200;
    detail += label + ": " + num(r.trials) + " trials, " + num(r.decided) + " decided, " +
              num(static_cast<std::int64_t>(r.disagreements.size())) + " disagreements; ";
  };
  take("finest Z^2", agreement_check(RelationHandle::finest(OrderedGroup::product(2)), 200, 7));
  take("dedekind <2,3>", agreement_check(RelationHandle::dedekind(MonomialDomain::semigroup({2, 3})), 200, 7));
  return {ok, detail};
}

LatticeTerm random_term(Sampler& s, int depth) {
  if (depth == 0 || s.coin(0.4)) return LatticeTerm::leaf(s.element(2, -2, 2));
  LatticeTerm a = random_term(s, depth - 1), b = random_term(s, depth - 1);
  switch (s.index(4)) {
    case 0:
      return LatticeTerm::add(a, b);
    case 1:
      return LatticeTerm::meet(a, b);
    case 2:
      return LatticeTerm::join(a, b);
    default:
      return LatticeTerm::neg(a);
  }
}

Outcome lgroup_identities() {
  const LatticeGroup lg(RelationHandle::regularisation(RelationHandle::finest(OrderedGroup::product(2)), 6));
  Sampler s(8);
  std::int64_t trials = 0, failures = 0, undecided = 0;
  auto check = [&](const Decision& d) {
    if (d.is_unknown()) ++undecided;
    if (d.is_no()) ++failures;
  };
  for (int t = 0; t < 200; ++t) {
    const LatticeTerm x = random_term(s, 1), y = random_term(s, 1), z = random_term(s, 1);
    using T = LatticeTerm;
    check(groth_eq(lg.eval(T::add(T::join(x, y), T::meet(x, y))), lg.eval(T::add(x, y))));
    check(groth_eq(lg.eval(T::meet(x, T::join(y, z))),
                   lg.eval(T::join(T::meet(x, y), T::meet(x, z)))));
    ++trials;
  }
  const CheckReport reg = regularity_inequality_check(lg, 200, 9);
  const bool ok = failures == 0 && undecided == 0 && reg.passed() && reg.trials >= 200;
  return {ok, num(trials) + " term triples, identity failures " + num(failures) + ", undecided " +
                  num(undecided) + "; regularity inequality " + num(reg.trials) + " trials, " +
                  num(reg.failure_count) + " failures"};
}

Outcome macaulay() {
  const CheckReport r = macaulay_check(MonomialDomain::poly(2), 300, 6, 10);
  return {r.passed() && r.trials >= 300, num(r.trials) + " trials, " + num(r.failure_count) + " failures"};
}

Outcome dual_characterisation() {
  std::string detail;
  bool ok = true;
  auto run = [&](const std::string& label, const MonomialDomain& dom, std::int64_t lo, std::int64_t hi) {
    Sampler s(11);
    std::int64_t mismatches = 0, yes = 0;
    const std::int64_t samples = 500;
    for (std::int64_t t = 0; t < samples; ++t) {
      const FiniteSubset a = s.subset(dom.rank(), 3, lo, hi);
      const E b = s.element(dom.rank(), lo, hi);
      const bool integral = integral_dependence(MonomialIdeal(dom, a), b).is_yes();
      const bool free = free_entails(dom.divisibility_group(), Sequent(a, FiniteSubset{b})).is_yes();
      yes += integral;
      if (integral != free) ++mismatches;
    }
    ok = ok && mismatches == 0;
    detail += label + ": " + num(samples) + " samples, " + num(yes) + " integral, " + num(mismatches) +
              " mismatches; ";
  };
  run("poly(2)", MonomialDomain::poly(2), 0, 6);
  run("semigroup <2,3>", MonomialDomain::semigroup({2, 3}), 0, 8);
  run("semigroup <3,5,7>", MonomialDomain::semigroup({3, 5, 7}), 0, 10);
  return {ok, detail};
}

}  // namespace
}  // namespace lorenzen

int main() {
  using namespace lorenzen;
  const std::vector<std::function<Outcome()>> criteria{
      closures_over_cusp, plane_gcd,  oracle_equivalence, axiom_suites,     lcd_theorem,
      cancellativity,     agreement,  lgroup_identities,  macaulay,         dual_characterisation};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu: %s (%.2fs) %s\n", i + 1, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
