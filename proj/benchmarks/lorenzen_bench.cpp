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


#include <benchmark/benchmark.h>

#include "lorenzen/dedekind.hpp"
#include "lorenzen/linfeas.hpp"
#include "lorenzen/regularise.hpp"
#include "lorenzen/sampling.hpp"

namespace lorenzen {
namespace {

using E = GroupElement;

void BM_FreeEntails(benchmark::State& state) {
  const auto rank = static_cast<std::size_t>(state.range(0));
  const OrderedGroup g = OrderedGroup::product(rank);
  Sampler s(1);
  std::vector<Sequent> sequents;
  for (int i = 0; i < 64; ++i) sequents.emplace_back(s.subset(rank, 3, -4, 4), s.subset(rank, 3, -4, 4));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(free_entails(g, sequents[i++ % sequents.size()]));
}
BENCHMARK(BM_FreeEntails)->Arg(1)->Arg(2)->Arg(3)->Arg(5);

void BM_BruteForce(benchmark::State& state) {
  const OrderedGroup g = OrderedGroup::product(2);
  const std::vector<E> cols{E{2, -1}, E{-1, 2}, E{1, 1}, E{3, -2}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_feasible(FeasibilityProblem{cols, g}, state.range(0)));
  }
}
BENCHMARK(BM_BruteForce)->Arg(2)->Arg(4)->Arg(6);

void BM_SignTree(benchmark::State& state) {
  const auto base = RelationHandle::finest(OrderedGroup::product(2));
  const Sequent s(FiniteSubset{E{1, -1}, E{-1, 1}}, FiniteSubset{E{0, 0}});
  for (auto _ : state) benchmark::DoNotOptimize(sign_tree_entails(base, s, state.range(0)));
}
BENCHMARK(BM_SignTree)->Arg(2)->Arg(3);

void BM_IntegralClosurePoly(benchmark::State& state) {
  const long n = state.range(0);
  const MonomialIdeal ideal(MonomialDomain::poly(2), {E{n, 0}, E{0, n}});
  for (auto _ : state) benchmark::DoNotOptimize(integral_closure(ideal));
}
BENCHMARK(BM_IntegralClosurePoly)->Arg(3)->Arg(8)->Arg(16)->Arg(32);

void BM_IntegralClosureSemigroup(benchmark::State& state) {
  const MonomialIdeal ideal(MonomialDomain::semigroup({5, 7, 11}), {E{state.range(0)}});
  for (auto _ : state) benchmark::DoNotOptimize(integral_closure(ideal));
}
BENCHMARK(BM_IntegralClosureSemigroup)->Arg(3)->Arg(20);

void BM_PruferSearch(benchmark::State& state) {
  const auto base = RelationHandle::finest(OrderedGroup::product(2));
  const FiniteSubset a{E{1, 0}, E{0, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(prufer_entails(base, a, E{1, 1}, state.range(0)));
}
BENCHMARK(BM_PruferSearch)->Arg(1)->Arg(2);

}  // namespace
}  // namespace lorenzen

BENCHMARK_MAIN();
