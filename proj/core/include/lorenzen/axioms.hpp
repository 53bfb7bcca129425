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

// Randomised checks of the system-of-ideals rules S0-S4.

#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "lorenzen/relation.hpp"
#include "lorenzen/report.hpp"

namespace lorenzen {

using ScOracle = std::function<Decision(const FiniteSubset&, const GroupElement&)>;

/// Checks named S0 (reflexivity), S1 (monotonicity), S2 (cut), S3 (order
/// preservation) and S4 (translation), each run `samples` times.
SuiteReport axiom_suite_sc(const RelationHandle& rel, std::int64_t samples, std::uint64_t seed);
/// The same suite against an arbitrary decision function over g.
SuiteReport axiom_suite_sc(const OrderedGroup& g, const ScOracle& oracle, std::int64_t samples,
                           std::uint64_t seed);

struct ReflectionReport {
  std::int64_t trials = 0;
  std::int64_t skipped = 0;
  /// (a, b) with {a} |> b but not a <= b, sorted and deduplicated.
  std::vector<std::pair<GroupElement, GroupElement>> violations;
};

/// Exhausts a small box of pairs, then samples `samples` more.
ReflectionReport order_reflection_check(const RelationHandle& rel, std::int64_t samples,
                                        std::uint64_t seed);

}  // namespace lorenzen
