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

// Seeded random instances for the property suites.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lorenzen/group.hpp"

namespace lorenzen {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin(double p = 0.5);
  std::size_t index(std::size_t n);

  GroupElement element(std::size_t rank, std::int64_t lo, std::int64_t hi);
  /// Between 1 and max_size elements (fewer after deduplication).
  FiniteSubset subset(std::size_t rank, std::size_t max_size, std::int64_t lo, std::int64_t hi);
  /// A nonnegative element of g of small size; 0 when the cone is trivial.
  GroupElement cone_element(const OrderedGroup& g, std::int64_t scale = 3);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Coordinate box used for random instances over g.
struct SampleBox {
  std::int64_t lo;
  std::int64_t hi;
};
SampleBox default_box(const OrderedGroup& g);

/// Every point of [lo, hi]^rank, last coordinate fastest.
std::vector<GroupElement> box_points(std::size_t rank, std::int64_t lo, std::int64_t hi);

/// Sum of absolute coordinates; the size measure for counterexamples.
std::size_t mass(const GroupElement& a);
std::size_t mass(const FiniteSubset& a);

}  // namespace lorenzen
