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

#include "lorenzen/sampling.hpp"

namespace lorenzen {

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

bool Sampler::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

std::size_t Sampler::index(std::size_t n) {
  if (n == 0) throw ArgumentError("cannot pick from an empty range");
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
}

GroupElement Sampler::element(std::size_t rank, std::int64_t lo, std::int64_t hi) {
  std::vector<Integer> c;
  c.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) c.emplace_back(static_cast<long>(uniform(lo, hi)));
  return GroupElement(std::move(c));
}

FiniteSubset Sampler::subset(std::size_t rank, std::size_t max_size, std::int64_t lo,
                             std::int64_t hi) {
  const auto n = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(max_size)));
  std::vector<GroupElement> elems;
  for (std::size_t i = 0; i < n; ++i) elems.push_back(element(rank, lo, hi));
  return FiniteSubset(std::move(elems));
}

GroupElement Sampler::cone_element(const OrderedGroup& g, std::int64_t scale) {
  switch (g.kind()) {
    case ConeKind::Product:
      return element(g.rank(), 0, scale);
    case ConeKind::Trivial:
      return GroupElement::zero(g.rank());
    case ConeKind::Matrix:
      for (int tries = 0; tries < 64; ++tries) {
        GroupElement e = element(g.rank(), -scale, scale);
        if (g.is_nonneg(e)) return e;
      }
      return GroupElement::zero(g.rank());
    case ConeKind::Semigroup: {
      Integer s = 0;
      const auto& gens = g.generators();
      const std::int64_t count = uniform(0, scale);
      for (std::int64_t i = 0; i < count; ++i) s += gens[index(gens.size())];
      return GroupElement(std::vector<Integer>{s});
    }
  }
  return GroupElement::zero(g.rank());
}

SampleBox default_box(const OrderedGroup& g) {
  if (g.kind() == ConeKind::Semigroup) return {-4, 8};
  return {-3, 3};
}

std::size_t mass(const GroupElement& a) {
  std::size_t m = 0;
  for (const auto& c : a.coords()) {
    Integer v = abs(c);
    m += v.fits_ulong_p() ? v.get_ui() : 1000000;
  }
  return m;
}

std::size_t mass(const FiniteSubset& a) {
  std::size_t m = a.size();
  for (const auto& e : a) m += mass(e);
  return m;
}

std::vector<GroupElement> box_points(std::size_t rank, std::int64_t lo, std::int64_t hi) {
  std::vector<GroupElement> out;
  std::vector<Integer> c(rank, Integer(static_cast<long>(lo)));
  while (true) {
    out.emplace_back(c);
    std::size_t i = rank;
    while (i > 0) {
      --i;
      if (c[i] < hi) {
        ++c[i];
        break;
      }
      c[i] = static_cast<long>(lo);
      if (i == 0) return out;
    }
  }
}

}  // namespace lorenzen
