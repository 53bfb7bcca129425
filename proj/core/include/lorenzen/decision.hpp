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

// Tri-state verdicts and the witnesses that back a Yes.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "lorenzen/group.hpp"

namespace lorenzen {

enum class Verdict { Yes, No, Unknown };

const char* to_string(Verdict v);

struct Witness;

/// A[index] <= b.
struct MemberWitness {
  std::size_t index = 0;
};

/// Forcing positivity of x_1..x_k. With `inner` empty the base relation is
/// finest-like and A[index] + sum steps_i x_i <= b. Otherwise steps are the
/// progression lengths p_i and `inner` witnesses
/// A + {0..p_1 x_1} + ... + {0..p_k x_k} |> b in the base.
struct ForcingWitness {
  std::vector<Integer> steps;
  std::size_t index = 0;
  std::shared_ptr<const Witness> inner;
};

/// Nonnegative integers p_ij, not all zero, with sum p_ij (a_i - b_j) <= 0.
struct CombinationWitness {
  IntMatrix p;
};

struct SignLeaf {
  std::vector<int> signs;  // +1 / -1 per auxiliary element
  ForcingWitness forcing;  // for A - B |>_{signs . aux} 0
};

struct SignTreeWitness {
  std::vector<GroupElement> auxiliaries;
  std::vector<SignLeaf> leaves;  // one per sign vector, in binary order
};

/// A + X <= b + X in the preorder of the base relation.
struct PruferWitness {
  FiniteSubset x;
};

/// One witness per element of the right-hand set, in order.
struct PerElementWitness {
  std::vector<Witness> items;
};

struct Witness {
  std::variant<MemberWitness, ForcingWitness, CombinationWitness, SignTreeWitness, PruferWitness,
               PerElementWitness>
      value;
};

struct Decision {
  Verdict verdict = Verdict::Unknown;
  std::optional<Witness> witness;
  std::optional<std::int64_t> bound_used;

  static Decision yes(Witness w, std::optional<std::int64_t> bound = std::nullopt) {
    return Decision{Verdict::Yes, std::move(w), bound};
  }
  static Decision no(std::optional<std::int64_t> bound = std::nullopt) {
    return Decision{Verdict::No, std::nullopt, bound};
  }
  static Decision unknown(std::int64_t bound) {
    return Decision{Verdict::Unknown, std::nullopt, bound};
  }

  bool is_yes() const { return verdict == Verdict::Yes; }
  bool is_no() const { return verdict == Verdict::No; }
  bool is_unknown() const { return verdict == Verdict::Unknown; }
};

}  // namespace lorenzen
