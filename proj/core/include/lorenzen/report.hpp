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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lorenzen {

struct Counterexample {
  std::size_t size = 0;  // total absolute coordinate mass; smaller is simpler
  std::string text;
};

/// Outcome of one randomised property.
struct CheckReport {
  std::string name;
  std::int64_t trials = 0;   // instances where the property was decided
  std::int64_t skipped = 0;  // instances with an Unknown somewhere
  std::int64_t failure_count = 0;
  std::vector<Counterexample> failures;  // the smallest few, smallest first

  static constexpr std::size_t kKeep = 5;

  void record_failure(std::size_t size, std::string text);
  bool passed() const { return failure_count == 0; }
};

struct SuiteReport {
  std::vector<CheckReport> checks;

  CheckReport& add(std::string name);
  const CheckReport* find(const std::string& name) const;
  bool passed() const;
  std::int64_t min_trials() const;
  std::string summary() const;
};

}  // namespace lorenzen
