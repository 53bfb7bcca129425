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

#include "lorenzen/report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace lorenzen {

void CheckReport::record_failure(std::size_t size, std::string text) {
  ++failure_count;
  auto pos = std::upper_bound(failures.begin(), failures.end(), size,
                              [](std::size_t s, const Counterexample& c) { return s < c.size; });
  if (static_cast<std::size_t>(pos - failures.begin()) >= kKeep) return;
  failures.insert(pos, Counterexample{size, std::move(text)});
  if (failures.size() > kKeep) failures.pop_back();
}

CheckReport& SuiteReport::add(std::string name) {
  checks.push_back(CheckReport{});
  checks.back().name = std::move(name);
  return checks.back();
}

const CheckReport* SuiteReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.passed(); });
}

std::int64_t SuiteReport::min_trials() const {
  if (checks.empty()) return 0;
  std::int64_t m = std::numeric_limits<std::int64_t>::max();
  for (const auto& c : checks) m = std::min(m, c.trials);
  return m;
}

std::string SuiteReport::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    if (i) os << ' ';
    os << c.name << '=' << c.trials << '/' << c.failure_count;
  }
  return os.str();
}

}  // namespace lorenzen
