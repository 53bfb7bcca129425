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

// Self-contained JSON certificates and their checker. A certificate embeds
// the relation, group or domain it talks about, so it can be checked
// without the invocation that produced it.

#pragma once

#include <string>
#include <vector>

#include "lorenzen/serialize.hpp"

namespace lorenzen {

struct VerifyResult {
  bool valid = false;
  std::string reason;  // what failed, or what was checked
};

/// Null for Unknown. A No over a polyhedral free sequent carries a
/// separating functional; any other No is re-decided by the checker.
Json sc_certificate(const RelationHandle& rel, const FiniteSubset& lhs, const GroupElement& rhs,
                    const Decision& d);
/// `rel` must be a Regularisation handle; the claim is s in that relation.
Json sequent_certificate(const RelationHandle& rel, const Sequent& s, const Decision& d);
Json lcd_certificate(const OrderedGroup& g, const LcdViolation& v);
/// Every closure generator with its integral-dependence combination.
Json closure_certificate(const MonomialIdeal& ideal, const MonomialIdeal& closure);
/// Every generator of `inner` integral over `outer`.
Json containment_certificate(const MonomialIdeal& outer, const MonomialIdeal& inner);

/// {"kind": "all", "parts": [...]}: valid iff every part is.
Json conjunction_certificate(std::vector<Json> parts);

/// Never throws on bad content; malformed JSON structure yields
/// valid = false with the parse error as reason.
VerifyResult verify_certificate(const Json& cert);

}  // namespace lorenzen
