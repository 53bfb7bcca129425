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

// JSON forms of every value type. Integers that fit in 64 bits are JSON
// numbers, larger ones decimal strings; rationals are "p/q" strings.
// Parsers throw ParseError on malformed input.

#pragma once

#include <optional>

#include <nlohmann/json.hpp>

#include "lorenzen/decision.hpp"
#include "lorenzen/dedekind.hpp"
#include "lorenzen/domain.hpp"
#include "lorenzen/meet_monoid.hpp"
#include "lorenzen/regularise.hpp"
#include "lorenzen/relation.hpp"
#include "lorenzen/report.hpp"

namespace lorenzen {

using Json = nlohmann::json;

Json to_json(const Integer& n);
Json to_json(const Rational& q);
Json to_json(const GroupElement& a);
Json to_json(const FiniteSubset& a);
Json to_json(const OrderedGroup& g);
Json to_json(const MonomialDomain& d);
Json to_json(const RelationHandle& rel);
Json to_json(const Witness& w);
Json to_json(const ForcingWitness& w);
/// {"verdict", "witness", "bound_used"}; absent parts are null.
Json to_json(const Decision& d);
Json to_json(const Sequent& s);
Json to_json(const MeetTerm& t);
/// {"domain": ..., "ideal": [...]}
Json to_json(const MonomialIdeal& ideal);
/// {"pos": [...], "neg": [...]}
Json to_json(const Divisor& d);
Json to_json(const CheckReport& r);
Json to_json(const SuiteReport& r);

Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
/// Accepts an array of integers or, for rank 1, a bare integer.
GroupElement element_from_json(const Json& j, std::optional<std::size_t> rank = std::nullopt);
FiniteSubset subset_from_json(const Json& j, std::optional<std::size_t> rank = std::nullopt);
IntMatrix matrix_from_json(const Json& j);
OrderedGroup group_from_json(const Json& j);
MonomialDomain domain_from_json(const Json& j);
RelationHandle relation_from_json(const Json& j);
Witness witness_from_json(const Json& j);
ForcingWitness forcing_witness_from_json(const Json& j);

}  // namespace lorenzen
