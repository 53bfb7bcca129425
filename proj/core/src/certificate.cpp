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

#include "lorenzen/certificate.hpp"

#include "lorenzen/linfeas.hpp"

namespace lorenzen {

namespace {

struct Column {
  GroupElement value;
  std::string label;
};

std::vector<Column> sequent_columns(const FiniteSubset& lhs, const FiniteSubset& rhs) {
  std::vector<Column> cols;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    for (std::size_t j = 0; j < rhs.size(); ++j) {
      cols.push_back({lhs[i] - rhs[j], "p[" + std::to_string(i) + "][" + std::to_string(j) + "]"});
    }
  }
  return cols;
}

std::string row_string(const std::vector<Integer>& row) {
  std::string s = "(";
  for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + row[i].get_str();
  return s + ")";
}

Integer dot(const std::vector<Integer>& row, const GroupElement& v) {
  Integer s = 0;
  for (std::size_t i = 0; i < row.size(); ++i) s += row[i] * v[i];
  return s;
}

// Names the first failed condition of "p >= 0, p != 0, sum p_k c_k <= 0".
std::optional<std::string> explain_combination(const std::vector<Column>& cols,
                                               const OrderedGroup& g,
                                               const std::vector<Integer>& p) {
  if (p.size() != cols.size()) return "p has the wrong shape";
  bool nonzero = false;
  GroupElement total = GroupElement::zero(g.rank());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (p[k] < 0) return cols[k].label + " = " + p[k].get_str() + " is negative";
    if (p[k] != 0) nonzero = true;
    total += p[k] * cols[k].value;
  }
  if (!nonzero) return std::string("p is identically zero");
  const GroupElement slack = -total;
  if (g.is_nonneg(slack)) return std::nullopt;
  if (g.is_polyhedral()) {
    const IntMatrix rows = g.inequality_rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Integer value = dot(rows[r], slack);
      if (value < 0) {
        return "cone inequality " + std::to_string(r) + " " + row_string(rows[r]) +
               " . (-sum p_k c_k) >= 0 fails: value " + value.get_str();
      }
    }
  }
  return "-sum p_k c_k = " + slack.to_string() + " is not in the positive cone";
}

std::vector<Integer> flatten(const IntMatrix& m) {
  std::vector<Integer> out;
  for (const auto& row : m) out.insert(out.end(), row.begin(), row.end());
  return out;
}

// The base group when a regular sequent over base is a free-l-group
// question over a polyhedral cone.
std::optional<OrderedGroup> farkas_group(const RelationHandle& base) {
  if (!base.is_finest_like() || !base.group().is_polyhedral()) return std::nullopt;
  return base.group();
}

Json farkas_refutation(const OrderedGroup& g, const FiniteSubset& lhs, const FiniteSubset& rhs) {
  std::vector<GroupElement> cols;
  for (const auto& c : sequent_columns(lhs, rhs)) cols.push_back(c.value);
  auto y = separating_functional(cols, g.inequality_rows());
  if (!y) throw InternalError("no separating functional for a refuted sequent");
  Json fy = Json::array();
  for (const auto& v : *y) fy.push_back(to_json(v));
  return {{"type", "farkas"}, {"functional", fy}};
}

std::optional<std::string> check_farkas(const OrderedGroup& g, const FiniteSubset& lhs,
                                        const FiniteSubset& rhs, const Json& functional) {
  if (!functional.is_array()) return std::string("functional must be an array");
  const IntMatrix rows = g.inequality_rows();
  if (functional.size() != rows.size()) return std::string("functional has the wrong length");
  std::vector<Rational> y;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    y.push_back(rational_from_json(functional[r]));
    if (y.back() < 0) return "functional entry " + std::to_string(r) + " is negative";
  }
  for (const auto& c : sequent_columns(lhs, rhs)) {
    Rational s = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) s += y[r] * Rational(dot(rows[r], c.value));
    if (s < 1) {
      return "column " + c.label + " = " + c.value.to_string() + ": y . R c = " + s.get_str() +
             " < 1";
    }
  }
  return std::nullopt;
}

Json ideal_witnesses(const MonomialIdeal& outer, const MonomialIdeal& inner) {
  Json ws = Json::array();
  for (const auto& b : inner.generators()) {
    const Decision d = integral_dependence(outer, b);
    if (!d.is_yes()) throw InternalError(b.to_string() + " is not integral over " + outer.to_string());
    ws.push_back(to_json(*d.witness));
  }
  return ws;
}

std::optional<std::string> check_integral(const MonomialDomain& dom, const FiniteSubset& gens,
                                          const GroupElement& b, const Json& wj) {
  const Witness w = witness_from_json(wj);
  const auto* c = std::get_if<CombinationWitness>(&w.value);
  if (!c) return "witness for " + b.to_string() + " is not a combination";
  if (c->p.size() != gens.size()) return "witness for " + b.to_string() + " has the wrong shape";
  std::vector<Column> cols;
  std::vector<Integer> p;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (c->p[i].size() != 1) return "witness for " + b.to_string() + " has the wrong shape";
    cols.push_back({gens[i] - b, "k[" + std::to_string(i) + "]"});
    p.push_back(c->p[i][0]);
  }
  if (auto why = explain_combination(cols, dom.divisibility_group(), p)) {
    return "integrality of " + b.to_string() + ": " + *why;
  }
  return std::nullopt;
}

VerifyResult verdict_of(std::optional<std::string> failure, std::string ok) {
  if (failure) return {false, std::move(*failure)};
  return {true, std::move(ok)};
}

VerifyResult verify_sequent(const RelationHandle& base, std::int64_t depth,
                            const FiniteSubset& lhs, const FiniteSubset& rhs, const Json& cert) {
  const std::string verdict = cert.at("verdict").get<std::string>();
  if (verdict == "yes") {
    const Witness w = witness_from_json(cert.at("witness"));
    if (const auto* c = std::get_if<CombinationWitness>(&w.value); c && base.is_finest_like()) {
      if (c->p.size() != lhs.size()) return {false, "p has the wrong number of rows"};
      for (const auto& row : c->p) {
        if (row.size() != rhs.size()) return {false, "p has the wrong number of columns"};
      }
      return verdict_of(explain_combination(sequent_columns(lhs, rhs), base.group(), flatten(c->p)),
                        "p-matrix verified");
    }
    return verdict_of(verify_sequent_witness(base, lhs, rhs, w)
                          ? std::nullopt
                          : std::optional<std::string>("sequent witness does not verify"),
                      "sequent witness verified");
  }
  if (verdict == "no") {
    const Json& ref = cert.at("refutation");
    const std::string type = ref.at("type").get<std::string>();
    if (type == "farkas") {
      auto g = farkas_group(base);
      if (!g) return {false, "separating functional needs a polyhedral finest-like base"};
      return verdict_of(check_farkas(*g, lhs, rhs, ref.at("functional")),
                        "separating functional verified");
    }
    if (type == "recompute") {
      const Decision d = regular_entails(base, Sequent(lhs, rhs), depth);
      return verdict_of(d.is_no() ? std::nullopt
                                  : std::optional<std::string>(std::string("recomputation gave ") +
                                                               to_string(d.verdict)),
                        "recomputed");
    }
    return {false, "unknown refutation type \"" + type + "\""};
  }
  return {false, "certificates only cover yes and no verdicts"};
}

}  // namespace

Json sc_certificate(const RelationHandle& rel, const FiniteSubset& lhs, const GroupElement& rhs,
                    const Decision& d) {
  if (d.is_unknown()) return nullptr;
  Json cert = {{"kind", "sc"},
               {"relation", to_json(rel)},
               {"lhs", to_json(lhs)},
               {"rhs", to_json(rhs)},
               {"verdict", to_string(d.verdict)}};
  if (d.is_yes()) {
    cert["witness"] = to_json(*d.witness);
    return cert;
  }
  const auto g = rel.kind() == RelationHandle::Kind::Regularisation ? farkas_group(rel.base())
                                                                    : std::nullopt;
  cert["refutation"] = g ? farkas_refutation(*g, lhs, FiniteSubset::singleton(rhs))
                         : Json{{"type", "recompute"}};
  return cert;
}

Json sequent_certificate(const RelationHandle& rel, const Sequent& s, const Decision& d) {
  if (rel.kind() != RelationHandle::Kind::Regularisation) {
    throw ArgumentError("sequent certificates need a regularisation relation");
  }
  if (d.is_unknown()) return nullptr;
  const RelationHandle& base = rel.base();
  Json cert = {{"kind", "sequent"},
               {"relation", to_json(rel)},
               {"lhs", to_json(s.lhs)},
               {"rhs", to_json(s.rhs)},
               {"verdict", to_string(d.verdict)}};
  if (d.is_yes()) {
    cert["witness"] = to_json(*d.witness);
    return cert;
  }
  const auto g = farkas_group(base);
  cert["refutation"] = g ? farkas_refutation(*g, s.lhs, s.rhs) : Json{{"type", "recompute"}};
  return cert;
}

Json conjunction_certificate(std::vector<Json> parts) {
  return {{"kind", "all"}, {"parts", Json(std::move(parts))}};
}

Json lcd_certificate(const OrderedGroup& g, const LcdViolation& v) {
  return {{"kind", "lcd"},
          {"group", to_json(g)},
          {"element", to_json(v.element)},
          {"multiplier", to_json(v.multiplier)}};
}

Json closure_certificate(const MonomialIdeal& ideal, const MonomialIdeal& closure) {
  return {{"kind", "closure"},
          {"domain", to_json(ideal.domain())},
          {"ideal", to_json(ideal.generators())},
          {"closure", to_json(closure.generators())},
          {"witnesses", ideal_witnesses(ideal, closure)}};
}

Json containment_certificate(const MonomialIdeal& outer, const MonomialIdeal& inner) {
  return {{"kind", "containment"},
          {"domain", to_json(outer.domain())},
          {"outer", to_json(outer.generators())},
          {"inner", to_json(inner.generators())},
          {"witnesses", ideal_witnesses(outer, inner)}};
}

VerifyResult verify_certificate(const Json& cert) {
  try {
    const std::string kind = cert.at("kind").get<std::string>();
    if (kind == "sc") {
      const RelationHandle rel = relation_from_json(cert.at("relation"));
      const std::size_t rank = rel.group().rank();
      const FiniteSubset lhs = subset_from_json(cert.at("lhs"), rank);
      const GroupElement rhs = element_from_json(cert.at("rhs"), rank);
      if (rel.kind() == RelationHandle::Kind::Regularisation) {
        return verify_sequent(rel.base(), rel.depth(), lhs, FiniteSubset::singleton(rhs), cert);
      }
      const std::string verdict = cert.at("verdict").get<std::string>();
      if (verdict == "yes") {
        const Witness w = witness_from_json(cert.at("witness"));
        if (verify_sc_witness(rel, lhs, rhs, w)) return {true, "witness verified"};
        return {false, "witness does not establish " + lhs.to_string() + " |> " + rhs.to_string()};
      }
      if (verdict == "no") {
        const Decision d = sc_entails(rel, lhs, rhs);
        if (d.is_no()) return {true, "recomputed"};
        return {false, std::string("recomputation gave ") + to_string(d.verdict)};
      }
      return {false, "certificates only cover yes and no verdicts"};
    }
    if (kind == "sequent") {
      const RelationHandle rel = relation_from_json(cert.at("relation"));
      if (rel.kind() != RelationHandle::Kind::Regularisation) {
        return {false, "sequent certificates need a regularisation relation"};
      }
      const std::size_t rank = rel.group().rank();
      return verify_sequent(rel.base(), rel.depth(), subset_from_json(cert.at("lhs"), rank),
                            subset_from_json(cert.at("rhs"), rank), cert);
    }
    if (kind == "all") {
      const Json& parts = cert.at("parts");
      if (!parts.is_array() || parts.empty()) return {false, "parts must be a nonempty array"};
      for (std::size_t i = 0; i < parts.size(); ++i) {
        VerifyResult r = verify_certificate(parts[i]);
        if (!r.valid) return {false, "part " + std::to_string(i) + ": " + r.reason};
      }
      return {true, "every part verified"};
    }
    if (kind == "lcd") {
      const OrderedGroup g = group_from_json(cert.at("group"));
      const GroupElement a = element_from_json(cert.at("element"), g.rank());
      const Integer n = integer_from_json(cert.at("multiplier"));
      if (n < 2) return {false, "multiplier must be at least 2"};
      if (!g.is_nonneg(n * a)) return {false, "n a = " + (n * a).to_string() + " is not positive"};
      if (g.is_nonneg(a)) return {false, "a = " + a.to_string() + " is positive"};
      return {true, "0 <= n a and not 0 <= a"};
    }
    if (kind == "closure" || kind == "containment") {
      const MonomialDomain dom = domain_from_json(cert.at("domain"));
      if (!dom.is_ordered()) return {false, "domain has no divisibility order"};
      const bool closure = kind == "closure";
      const FiniteSubset gens = subset_from_json(cert.at(closure ? "ideal" : "outer"), dom.rank());
      const FiniteSubset targets =
          subset_from_json(cert.at(closure ? "closure" : "inner"), dom.rank());
      const Json& ws = cert.at("witnesses");
      if (!ws.is_array() || ws.size() != targets.size()) {
        return {false, "need one witness per generator"};
      }
      for (std::size_t i = 0; i < targets.size(); ++i) {
        if (auto why = check_integral(dom, gens, targets[i], ws[i])) return {false, *why};
      }
      if (closure) {
        for (const auto& a : gens) {
          bool covered = false;
          for (const auto& c : targets) covered = covered || dom.divides(c, a);
          if (!covered) return {false, "generator " + a.to_string() + " missing from the closure"};
        }
      }
      return {true, "every generator is integral"};
    }
    return {false, "unknown certificate kind \"" + kind + "\""};
  } catch (const Json::exception& e) {
    return {false, std::string("malformed certificate: ") + e.what()};
  } catch (const Error& e) {
    return {false, std::string("malformed certificate: ") + e.what()};
  }
}

}  // namespace lorenzen
