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

#include "lorenzen/serialize.hpp"

#include <limits>

namespace lorenzen {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw ParseError(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

std::int64_t int_field(const Json& j, const char* key) {
  const Integer n = integer_from_json(field(j, key));
  if (!n.fits_slong_p()) throw ParseError(std::string("field \"") + key + "\" out of range");
  return n.get_si();
}

std::size_t size_field(const Json& j, const char* key) {
  const std::int64_t n = int_field(j, key);
  if (n < 0) throw ParseError(std::string("field \"") + key + "\" must be nonnegative");
  return static_cast<std::size_t>(n);
}

std::vector<Integer> integers_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers");
  std::vector<Integer> out;
  for (const auto& v : j) out.push_back(integer_from_json(v));
  return out;
}

Json integers_to_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& n : v) out.push_back(to_json(n));
  return out;
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(integers_to_json(row));
  return out;
}

// Parsing only throws ParseError.
template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Json to_json(const Integer& n) {
  if (n.fits_slong_p()) return Json(static_cast<std::int64_t>(n.get_si()));
  return Json(n.get_str());
}

Json to_json(const Rational& q_in) {
  Rational q = q_in;
  q.canonicalize();
  if (q.get_den() == 1) return to_json(Integer(q.get_num()));
  return Json(q.get_str());
}

Json to_json(const GroupElement& a) {
  Json out = Json::array();
  for (const auto& c : a.coords()) out.push_back(to_json(c));
  return out;
}

Json to_json(const FiniteSubset& a) {
  Json out = Json::array();
  for (const auto& e : a) out.push_back(to_json(e));
  return out;
}

Json to_json(const OrderedGroup& g) {
  switch (g.kind()) {
    case ConeKind::Product:
      return {{"kind", "product"}, {"rank", g.rank()}};
    case ConeKind::Trivial:
      return {{"kind", "trivial"}, {"rank", g.rank()}};
    case ConeKind::Matrix:
      return {{"kind", "matrix"}, {"rows", matrix_to_json(g.matrix_rows())}};
    case ConeKind::Semigroup:
      return {{"kind", "semigroup"}, {"gens", integers_to_json(g.generators())}};
  }
  throw InternalError("unhandled cone kind");
}

Json to_json(const MonomialDomain& d) {
  switch (d.kind()) {
    case MonomialDomain::Kind::Poly:
      return {{"kind", "poly"}, {"rank", d.rank()}};
    case MonomialDomain::Kind::Semigroup:
      return {{"kind", "semigroup"}, {"gens", integers_to_json(d.generators())}};
    case MonomialDomain::Kind::ExtendedPoly:
      return {{"kind", "extended_poly"}, {"rank", d.rank()}, {"adjoined", to_json(d.adjoined())}};
    case MonomialDomain::Kind::Laurent:
      return {{"kind", "laurent"}, {"period", to_json(d.period())}};
  }
  throw InternalError("unhandled domain kind");
}

Json to_json(const RelationHandle& rel) {
  switch (rel.kind()) {
    case RelationHandle::Kind::Finest:
      return {{"rel", "finest"}, {"group", to_json(rel.group())}};
    case RelationHandle::Kind::Dedekind:
      return {{"rel", "dedekind"}, {"domain", to_json(rel.domain())}};
    case RelationHandle::Kind::Forced: {
      Json xs = Json::array();
      for (const auto& x : rel.constraints()) xs.push_back(to_json(x));
      return {{"rel", "forced"}, {"x", xs}, {"depth", rel.depth()}, {"base", to_json(rel.base())}};
    }
    case RelationHandle::Kind::Prufer:
      return {{"rel", "prufer"}, {"bound", rel.depth()}, {"base", to_json(rel.base())}};
    case RelationHandle::Kind::Regularisation:
      return {{"rel", "regularisation"}, {"depth", rel.depth()}, {"base", to_json(rel.base())}};
  }
  throw InternalError("unhandled relation kind");
}

Json to_json(const ForcingWitness& w) {
  Json out = {{"type", "forcing"}, {"steps", integers_to_json(w.steps)}, {"index", w.index}};
  if (w.inner) out["inner"] = to_json(*w.inner);
  return out;
}

Json to_json(const Witness& w) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MemberWitness>) {
          return {{"type", "member"}, {"index", v.index}};
        } else if constexpr (std::is_same_v<T, ForcingWitness>) {
          return to_json(v);
        } else if constexpr (std::is_same_v<T, CombinationWitness>) {
          return {{"type", "combination"}, {"p", matrix_to_json(v.p)}};
        } else if constexpr (std::is_same_v<T, SignTreeWitness>) {
          Json aux = Json::array();
          for (const auto& a : v.auxiliaries) aux.push_back(to_json(a));
          Json leaves = Json::array();
          for (const auto& leaf : v.leaves) {
            leaves.push_back({{"signs", leaf.signs}, {"forcing", to_json(leaf.forcing)}});
          }
          return {{"type", "sign_tree"}, {"auxiliaries", aux}, {"leaves", leaves}};
        } else if constexpr (std::is_same_v<T, PruferWitness>) {
          return {{"type", "prufer"}, {"x", to_json(v.x)}};
        } else {
          Json items = Json::array();
          for (const auto& item : v.items) items.push_back(to_json(item));
          return {{"type", "per_element"}, {"items", items}};
        }
      },
      w.value);
}

Json to_json(const Decision& d) {
  Json out;
  out["verdict"] = to_string(d.verdict);
  out["witness"] = d.witness ? to_json(*d.witness) : Json(nullptr);
  out["bound_used"] = d.bound_used ? Json(*d.bound_used) : Json(nullptr);
  return out;
}

Json to_json(const Sequent& s) { return {{"lhs", to_json(s.lhs)}, {"rhs", to_json(s.rhs)}}; }

Json to_json(const MeetTerm& t) {
  return {{"relation", to_json(t.relation())}, {"support", to_json(t.support())}};
}

Json to_json(const MonomialIdeal& ideal) {
  return {{"domain", to_json(ideal.domain())}, {"ideal", to_json(ideal.generators())}};
}

Json to_json(const Divisor& d) {
  return {{"pos", to_json(d.pos().generators())}, {"neg", to_json(d.neg().generators())}};
}

Json to_json(const CheckReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(f.text);
  return {{"name", r.name},
          {"trials", r.trials},
          {"skipped", r.skipped},
          {"failure_count", r.failure_count},
          {"failures", failures},
          {"passed", r.passed()}};
}

Json to_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"checks", checks}, {"passed", r.passed()}};
}

// ---------------------------------------------------------------------------

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      const auto u = j.get<std::uint64_t>();
      if (u > static_cast<std::uint64_t>(std::numeric_limits<long>::max())) {
        return Integer(std::to_string(u));
      }
      return Integer(static_cast<long>(u));
    }
    return Integer(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    Integer n;
    if (s.empty() || n.set_str(s, 10) != 0) throw ParseError("not an integer: \"" + s + "\"");
    return n;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
      throw ParseError("not a rational: \"" + s + "\"");
    }
    q.canonicalize();
    return q;
  }
  throw ParseError("expected a rational, got " + j.dump());
}

GroupElement element_from_json(const Json& j, std::optional<std::size_t> rank) {
  GroupElement out = j.is_array() ? GroupElement(integers_from_json(j))
                                  : GroupElement(std::vector<Integer>{integer_from_json(j)});
  if (out.rank() == 0) throw ParseError("elements need at least one coordinate");
  if (rank && out.rank() != *rank) {
    throw ParseError("element " + j.dump() + " does not have rank " + std::to_string(*rank));
  }
  return out;
}

FiniteSubset subset_from_json(const Json& j, std::optional<std::size_t> rank) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty array of elements");
  std::vector<GroupElement> elems;
  for (const auto& e : j) {
    elems.push_back(element_from_json(e, rank));
    if (!rank) rank = elems.back().rank();
  }
  return FiniteSubset(std::move(elems));
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a matrix");
  IntMatrix m;
  for (const auto& row : j) m.push_back(integers_from_json(row));
  return m;
}

OrderedGroup group_from_json(const Json& j) {
  return guarded([&] {
    const std::string kind = string_field(j, "kind");
    if (kind == "product") return OrderedGroup::product(size_field(j, "rank"));
    if (kind == "trivial") return OrderedGroup::trivial(size_field(j, "rank"));
    if (kind == "matrix") return OrderedGroup::matrix(matrix_from_json(field(j, "rows")));
    if (kind == "semigroup") return OrderedGroup::semigroup(integers_from_json(field(j, "gens")));
    throw ParseError("unknown group kind \"" + kind + "\"");
  });
}

MonomialDomain domain_from_json(const Json& j) {
  return guarded([&] {
    const std::string kind = string_field(j, "kind");
    if (kind == "poly") return MonomialDomain::poly(size_field(j, "rank"));
    if (kind == "semigroup") return MonomialDomain::semigroup(integers_from_json(field(j, "gens")));
    if (kind == "extended_poly") {
      const std::size_t rank = size_field(j, "rank");
      return MonomialDomain::extended_poly(rank, element_from_json(field(j, "adjoined"), rank));
    }
    if (kind == "laurent") return MonomialDomain::laurent(integer_from_json(field(j, "period")));
    throw ParseError("unknown domain kind \"" + kind + "\"");
  });
}

RelationHandle relation_from_json(const Json& j) {
  return guarded([&] {
    const std::string rel = string_field(j, "rel");
    if (rel == "finest") return RelationHandle::finest(group_from_json(field(j, "group")));
    if (rel == "dedekind") return RelationHandle::dedekind(domain_from_json(field(j, "domain")));
    const RelationHandle base = relation_from_json(field(j, "base"));
    if (rel == "forced") {
      const Json& xj = field(j, "x");
      std::vector<GroupElement> xs;
      const std::size_t rank = base.group().rank();
      if (xj.is_array() && !xj.empty() && xj[0].is_array()) {
        for (const auto& x : xj) xs.push_back(element_from_json(x, rank));
      } else {
        xs.push_back(element_from_json(xj, rank));
      }
      return RelationHandle::forced(base, std::move(xs), int_field(j, "depth"));
    }
    if (rel == "prufer") return RelationHandle::prufer(base, int_field(j, "bound"));
    if (rel == "regularisation") return RelationHandle::regularisation(base, int_field(j, "depth"));
    throw ParseError("unknown relation \"" + rel + "\"");
  });
}

ForcingWitness forcing_witness_from_json(const Json& j) {
  ForcingWitness w;
  w.steps = integers_from_json(field(j, "steps"));
  w.index = size_field(j, "index");
  if (j.contains("inner") && !j["inner"].is_null()) {
    w.inner = std::make_shared<const Witness>(witness_from_json(j["inner"]));
  }
  return w;
}

Witness witness_from_json(const Json& j) {
  const std::string type = string_field(j, "type");
  if (type == "member") return Witness{MemberWitness{size_field(j, "index")}};
  if (type == "forcing") return Witness{forcing_witness_from_json(j)};
  if (type == "combination") return Witness{CombinationWitness{matrix_from_json(field(j, "p"))}};
  if (type == "sign_tree") {
    SignTreeWitness t;
    const Json& aux = field(j, "auxiliaries");
    if (!aux.is_array()) throw ParseError("auxiliaries must be an array");
    for (const auto& a : aux) t.auxiliaries.push_back(element_from_json(a));
    const Json& leaves = field(j, "leaves");
    if (!leaves.is_array()) throw ParseError("leaves must be an array");
    for (const auto& l : leaves) {
      SignLeaf leaf;
      const Json& signs = field(l, "signs");
      if (!signs.is_array()) throw ParseError("signs must be an array");
      for (const auto& s : signs) {
        if (!s.is_number_integer()) throw ParseError("signs must be integers");
        leaf.signs.push_back(s.get<int>());
      }
      leaf.forcing = forcing_witness_from_json(field(l, "forcing"));
      t.leaves.push_back(std::move(leaf));
    }
    return Witness{std::move(t)};
  }
  if (type == "prufer") return Witness{PruferWitness{subset_from_json(field(j, "x"))}};
  if (type == "per_element") {
    PerElementWitness p;
    const Json& items = field(j, "items");
    if (!items.is_array()) throw ParseError("items must be an array");
    for (const auto& item : items) p.items.push_back(witness_from_json(item));
    return Witness{std::move(p)};
  }
  throw ParseError("unknown witness type \"" + type + "\"");
}

}  // namespace lorenzen
