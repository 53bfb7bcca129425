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

#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "lorenzen/axioms.hpp"
#include "lorenzen/certificate.hpp"
#include "lorenzen/dedekind.hpp"
#include "lorenzen/regularise.hpp"
#include "lorenzen/serialize.hpp"

namespace lorenzen::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 20260101;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string rel = "finest";
  std::string group;
  std::string domain;
  std::string file;
  std::string lhs;
  std::string rhs_set;
  std::string rhs;
  std::string xs;
  std::string ideal;
  std::string ideal2;
  std::string op;
  std::string certificate;
  std::int64_t depth = 6;
  std::int64_t bound = 2;
  std::int64_t samples = 200;
  std::int64_t box = 4;
  std::int64_t n_max = 4;
  std::uint64_t seed = kDefaultSeed;
  bool no_timing = false;
};

class Stopwatch {
 public:
  double elapsed_ms() const {
    const auto d = std::chrono::steady_clock::now() - start_;
    return std::round(std::chrono::duration<double, std::milli>(d).count() * 1000.0) / 1000.0;
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<Integer> integer_list(const std::string& s) {
  std::vector<Integer> out;
  for (const auto& part : split(s, ',')) {
    Integer n;
    if (part.empty() || n.set_str(part, 10) != 0) throw ParseError("not an integer: \"" + part + "\"");
    out.push_back(n);
  }
  return out;
}

std::size_t rank_of(const std::string& s) {
  const auto v = integer_list(s);
  if (v.size() != 1 || v[0] < 1 || !v[0].fits_ulong_p()) throw ParseError("bad rank \"" + s + "\"");
  return v[0].get_ui();
}

// product:2, trivial:2, semigroup:2,3, matrix:1,1;0,1 or a JSON descriptor.
OrderedGroup parse_group(const std::string& s) {
  if (s.empty()) throw UsageError("this relation needs --group");
  if (s.front() == '{') return group_from_json(parse_json_text(s));
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("group \"" + s + "\" has no ':'");
  const std::string kind = s.substr(0, colon), rest = s.substr(colon + 1);
  if (kind == "product") return OrderedGroup::product(rank_of(rest));
  if (kind == "trivial") return OrderedGroup::trivial(rank_of(rest));
  if (kind == "semigroup") return OrderedGroup::semigroup(integer_list(rest));
  if (kind == "matrix") {
    IntMatrix rows;
    for (const auto& row : split(rest, ';')) rows.push_back(integer_list(row));
    return OrderedGroup::matrix(std::move(rows));
  }
  throw ParseError("unknown group kind \"" + kind + "\"");
}

// poly:2, semigroup:2,3, laurent:2, extended:2:1,-1 or a JSON descriptor.
MonomialDomain parse_domain(const std::string& s) {
  if (s.empty()) throw UsageError("this command needs --domain");
  if (s.front() == '{') return domain_from_json(parse_json_text(s));
  const auto parts = split(s, ':');
  const std::string& kind = parts[0];
  if (kind == "poly" && parts.size() == 2) return MonomialDomain::poly(rank_of(parts[1]));
  if (kind == "semigroup" && parts.size() == 2) {
    return MonomialDomain::semigroup(integer_list(parts[1]));
  }
  if (kind == "laurent" && parts.size() == 2) {
    const auto p = integer_list(parts[1]);
    if (p.size() != 1) throw ParseError("laurent takes one period");
    return MonomialDomain::laurent(p[0]);
  }
  if (kind == "extended" && parts.size() == 3) {
    const std::size_t rank = rank_of(parts[1]);
    return MonomialDomain::extended_poly(rank, GroupElement(integer_list(parts[2])));
  }
  throw ParseError("unknown domain \"" + s + "\"");
}

RelationHandle build_relation(const std::string& name, const Options& o) {
  if (name == "finest") return RelationHandle::finest(parse_group(o.group));
  if (name == "dedekind") return RelationHandle::dedekind(parse_domain(o.domain));
  auto strip = [&](const std::string& prefix) -> std::optional<std::string> {
    if (name.rfind(prefix, 0) == 0) return name.substr(prefix.size());
    return std::nullopt;
  };
  if (auto rest = strip("regular-")) return RelationHandle::regularisation(build_relation(*rest, o), o.depth);
  if (auto rest = strip("prufer-")) return RelationHandle::prufer(build_relation(*rest, o), o.bound);
  std::optional<std::string> base;
  if (name == "forced") base = o.group.empty() && !o.domain.empty() ? "dedekind" : "finest";
  if (auto rest = strip("forced-")) base = *rest;
  if (base) {
    if (o.xs.empty()) throw UsageError("forced relations need --x");
    const RelationHandle b = build_relation(*base, o);
    const Json xj = parse_json_text(o.xs);
    std::vector<GroupElement> xs;
    if (xj.is_array() && !xj.empty() && xj[0].is_array()) {
      for (const auto& x : xj) xs.push_back(element_from_json(x, b.group().rank()));
    } else {
      xs.push_back(element_from_json(xj, b.group().rank()));
    }
    return RelationHandle::forced(b, std::move(xs), o.depth);
  }
  throw UsageError("unknown relation \"" + name + "\"");
}

// A bare integer or a flat list stands for rank-1 generators.
FiniteSubset generators(const Json& j, std::size_t rank) {
  return subset_from_json(j.is_array() ? j : Json::array({j}), rank);
}

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Json read_input(const std::string& path, std::istream& in) {
  std::string text;
  if (path.empty() || path == "-") {
    text = read_all(in);
  } else {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    text = read_all(f);
  }
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw ParseError("empty input");
  return parse_json_text(text);
}

class Command {
 public:
  Command(const Options& o, std::istream& in) : o_(o), in_(in) {}

  // Fields given on the command line win over the JSON input.
  const Json& input() {
    if (!input_) input_ = read_input(o_.file, in_);
    return *input_;
  }

  Json value(const std::string& flag, const char* key) {
    if (!flag.empty()) return parse_json_text(flag);
    if (inline_data()) throw UsageError(std::string("missing --") + key);
    const Json& j = input();
    if (!j.contains(key)) throw UsageError(std::string("missing --") + key);
    return j.at(key);
  }

  RelationHandle relation() {
    if (o_.group.empty() && o_.domain.empty()) {
      const Json& j = input();
      if (j.contains("relation")) return relation_from_json(j.at("relation"));
    }
    return build_relation(o_.rel, o_);
  }

  MonomialDomain domain() {
    if (o_.domain.empty() && input().contains("domain")) return domain_from_json(input().at("domain"));
    return parse_domain(o_.domain);
  }

  bool inline_data() const { return !o_.lhs.empty() || !o_.ideal.empty(); }

 private:
  const Options& o_;
  std::istream& in_;
  std::optional<Json> input_;
};

Json envelope(const char* verdict, Json witness, Json bound, Json relation, Json certificate) {
  Json out;
  out["verdict"] = verdict;
  out["witness"] = std::move(witness);
  out["bound_used"] = std::move(bound);
  out["relation"] = std::move(relation);
  out["certificate"] = std::move(certificate);
  out["elapsed_ms"] = 0;
  return out;
}

Json decision_envelope(const Decision& d, const RelationHandle& rel, Json certificate) {
  Json dj = to_json(d);
  return envelope(to_string(d.verdict), dj["witness"], dj["bound_used"], to_json(rel),
                  std::move(certificate));
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return kYes;
    case Verdict::No:
      return kNo;
    case Verdict::Unknown:
      return kUnknown;
  }
  return kUnknown;
}

Json flat_subset(const FiniteSubset& a) {
  if (a.rank() != 1) return to_json(a);
  Json out = Json::array();
  for (const auto& e : a) out.push_back(to_json(e[0]));
  return out;
}

struct Outcome {
  Json body;
  int code;
};

Outcome cmd_entail(const Options& o, std::istream& in) {
  Command c(o, in);
  if (!c.inline_data()) c.input();
  const RelationHandle rel = c.relation();
  const std::size_t rank = rel.group().rank();
  const FiniteSubset lhs = subset_from_json(c.value(o.lhs, "A"), rank);
  const bool multi = !o.rhs_set.empty() || (o.rhs.empty() && !c.inline_data() && c.input().contains("B"));
  if (multi) {
    if (rel.kind() != RelationHandle::Kind::Regularisation) {
      throw UsageError("a set of conclusions needs a regular-* relation");
    }
    const Sequent s(lhs, subset_from_json(c.value(o.rhs_set, "B"), rank));
    const Decision d = regular_entails(rel.base(), s, rel.depth());
    return {decision_envelope(d, rel, sequent_certificate(rel, s, d)), exit_for(d.verdict)};
  }
  const GroupElement rhs = element_from_json(c.value(o.rhs, "b"), rank);
  const Decision d = sc_entails(rel, lhs, rhs);
  return {decision_envelope(d, rel, sc_certificate(rel, lhs, rhs, d)), exit_for(d.verdict)};
}

Outcome cmd_closure(const Options& o, std::istream& in) {
  Command c(o, in);
  if (!c.inline_data()) c.input();
  const MonomialDomain dom = c.domain();
  const MonomialIdeal ideal(dom, generators(c.value(o.ideal, "ideal"), dom.rank()));
  const MonomialIdeal closure = integral_closure(ideal);
  Json body = envelope("yes", nullptr, nullptr, to_json(RelationHandle::dedekind(dom)),
                       closure_certificate(ideal, closure));
  body["closure"] = flat_subset(closure.generators());
  body["ideal"] = to_json(ideal);
  return {body, kYes};
}

Divisor divisor_from_json(const MonomialDomain& dom, const Json& j) {
  if (j.is_object()) {
    return Divisor(MonomialIdeal(dom, subset_from_json(j.at("pos"), dom.rank())),
                   MonomialIdeal(dom, subset_from_json(j.at("neg"), dom.rank())));
  }
  return basic_divisor(dom, generators(j, dom.rank()));
}

Outcome cmd_divisor(const Options& o, std::istream& in) {
  Command c(o, in);
  if (!c.inline_data()) c.input();
  const MonomialDomain dom = c.domain();
  std::string op = o.op;
  std::vector<Divisor> args;
  if (!o.ideal.empty()) {
    for (const auto* text : {&o.ideal, &o.ideal2}) {
      if (!text->empty()) {
        args.push_back(basic_divisor(dom, generators(parse_json_text(*text), dom.rank())));
      }
    }
  } else {
    const Json& j = c.input();
    if (op.empty() && j.contains("op")) op = j.at("op").get<std::string>();
    const Json& ds = j.at("divisors");
    if (!ds.is_array()) throw ParseError("divisors must be an array");
    for (const auto& d : ds) args.push_back(divisor_from_json(dom, d));
  }
  if (op.empty()) op = "basic";
  const Json rel = to_json(RelationHandle::dedekind(dom));

  const std::size_t arity = (op == "basic" || op == "neg") ? 1 : 2;
  if (args.size() != arity) {
    throw UsageError("--op " + op + " takes " + std::to_string(arity) + " divisor(s), got " +
                     std::to_string(args.size()));
  }
  if (op == "leq" || op == "eq") {
    auto direction = [](const Divisor& d1, const Divisor& d2) {
      const MonomialIdeal outer = integral_closure(ideal_product(d1.pos(), d2.neg()));
      const MonomialIdeal inner = ideal_product(d2.pos(), d1.neg());
      return std::make_pair(ideal_contains(outer, inner), std::make_pair(outer, inner));
    };
    std::vector<Json> parts;
    bool holds = true;
    const auto fwd = direction(args[0], args[1]);
    holds = fwd.first;
    if (holds) parts.push_back(containment_certificate(fwd.second.first, fwd.second.second));
    if (holds && op == "eq") {
      const auto back = direction(args[1], args[0]);
      holds = back.first;
      if (holds) parts.push_back(containment_certificate(back.second.first, back.second.second));
    }
    Json cert = nullptr;
    if (holds) cert = parts.size() == 1 ? parts.front() : conjunction_certificate(std::move(parts));
    return {envelope(holds ? "yes" : "no", nullptr, nullptr, rel, cert), holds ? kYes : kNo};
  }

  Divisor result = args[0];
  if (op == "neg") {
    result = divisor_neg(args[0]);
  } else if (op == "add") {
    result = divisor_add(args[0], args[1]);
  } else if (op == "sub") {
    result = divisor_sub(args[0], args[1]);
  } else if (op == "meet") {
    result = divisor_meet(args[0], args[1]);
  } else if (op == "join") {
    result = divisor_join(args[0], args[1]);
  } else if (op != "basic") {
    throw UsageError("unknown --op \"" + op + "\"");
  }
  Json body = envelope("yes", nullptr, nullptr, rel,
                       conjunction_certificate({closure_certificate(result.pos(), result.pos()),
                                                closure_certificate(result.neg(), result.neg())}));
  body["divisor"] = to_json(result);
  return {body, kYes};
}

Outcome cmd_axioms(const Options& o, std::istream& in) {
  Command c(o, in);
  const RelationHandle rel = c.relation();
  const SuiteReport report = rel.kind() == RelationHandle::Kind::Regularisation
                                 ? regular_axiom_suite(rel.base(), o.samples, o.seed, rel.depth())
                                 : axiom_suite_sc(rel, o.samples, o.seed);
  Json body = envelope(report.passed() ? "yes" : "no", nullptr, nullptr, to_json(rel), nullptr);
  body["report"] = to_json(report);
  body["seed"] = o.seed;
  return {body, report.passed() ? kYes : kNo};
}

Outcome cmd_lcd(const Options& o, std::istream&) {
  const OrderedGroup g = parse_group(o.group);
  const auto v = lcd_condition_violation(g, o.box, o.n_max);
  Json body = envelope(v ? "no" : "yes", nullptr, nullptr, to_json(RelationHandle::finest(g)),
                       v ? lcd_certificate(g, *v) : Json(nullptr));
  body["violation"] = v ? Json{{"element", to_json(v->element)}, {"multiplier", to_json(v->multiplier)}}
                        : Json(nullptr);
  return {body, v ? kNo : kYes};
}

Outcome cmd_agree(const Options& o, std::istream& in) {
  Command c(o, in);
  const RelationHandle rel = c.relation();
  const AgreementReport r = agreement_check(rel, o.samples, o.seed, AgreementBounds{o.bound, o.depth});
  Json dis = Json::array();
  for (const auto& [a, b] : r.disagreements) dis.push_back({{"A", to_json(a)}, {"b", to_json(b)}});
  Json body = envelope(r.passed() ? "yes" : "no", nullptr, nullptr, to_json(rel), nullptr);
  body["report"] = {{"trials", r.trials},
                    {"decided", r.decided},
                    {"agreements", r.agreements},
                    {"regular_unknown", r.regular_unknown},
                    {"prufer_unknown_regular_yes", r.prufer_unknown_regular_yes},
                    {"prufer_unknown_regular_no", r.prufer_unknown_regular_no},
                    {"disagreements", dis}};
  body["seed"] = o.seed;
  return {body, r.passed() ? kYes : kNo};
}

Outcome cmd_verify(const Options& o, std::istream& in) {
  const Json cert = read_input(o.certificate.empty() ? o.file : o.certificate, in);
  const VerifyResult r = verify_certificate(cert);
  Json rel = cert.is_object() && cert.contains("relation") ? cert["relation"] : Json(nullptr);
  Json body = envelope(r.valid ? "yes" : "no", nullptr, nullptr, rel, cert);
  body["valid"] = r.valid;
  body["reason"] = r.reason;
  return {body, r.valid ? kYes : kNo};
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--rel", o.rel,
                  "finest, dedekind, forced[-base], prufer-<base>, regular-<base>");
  sub->add_option("--group", o.group, "product:N, trivial:N, semigroup:g1,g2,.., matrix:r;r;..");
  sub->add_option("--domain", o.domain, "poly:N, semigroup:g1,g2,.., laurent:g, extended:N:x");
  sub->add_option("--depth", o.depth, "forcing / regularisation search depth");
  sub->add_option("--bound", o.bound, "Prufer search bound");
  sub->add_option("--x", o.xs, "forced element, or array of elements, JSON");
  sub->add_option("--file", o.file, "JSON input file ('-' for standard input)");
  sub->add_flag("--no-timing", o.no_timing, "report elapsed_ms as 0");
}

void add_suite(CLI::App* sub, Options& o) {
  sub->add_option("--samples", o.samples, "random instances per check");
  sub->add_option("--seed", o.seed, "random seed");
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact entailment, regularisation and divisor computations", "lorenzen"};
  app.require_subcommand(1);
  Options o;

  auto* entail = app.add_subcommand("entail", "decide A |> b, or A |- B for regular-* relations");
  add_common(entail, o);
  entail->add_option("--A", o.lhs, "left-hand set, JSON");
  entail->add_option("--B", o.rhs_set, "right-hand set, JSON (regular-* only)");
  entail->add_option("--b", o.rhs, "right-hand element, JSON");

  auto* closure = app.add_subcommand("closure", "integral closure of a monomial ideal");
  add_common(closure, o);
  closure->add_option("--ideal", o.ideal, "generators, JSON; a bare integer for rank 1");

  auto* divisor = app.add_subcommand("divisor", "arithmetic on divisors");
  add_common(divisor, o);
  divisor->add_option("--ideal", o.ideal, "ideal of the first basic divisor, JSON");
  divisor->add_option("--ideal2", o.ideal2, "ideal of the second basic divisor, JSON");
  divisor->add_option("--op", o.op, "basic, neg, add, sub, meet, join, leq, eq");

  auto* axioms = app.add_subcommand("axioms", "randomised axiom suite for a relation");
  add_common(axioms, o);
  add_suite(axioms, o);

  auto* lcd = app.add_subcommand("lcd-check", "search for 0 <= n a with a not positive");
  add_common(lcd, o);
  lcd->add_option("--box", o.box, "coordinate bound of the search box");
  lcd->add_option("--n-max", o.n_max, "largest multiplier");

  auto* agree = app.add_subcommand("agree", "compare the Prufer and regularisation constructions");
  add_common(agree, o);
  add_suite(agree, o);

  auto* verify = app.add_subcommand("verify", "check a certificate");
  verify->add_option("--certificate", o.certificate, "certificate file ('-' for standard input)");
  verify->add_option("--file", o.file, "alias of --certificate");
  verify->add_flag("--no-timing", o.no_timing, "report elapsed_ms as 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    const Stopwatch clock;
    Outcome result;
    if (*entail) {
      result = cmd_entail(o, in);
    } else if (*closure) {
      result = cmd_closure(o, in);
    } else if (*divisor) {
      result = cmd_divisor(o, in);
    } else if (*axioms) {
      result = cmd_axioms(o, in);
    } else if (*lcd) {
      result = cmd_lcd(o, in);
    } else if (*agree) {
      result = cmd_agree(o, in);
    } else {
      result = cmd_verify(o, in);
    }
    result.body["elapsed_ms"] = o.no_timing ? 0.0 : clock.elapsed_ms();
    out << result.body.dump() << "\n";
    return result.code;
  } catch (const UsageError& e) {
    err << "lorenzen: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalError& e) {
    err << "lorenzen: internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const BoundedRelationError& e) {
    err << "lorenzen: " << e.what() << "\n";
    return kUnknown;
  } catch (const Error& e) {
    err << "lorenzen: " << e.what() << "\n";
    return kMalformed;
  } catch (const Json::exception& e) {
    err << "lorenzen: malformed input: " << e.what() << "\n";
    return kMalformed;
  }
}

}  // namespace lorenzen::cli
