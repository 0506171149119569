// Copyright 2026 The schwarzmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCHWARZ_CLI_HPP
#define SCHWARZ_CLI_HPP

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "schwarz/error.hpp"
#include "schwarz/group.hpp"
#include "schwarz/hessian.hpp"
#include "schwarz/parser.hpp"
#include "schwarz/schwarz_solver.hpp"

namespace schwarz::cli {

using Json = nlohmann::ordered_json;

/// Exit status for checks that ran but did not pass.
inline constexpr int kChecksFailed = 1;
inline constexpr int kUsageError = 2;

struct CommandResult {
  int exit_code = 0;
  Json report;
};

struct Options {
  bool timing = true;
  std::size_t closure_cap = kDefaultClosureCap;
};

/// SCHWARZ_CLOSURE_CAP, when set, must be a positive integer.
inline std::size_t closure_cap_from_env() {
  const char* v = std::getenv("SCHWARZ_CLOSURE_CAP");
  if (v == nullptr || *v == '\0') return kDefaultClosureCap;
  char* end = nullptr;
  const unsigned long long cap = std::strtoull(v, &end, 10);
  if (*end != '\0' || cap == 0 || v[0] == '-') {
    throw Error(ErrorCode::InvalidProblem, std::string("SCHWARZ_CLOSURE_CAP must be a positive integer, got '") + v + "'");
  }
  return static_cast<std::size_t>(cap);
}

inline Json base_report() {
  return Json{{"status", "ok"}, {"code", nullptr}, {"coefficients", Json::array()}, {"verified", false},
              {"residuals", Json::object()}};
}

inline CommandResult error_result(const Error& e, Json report = base_report()) {
  report["status"] = "error";
  report["code"] = std::string(code_name(e.code()));
  report["verified"] = false;
  std::string msg = e.what();
  const std::string prefix = std::string(code_name(e.code())) + ": ";
  if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
  report["message"] = msg;
  return {exit_status(e.code()), std::move(report)};
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline Json read_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidProblem, "'" + path + "' is not valid JSON: " + e.what());
  }
}

namespace detail {

inline const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw Error(ErrorCode::InvalidProblem, std::string("missing '") + key + "'");
  return doc.at(key);
}

inline std::string require_string(const Json& v, const std::string& what) {
  if (!v.is_string()) throw Error(ErrorCode::InvalidProblem, what + " must be a string");
  return v.get<std::string>();
}

inline std::vector<std::string> require_strings(const Json& doc, const char* key) {
  const Json& v = require(doc, key);
  if (!v.is_array()) throw Error(ErrorCode::InvalidProblem, std::string("'") + key + "' must be an array");
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(require_string(x, std::string("entries of '") + key + "'"));
  return out;
}

inline bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

/// Number literal or string such as "-1/2".
inline Rational json_rational(const Json& v) {
  if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<long long>())));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidProblem, "bad rational '" + v.get<std::string>() + "'");
    }
  }
  throw Error(ErrorCode::InvalidProblem, "minimal polynomial coefficients must be integers or strings");
}

/// {"generator": "e", "minpoly": [c0, c1, ..., 1]} (ascending powers).
inline FieldPtr optional_field(const Json& doc) {
  if (!doc.is_object() || !doc.contains("field") || doc.at("field").is_null()) return nullptr;
  const Json& f = doc.at("field");
  const std::string gen = require_string(require(f, "generator"), "'field.generator'");
  if (!is_identifier(gen) || gen == "z") throw Error(ErrorCode::InvalidProblem, "bad field generator '" + gen + "'");
  const Json& mp = require(f, "minpoly");
  if (!mp.is_array() || mp.size() < 2) throw Error(ErrorCode::InvalidProblem, "'field.minpoly' needs degree >= 1");
  std::vector<Rational> coeffs;
  for (const auto& c : mp) coeffs.push_back(json_rational(c));
  if (sgn(coeffs.back()) == 0) throw Error(ErrorCode::InvalidProblem, "'field.minpoly' has zero leading coefficient");
  return NumberField::create(gen, std::move(coeffs));
}

inline Json render_field(const FieldPtr& f) {
  Json mp = Json::array();
  for (const auto& c : f->minpoly()) mp.push_back(render(c));
  return Json{{"generator", f->generator_name()}, {"minpoly", mp}};
}

inline void add_timing(Json& report, const Options& opt, std::chrono::steady_clock::time_point start) {
  if (!opt.timing) return;
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  report["timing_ms"] = ms.count();
}

}  // namespace detail

/// A problem file as read from disk.
struct ProblemFile {
  FieldPtr field;
  std::vector<std::string> variables;
  std::string order = "grevlex";
  std::vector<std::string> invariants;
  std::vector<std::string> targets;
};

inline ProblemFile problem_file_from_json(const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::InvalidProblem, "problem file must be a JSON object");
  ProblemFile pf;
  pf.field = detail::optional_field(doc);
  pf.variables = detail::require_strings(doc, "variables");
  if (doc.contains("order")) pf.order = detail::require_string(doc.at("order"), "'order'");
  pf.invariants = detail::require_strings(doc, "invariants");
  pf.targets = detail::require_strings(doc, "targets");
  std::set<std::string> seen;
  for (const auto& v : pf.variables) {
    if (!detail::is_identifier(v) || v == "z" || (pf.field && v == pf.field->generator_name())) {
      throw Error(ErrorCode::InvalidProblem, "bad variable name '" + v + "'");
    }
    if (!seen.insert(v).second) throw Error(ErrorCode::InvalidProblem, "duplicate variable '" + v + "'");
  }
  return pf;
}

/// Parses every expression; `order_override` replaces the file's order.
inline SchwarzProblem build_problem(const ProblemFile& pf, const std::optional<std::string>& order_override) {
  const std::string order_name = order_override.value_or(pf.order);
  MonomialOrder order = MonomialOrder::grevlex();
  try {
    order = MonomialOrder::parse(order_name);
  } catch (const Error&) {
    throw Error(ErrorCode::InvalidProblem, "unknown monomial order '" + order_name + "'");
  }
  SchwarzProblem p;
  p.ring = make_ring(pf.variables, order);
  for (const auto& s : pf.invariants) p.invariants.push_back(parse_polynomial(s, p.ring, pf.field));
  for (const auto& s : pf.targets) p.targets.push_back(parse_rational_function(s, pf.field));
  return p;
}

inline CommandResult run_solve(const std::string& path, const std::optional<std::string>& order, const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  Json report = base_report();
  try {
    SchwarzProblem problem = build_problem(problem_file_from_json(read_json_file(path)), order);
    SolveResult result = solve(problem);
    for (const auto& a : result.lode.coefficients) report["coefficients"].push_back(render(a, "z"));
    const std::size_t n = problem.n();
    for (std::size_t i = 0; i < n; ++i) {
      SPoly acc = result.vectors.Y[n][i];
      for (std::size_t k = 0; k < n; ++k) acc += result.lode.a(k) * result.vectors.Y[k][i];
      report["residuals"][problem.ring->names[i]] = render(normal_form(acc, result.basis));
    }
    report["verified"] = result.verified;
    if (!result.verified) report["status"] = "unverified";
    detail::add_timing(report, opt, start);
    return {result.verified ? 0 : kChecksFailed, report};
  } catch (const Error& e) {
    auto r = error_result(e, report);
    detail::add_timing(r.report, opt, start);
    return r;
  }
}

namespace detail {

/// act(g, p) - p for the first generator that moves p, else zero.
inline HPoly invariance_residual(const HPoly& p, const std::vector<GroupElement>& gens) {
  for (const auto& g : gens) {
    HPoly d = act(g, p) - p;
    if (!d.is_zero()) return d;
  }
  return HPoly(p.ring());
}

}  // namespace detail

inline CommandResult run_check_hessian(const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  Json report = base_report();
  try {
    const auto& h = hessian_data();
    const auto& inv = h.invariants;
    Json& res = report["residuals"];
    const NFElem e = h.epsilon, w = h.omega;
    res["epsilon_minpoly"] = render(e.pow(6) + e.pow(3) + NFElem(1));
    res["omega_relation"] = render(w * w + w + NFElem(1));
    res["det_V_minus_1"] = render(h.V.determinant() - NFElem(1));
    res["jacobian_identity"] = render(check_jacobian_identity());
    for (Syzygy s : {Syzygy::T36, Syzygy::T36Factored, Syzygy::T18, Syzygy::T24}) {
      res[syzygy_name(s)] = render(check_syzygy(s));
    }
    res["T36_forms"] = render(check_t36_forms());
    const auto h72 = h72_generators();
    const auto f36 = f36_generators();
    const std::vector<std::pair<std::string, const HPoly*>> h72_checks{
        {"F6", &inv.F6}, {"R", &inv.R}, {"F12", &inv.F12}};
    for (const auto& [name, p] : h72_checks) res["H72_invariance_" + name] = render(detail::invariance_residual(*p, h72));
    res["H72_invariance_Phi6^2"] = render(detail::invariance_residual(inv.Phi6.pow(2), h72));
    const std::vector<std::pair<std::string, const HPoly*>> f36_checks{
        {"F6", &inv.F6}, {"Phi6", &inv.Phi6}, {"R", &inv.R}, {"F12", &inv.F12}, {"Psi12", &inv.Psi12}};
    for (const auto& [name, p] : f36_checks) res["F36_invariance_" + name] = render(detail::invariance_residual(*p, f36));
    Phi6Factorization f = factor_phi6();
    res["Phi6_factorization"] = render(f.first * f.second - inv.Phi6);

    bool ok = true;
    for (const auto& [k, v] : res.items()) ok = ok && v == "0";

    Json facts = Json::object();
    auto chi = semi_invariant_character(inv.Phi6, h72);
    Json chi_json = Json::array();
    bool nontrivial = false, order_two = chi.has_value();
    if (chi) {
      for (const auto& c : *chi) {
        chi_json.push_back(render(c));
        nontrivial = nontrivial || c != NFElem(1);
        order_two = order_two && c * c == NFElem(1);
      }
    }
    ok = ok && nontrivial && order_two;
    facts["Phi6_H72_character"] = chi_json;
    facts["Phi6_factor_roots"] = Json::array({render(f.a), render(f.b)});
    facts["Phi6_factor_field"] = detail::render_field(f.field);
    const HPoly printed = check_syzygy(Syzygy::T24AsPrinted);
    facts["T24_as_printed_residual"] =
        printed == HPoly(inv.ring, NFElem(120)) * inv.Psi12.pow(2) ? "120*Psi12^2" : render(printed);
    report["facts"] = facts;
    report["verified"] = ok;
    if (!ok) report["status"] = "failed";
    detail::add_timing(report, opt, start);
    return {ok ? 0 : kChecksFailed, report};
  } catch (const Error& e) {
    auto r = error_result(e, report);
    detail::add_timing(r.report, opt, start);
    return r;
  }
}

/// {"field": {...}, "generators": [[[entry, ...], ...], ...]}, entries as numbers or expressions in the generator.
inline std::vector<GroupElement> generators_from_json(const Json& doc) {
  FieldPtr field = detail::optional_field(doc);
  const Json& gens = detail::require(doc, "generators");
  if (!gens.is_array() || gens.empty()) throw Error(ErrorCode::InvalidProblem, "'generators' must be a nonempty array");
  std::vector<GroupElement> out;
  for (const auto& g : gens) {
    if (!g.is_array() || g.empty()) throw Error(ErrorCode::InvalidProblem, "each generator must be a matrix");
    std::vector<std::vector<NFElem>> rows;
    for (const auto& row : g) {
      if (!row.is_array() || row.size() != g.size()) throw Error(ErrorCode::InvalidProblem, "generators must be square");
      std::vector<NFElem> r;
      for (const auto& x : row) {
        if (x.is_number_integer()) r.emplace_back(Rational(Integer(std::to_string(x.get<long long>()))));
        else r.push_back(parse_constant(detail::require_string(x, "matrix entries"), field));
      }
      rows.push_back(std::move(r));
    }
    out.emplace_back(Matrix<NFElem>::from_rows(std::move(rows)));
  }
  return out;
}

inline CommandResult run_group(const std::optional<std::string>& preset, const std::optional<std::string>& file,
                               const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  Json report = base_report();
  try {
    Json facts = Json::object();
    if (preset) {
      if (*preset != "h216" && *preset != "h72" && *preset != "f36") {
        throw Error(ErrorCode::InvalidProblem, "unknown preset '" + *preset + "'");
      }
      HessianGroups g = build_groups(opt.closure_cap);
      const MatrixGroup& chosen = *preset == "h216" ? g.h216 : *preset == "h72" ? g.h72 : g.f36;
      report["group"] = *preset;
      report["order"] = chosen.order();
      report["degree"] = chosen.degree();
      report["generators"] = chosen.generators().size();
      if (*preset == "h216") {
        facts["H72_index"] = *subgroup_index(g.h72, g.h216);
        facts["H72_normal"] = is_normal_subgroup(g.h72, g.h216);
      } else if (*preset == "h72") {
        facts["index_in_H216"] = *subgroup_index(g.h72, g.h216);
        facts["normal_in_H216"] = is_normal_subgroup(g.h72, g.h216);
        facts["F36_index"] = *subgroup_index(g.f36, g.h72);
        facts["F36_normal"] = is_normal_subgroup(g.f36, g.h72);
      } else {
        facts["index_in_H72"] = *subgroup_index(g.f36, g.h72);
        facts["normal_in_H72"] = is_normal_subgroup(g.f36, g.h72);
      }
      bool ok = true;
      for (const auto& [k, v] : facts.items()) {
        if (v.is_boolean()) ok = ok && v.get<bool>();
      }
      facts["det_generators_one"] = true;
      for (const auto& x : chosen.generators()) {
        if (x.determinant() != NFElem(1)) facts["det_generators_one"] = false;
      }
      report["facts"] = facts;
      report["verified"] = ok;
      if (!ok) report["status"] = "failed";
      detail::add_timing(report, opt, start);
      return {ok ? 0 : kChecksFailed, report};
    }
    MatrixGroup g = closure(generators_from_json(read_json_file(*file)), opt.closure_cap);
    report["group"] = "file";
    report["order"] = g.order();
    report["degree"] = g.degree();
    report["generators"] = g.generators().size();
    bool special = true;
    for (const auto& x : g.generators()) special = special && x.determinant() == NFElem(1);
    facts["det_generators_one"] = special;
    report["facts"] = facts;
    report["verified"] = true;
    detail::add_timing(report, opt, start);
    return {0, report};
  } catch (const Error& e) {
    auto r = error_result(e, report);
    detail::add_timing(r.report, opt, start);
    return r;
  }
}

/// {"field": optional, "f6": ..., "r9": ..., "f12": ..., "phi6sq": ...}, polynomials in z.
inline CommandResult run_obstruct(const std::string& path, const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  Json report = base_report();
  try {
    const Json doc = read_json_file(path);
    FieldPtr field = detail::optional_field(doc);
    auto poly = [&](const char* key) {
      return parse_univariate(detail::require_string(detail::require(doc, key), std::string("'") + key + "'"), field);
    };
    const ZPoly f6 = poly("f6"), r9 = poly("r9"), f12 = poly("f12"), phi = poly("phi6sq");
    try {
      ObstructionReport o = obstruction_analysis(f6, r9, f12, phi);
      report["residuals"]["relation"] = render(o.relation_residual);
      report["verdict"] = verdict_name(o.verdict);
      Json w = Json::object();
      for (const auto& [name, factors] : o.witnesses) {
        Json list = Json::array();
        for (const auto& [f, k] : factors) list.push_back(Json{{"factor", render(f)}, {"multiplicity", k}});
        w[name] = list;
      }
      report["witnesses"] = w;
      report["verified"] = true;
    } catch (const NotOnQuotientCurveError& e) {
      report["residuals"]["relation"] = render(e.residual());
      throw;
    }
    detail::add_timing(report, opt, start);
    return {0, report};
  } catch (const Error& e) {
    auto r = error_result(e, report);
    detail::add_timing(r.report, opt, start);
    return r;
  }
}

inline std::string dump(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace schwarz::cli

#endif  // SCHWARZ_CLI_HPP
