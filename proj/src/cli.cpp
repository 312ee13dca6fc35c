/*
 * Copyright 2026 The Albertine Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "albertine/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "albertine/albert.hpp"
#include "albertine/dynamics.hpp"
#include "albertine/model_io.hpp"
#include "albertine/oracle.hpp"

namespace albertine {

using nlohmann::json;

namespace {

constexpr const char* kSchemaVersion = "1";

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json poly_to_json(const PolyZ& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(int_to_json(c));
  return out;
}

json poly_to_json(const PolyC& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(complex_to_json(c));
  return out;
}

json rational_to_json(const Rational& q) {
  if (denominator(q) == 1) return int_to_json(numerator(q));
  return q.str();
}

json trace_to_json(const ConvergenceTrace& t) {
  json pts = json::array();
  for (const auto& p : t.points) pts.push_back(json::array({p.m, p.value}));
  return {{"index", t.index}, {"target", t.target}, {"final", t.last()}, {"relative_gap", t.relative_gap()},
          {"points", std::move(pts)}};
}

json header(const char* kind) { return {{"schema", std::string("albertine.") + kind + "/" + kSchemaVersion}}; }

void emit(std::ostream& out, const json& doc) { out << dump_json(doc); }

void write_trace(const std::filesystem::path& dir, const std::string& name, const ConvergenceTrace& t) {
  std::filesystem::create_directories(dir);
  std::ofstream f(dir / name);
  if (!f) throw InputError("cannot write " + (dir / name).string());
  write_trace_csv(f, t);
}

// Loads a model that must be valid and carry an endomorphism.
ModelFile load_checked(const RunConfig& cfg) {
  ModelFile mf = load_model(cfg.input);
  const auto violations = validate(mf.model);
  if (!violations.empty()) {
    throw InputError(cfg.input.string() + ": invalid model (factor " + std::to_string(violations.front().factor) +
                     ": " + violations.front().rule + ")");
  }
  if (!mf.has_endomorphism()) throw InputError(cfg.input.string() + ": no endomorphism given");
  return mf;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

double parse_double(std::string_view s) {
  const std::string str(trim(s));
  char* end = nullptr;
  const double v = std::strtod(str.c_str(), &end);
  if (str.empty() || end != str.c_str() + str.size() || !(v > 0.0) || !std::isfinite(v)) {
    throw InputError("bad tolerance value \"" + str + "\"");
  }
  return v;
}

json case_trace_json(const AlbertFactorization& af) {
  json out = json::array();
  for (const auto& c : af.case_trace) {
    out.push_back({{"factor", c.factor},
                   {"case", to_string(c.albert_case)},
                   {"multiplicity", c.multiplicity},
                   {"halved", c.halved},
                   {"paired", c.paired}});
  }
  return out;
}

template <class F>
bool guarded(json& checks, const char* name, F&& f) {
  try {
    const bool ok = f();
    checks[name] = ok;
    return ok;
  } catch (const Error& e) {
    checks[name] = false;
    checks[std::string(name) + "_error"] = e.what();
    return false;
  }
}

}  // namespace

Tolerances parse_tolerances(std::string_view text, Tolerances base) {
  if (text.find('=') == std::string_view::npos) {
    const double v = parse_double(text);
    return {v, v, v, v, v};
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw InputError("bad tolerance item \"" + std::string(item) + "\"");
    const std::string_view key = trim(item.substr(0, eq));
    const double v = parse_double(item.substr(eq + 1));
    if (key == "pairing") {
      base.pairing = v;
    } else if (key == "theorem_a") {
      base.theorem_a = v;
    } else if (key == "dinh") {
      base.dinh = v;
    } else if (key == "norm") {
      base.norm = v;
    } else if (key == "limit") {
      base.limit = v;
    } else {
      throw InputError("unknown tolerance \"" + std::string(key) + "\"");
    }
    pos = comma + 1;
  }
  return base;
}

Tolerances tolerances_from_env() {
  const char* env = std::getenv("ALBERTINE_TOL");
  if (env == nullptr || *env == '\0') return {};
  return parse_tolerances(env);
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  const ModelFile mf = load_model(cfg.input);
  const auto violations = validate(mf.model);
  json doc = header("validate");
  doc["valid"] = violations.empty();
  doc["g"] = mf.model.dimension();
  json vs = json::array();
  for (const auto& v : violations) vs.push_back({{"factor", v.factor}, {"rule", v.rule}});
  doc["violations"] = std::move(vs);
  if (violations.empty()) {
    json ms = json::array();
    for (const auto& f : mf.model.factors) ms.push_back(multiplicity(f));
    doc["multiplicities"] = std::move(ms);
  }
  emit(out, doc);
  return violations.empty() ? kPass : kVerificationFailure;
}

int cmd_albert(const RunConfig& cfg, std::ostream& out) {
  const ModelFile mf = load_checked(cfg);
  json doc = header("albert");
  doc["g"] = mf.model.dimension();
  doc["char_poly"] = poly_to_json(full_char_poly_exact(mf.model, mf.alpha));
  try {
    const AlbertFactorization af = albert_poly(mf.model, mf.alpha, PairingConvention::UpperHalfPlane, cfg.tol.pairing);
    doc["albert_poly"] = poly_to_json(af.p_albert);
    doc["case_trace"] = case_trace_json(af);
    doc["exact"] = af.exact();
    if (af.integral) doc["albert_poly_integral"] = poly_to_json(*af.integral);
    doc["residual"] = af.residual;
  } catch (const PairingFailure& e) {
    doc["error"] = e.what();
    emit(out, doc);
    return kVerificationFailure;
  }
  emit(out, doc);
  return kPass;
}

int cmd_degrees(const RunConfig& cfg, std::ostream& out) {
  if (cfg.m_max == 1) throw InputError("--m-max must be 0 or at least 2");
  const ModelFile mf = load_checked(cfg);
  const DegreeReport rep =
      degree_report(mf.model, mf.alpha, cfg.m_max, DegreeTolerances{cfg.tol.theorem_a, cfg.tol.limit});
  json doc = header("degrees");
  doc["g"] = rep.g;
  doc["degree"] = int_to_json(rep.degree);
  doc["m_max"] = cfg.m_max;
  json rows = json::array();
  for (const auto& r : rep.rows) {
    json row = {{"k", r.k}, {"chi_2k", r.chi_2k}, {"lambda_closed", r.lambda_closed},
                {"theorem_a_gap", r.theorem_a_gap}};
    if (r.normalized_intersection) row["normalized_intersection"] = rational_to_json(*r.normalized_intersection);
    if (r.limit) {
      row["lambda_limit"] = r.limit->last();
      row["lambda_limit_m"] = r.limit->points.back().m;
      row["limit_gap"] = r.limit->relative_gap();
      if (cfg.traces) write_trace(*cfg.traces, "lambda_" + std::to_string(r.k) + ".csv", *r.limit);
    }
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  doc["chi_odd"] = rep.chi_odd;
  doc["pass"] = {{"theorem_a", rep.theorem_a},
                 {"endpoints", rep.endpoints},
                 {"log_concave", rep.log_concave},
                 {"limits", rep.limits}};
  emit(out, doc);
  return rep.pass() ? kPass : kVerificationFailure;
}

json verify_case(const VarietyModel& model, const Endomorphism& alpha, const Tolerances& tol, bool& pass) {
  const int g = model.dimension();
  json checks = json::object();
  pass = true;
  pass &= guarded(checks, "albert_pairing", [&] {
    return albert_poly(model, alpha, PairingConvention::UpperHalfPlane, tol.pairing).residual <= tol.pairing;
  });
  DegreeReport rep;
  const bool have_report = guarded(checks, "degree_report", [&] {
    rep = degree_report(model, alpha, 0, DegreeTolerances{tol.theorem_a, tol.limit});
    return true;
  });
  pass &= have_report;
  if (have_report) {
    checks["theorem_a"] = rep.theorem_a;
    checks["endpoints"] = rep.endpoints;
    checks["log_concave"] = rep.log_concave;
    pass &= rep.pass();
  }
  if (g <= static_cast<int>(kMaxOracleGenus)) {
    pass &= guarded(checks, "corollary_b", [&] { return verify_corollary_b(model, alpha).pass; });
  }
  pass &= guarded(checks, "dinh", [&] {
    bool ok = true;
    for (const auto& row : dinh_check(model, alpha, tol.dinh)) ok &= row.pass;
    return ok;
  });
  pass &= guarded(checks, "norm", [&] {
    bool ok = true;
    for (int k = 0; k <= g; ++k) ok &= norm_comparison(model, alpha, k, tol.norm).pass;
    return ok;
  });
  pass &= guarded(checks, "polarized", [&] { return polarized_check(model, 2).pass; });
  return checks;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  struct Case {
    VarietyModel model;
    Endomorphism alpha;
  };
  std::vector<Case> cases;
  if (cfg.random) {
    for (unsigned i = 0; i < cfg.count; ++i) {
      const std::uint64_t s = cfg.seed + i;
      const Characteristic ch = i % 2 == 0 ? Characteristic::Zero : Characteristic::Positive;
      VarietyModel m = random_model(s, 4, ch);
      Endomorphism a = random_endomorphism(s, m, 3);
      cases.push_back({std::move(m), std::move(a)});
    }
  } else {
    ModelFile mf = load_checked(cfg);
    cases.push_back({std::move(mf.model), std::move(mf.alpha)});
  }

  std::vector<json> results(cases.size());
  std::vector<char> passed(cases.size(), 0);
  const auto n = static_cast<std::ptrdiff_t>(cases.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    bool ok = false;
    json checks = verify_case(cases[idx].model, cases[idx].alpha, cfg.tol, ok);
    results[idx] = {{"index", idx},
                    {"label", cases[idx].alpha.label},
                    {"g", cases[idx].model.dimension()},
                    {"checks", std::move(checks)},
                    {"pass", ok}};
    passed[idx] = ok ? 1 : 0;
  }

  std::size_t total_pass = 0;
  for (char p : passed) total_pass += static_cast<std::size_t>(p);
  json doc = header("verify");
  doc["cases"] = results;
  doc["passed"] = total_pass;
  doc["total"] = cases.size();
  emit(out, doc);
  return total_pass == cases.size() ? kPass : kVerificationFailure;
}

int cmd_sv_limit(const RunConfig& cfg, std::ostream& out) {
  const MatC a = load_matrix(cfg.input);
  if (cfg.m_max < 1) throw InputError("--m-max must be positive");
  const auto traces = sv_limit(a, cfg.m_max);
  json doc = header("sv-limit");
  doc["dimension"] = a.rows();
  doc["m_max"] = cfg.m_max;
  json ts = json::array();
  for (const auto& t : traces) {
    ts.push_back(trace_to_json(t));
    if (cfg.traces) write_trace(*cfg.traces, "sigma_" + std::to_string(t.index) + ".csv", t);
  }
  doc["traces"] = std::move(ts);
  emit(out, doc);
  return kPass;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "validate") return cmd_validate(cfg, out);
    if (cfg.command == "albert") return cmd_albert(cfg, out);
    if (cfg.command == "degrees") return cmd_degrees(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    if (cfg.command == "sv-limit") return cmd_sv_limit(cfg, out);
    err << "unknown command " << cfg.command << "\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ShapeError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailure;
  }
}

}  // namespace albertine
