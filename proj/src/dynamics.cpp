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

#include "albertine/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "albertine/exterior.hpp"
#include "albertine/linalg.hpp"
#include "albertine/oracle.hpp"

namespace albertine {

namespace {

double rel_gap(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), std::numeric_limits<double>::min()});
  return std::abs(a - b) / scale;
}

double int_pow(double base, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Keeps a matrix as exp(log_scale) * m with max |m_ij| = 1.
struct Scaled {
  MatC m;
  double log_scale = 0.0;

  void normalize() {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) s = std::max(s, std::abs(m(i, j)));
    }
    if (s == 0.0) {
      log_scale = -HUGE_VAL;
      return;
    }
    m *= Complex(1.0 / s);
    log_scale += std::log(s);
  }
};

Scaled multiply(const Scaled& a, const Scaled& b) {
  Scaled out{a.m * b.m, a.log_scale + b.log_scale};
  out.normalize();
  return out;
}

}  // namespace

double ConvergenceTrace::relative_gap() const { return rel_gap(last(), target); }

double cohomological_degree(const VarietyModel& model, const Endomorphism& alpha, int i) {
  const int g = model.dimension();
  if (i < 0 || i > 2 * g) throw ShapeError("cohomological degree index out of range");
  if (i == 0) return 1.0;
  return spectral_radius(exterior_power(rational_rep(model, alpha), static_cast<std::size_t>(i)));
}

std::vector<double> pair_moduli(const VarietyModel& model, const Endomorphism& alpha) {
  const ConjugatePairing pairing = conjugate_pairing(full_char_poly_exact(model, alpha));
  std::vector<double> out;
  for (const auto& pi : pairing.representatives()) out.push_back(std::abs(pi));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double numerical_degree_closed(const VarietyModel& model, const Endomorphism& alpha, int k) {
  const std::vector<double> moduli = pair_moduli(model, alpha);
  if (k < 0 || k > static_cast<int>(moduli.size())) throw ShapeError("numerical degree index out of range");
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= moduli[static_cast<std::size_t>(i)] * moduli[static_cast<std::size_t>(i)];
  return r;
}

std::vector<unsigned> limit_schedule(unsigned m_max) {
  std::vector<unsigned> out;
  for (unsigned m = 1; m <= std::min(m_max, 32u); ++m) out.push_back(m);
  for (unsigned m = 64; m != 0 && m <= m_max; m *= 2) out.push_back(m);
  if (out.empty() || out.back() != m_max) out.push_back(m_max);
  return out;
}

namespace {

// x^{1/m}, returned exactly when x is a perfect m-th power.
double mth_root(const Rational& x, unsigned m) {
  if (x <= 0) throw OracleError("intersection number is not positive");
  const double v = std::exp(log_abs(x) / m);
  if (denominator(x) == 1 && v < 1e15) {
    const Int c = round_to_int(v);
    if (pow(c, m) == numerator(x)) return to_double(c);
  }
  return v;
}

}  // namespace

ConvergenceTrace numerical_degree_limit(const VarietyModel& model, const Endomorphism& alpha, int k,
                                        unsigned m_max) {
  const int g = model.dimension();
  if (g > 5) throw OracleError("numerical_degree_limit supports g <= 5");
  if (k < 1 || k > g) throw ShapeError("numerical_degree_limit needs 1 <= k <= g");
  if (m_max < 2) throw ShapeError("m_max must be at least 2");
  ConvergenceTrace trace;
  trace.index = k;
  trace.target = numerical_degree_closed(model, alpha, k);
  for (unsigned m : limit_schedule(m_max)) {
    trace.points.push_back({m, mth_root(normalized_intersection(model, alpha, k, m), m)});
  }
  return trace;
}

double log_top_singular_value_of_power(const MatC& b, unsigned m) {
  if (!b.square()) throw ShapeError("power of a non-square matrix");
  Scaled result{MatC::identity(b.rows()), 0.0};
  Scaled base{b, 0.0};
  base.normalize();
  for (unsigned e = m; e != 0; e >>= 1) {
    if (e & 1u) result = multiply(result, base);
    if (e > 1) base = multiply(base, base);
    if (!std::isfinite(result.log_scale) || !std::isfinite(base.log_scale)) return -HUGE_VAL;
  }
  const double s = singular_values(result.m).front();
  return s > 0.0 ? result.log_scale + std::log(s) : -HUGE_VAL;
}

std::vector<ConvergenceTrace> sv_limit(const MatC& a, unsigned m_max) {
  if (!a.square() || a.rows() == 0) throw ShapeError("sv_limit needs a nonempty square matrix");
  if (m_max < 1) throw ShapeError("m_max must be positive");
  const std::size_t n = a.rows();

  std::vector<unsigned> schedule;
  for (unsigned m = 1; m != 0 && m <= m_max; m *= 2) schedule.push_back(m);
  if (schedule.back() != m_max) schedule.push_back(m_max);

  std::vector<double> moduli;
  for (const auto& z : eigenvalues(a)) moduli.push_back(std::abs(z));
  std::sort(moduli.begin(), moduli.end(), std::greater<>());

  std::vector<MatC> wedges;
  for (std::size_t i = 1; i <= n; ++i) wedges.push_back(exterior_power(a, i));

  std::vector<ConvergenceTrace> traces(n);
  for (std::size_t i = 0; i < n; ++i) {
    traces[i].index = static_cast<int>(i + 1);
    traces[i].target = moduli[i];
  }
  for (unsigned m : schedule) {
    double prev = 0.0;  // log sigma_1 of the 0-th exterior power
    for (std::size_t i = 0; i < n; ++i) {
      const double cur = log_top_singular_value_of_power(wedges[i], m);
      const double v = std::isfinite(cur) && std::isfinite(prev) ? std::exp((cur - prev) / m) : 0.0;
      traces[i].points.push_back({m, v});
      prev = cur;
    }
  }
  return traces;
}

PolarizedCheck polarized_check(const VarietyModel& model, int n) {
  if (n < 1) throw ShapeError("polarized_check expects n >= 1");
  PolarizedCheck out;
  out.n = n;
  out.g = model.dimension();
  const Endomorphism alpha = scalar_endomorphism(model, n);
  const double q = static_cast<double>(n) * n;
  out.pass = true;
  for (int k = 0; k <= out.g; ++k) {
    const double expected = int_pow(q, k);
    out.lambda.push_back(numerical_degree_closed(model, alpha, k));
    out.chi_even.push_back(cohomological_degree(model, alpha, 2 * k));
    if (out.lambda.back() != expected || out.chi_even.back() != expected) out.pass = false;
    if (out.g <= static_cast<int>(kMaxOracleGenus)) {
      out.oracle.push_back(intersection_ratio(model, alpha, k).value());
      if (out.oracle.back() != Rational(pow(Int(n) * n, static_cast<unsigned>(k)))) out.pass = false;
    }
  }
  return out;
}

std::vector<DinhRow> dinh_check(const VarietyModel& model, const Endomorphism& alpha, double tol) {
  const int g = model.dimension();
  std::vector<double> lambda;
  for (int k = 0; k <= g; ++k) lambda.push_back(numerical_degree_closed(model, alpha, k));
  std::vector<DinhRow> rows;
  for (int i = 0; i <= 2 * g; ++i) {
    DinhRow row;
    row.i = i;
    const double chi = cohomological_degree(model, alpha, i);
    row.chi_squared = chi * chi;
    for (int p = std::max(0, i - g); p <= std::min(i, g); ++p) {
      row.max_product = std::max(row.max_product,
                                 lambda[static_cast<std::size_t>(p)] * lambda[static_cast<std::size_t>(i - p)]);
    }
    row.relative_gap = rel_gap(row.chi_squared, row.max_product);
    row.pass = row.relative_gap <= tol;
    rows.push_back(row);
  }
  return rows;
}

NormComparison norm_comparison(const VarietyModel& model, const Endomorphism& alpha, int k, double tol) {
  const int g = model.dimension();
  if (k < 0 || k > g) throw ShapeError("norm_comparison needs 0 <= k <= g");
  NormComparison out;
  out.k = k;
  const auto deg = static_cast<std::size_t>(2 * k);
  out.spectral_norm = singular_values(exterior_power(rational_rep(model, alpha), deg)).front();
  const MatC sym = rational_rep(model, compose(rosati(alpha), alpha));
  out.sqrt_rho_rosati = std::sqrt(spectral_radius(exterior_power(sym, deg)));
  out.relative_gap = rel_gap(out.spectral_norm, out.sqrt_rho_rosati);
  out.pass = out.relative_gap <= tol;
  return out;
}

DegreeReport degree_report(const VarietyModel& model, const Endomorphism& alpha, unsigned m_max,
                           const DegreeTolerances& tol) {
  DegreeReport rep;
  rep.g = model.dimension();
  rep.degree = degree(model, alpha);
  const std::vector<double> moduli = pair_moduli(model, alpha);

  rep.theorem_a = true;
  rep.limits = true;
  double lambda = 1.0;
  for (int k = 0; k <= rep.g; ++k) {
    DegreeRow row;
    row.k = k;
    if (k > 0) lambda *= moduli[static_cast<std::size_t>(k - 1)] * moduli[static_cast<std::size_t>(k - 1)];
    row.lambda_closed = lambda;
    row.chi_2k = cohomological_degree(model, alpha, 2 * k);
    row.theorem_a_gap = rel_gap(row.chi_2k, row.lambda_closed);
    if (row.theorem_a_gap > tol.theorem_a) rep.theorem_a = false;
    if (rep.g <= static_cast<int>(kMaxOracleGenus)) row.normalized_intersection = normalized_intersection(model, alpha, k);
    if (k >= 1 && rep.g <= 5 && m_max >= 1) {
      row.limit = numerical_degree_limit(model, alpha, k, m_max);
      if (row.limit->relative_gap() > tol.limit) rep.limits = false;
    }
    rep.rows.push_back(std::move(row));
  }
  for (int i = 1; i < 2 * rep.g; i += 2) rep.chi_odd.push_back(cohomological_degree(model, alpha, i));

  const double deg = std::abs(to_double(rep.degree));
  const DegreeRow& first = rep.rows.front();
  const DegreeRow& last = rep.rows.back();
  rep.endpoints = first.chi_2k == 1.0 && first.lambda_closed == 1.0 &&
                  rel_gap(last.chi_2k, deg) <= tol.theorem_a && rel_gap(last.lambda_closed, deg) <= tol.theorem_a;

  rep.log_concave = true;
  for (std::size_t k = 1; k + 1 < rep.rows.size(); ++k) {
    const double mid = rep.rows[k].lambda_closed;
    const double side = rep.rows[k - 1].lambda_closed * rep.rows[k + 1].lambda_closed;
    if (mid * mid < side * (1.0 - 1e-12)) rep.log_concave = false;
  }
  return rep;
}

}  // namespace albertine
