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

#pragma once

#include <optional>
#include <vector>

#include "albertine/matrix.hpp"
#include "albertine/variety.hpp"

namespace albertine {

/// chi_i: spectral radius of the i-th exterior power of rational_rep(alpha).
double cohomological_degree(const VarietyModel& model, const Endomorphism& alpha, int i);

/// |pi_1| >= ... >= |pi_g| for the conjugate-pair representatives of the
/// exact characteristic polynomial.
std::vector<double> pair_moduli(const VarietyModel& model, const Endomorphism& alpha);

/// lambda_k as |pi_1|^2 ... |pi_k|^2.
double numerical_degree_closed(const VarietyModel& model, const Endomorphism& alpha, int k);

struct TracePoint {
  unsigned m = 0;
  double value = 0.0;
};

struct ConvergenceTrace {
  int index = 0;
  std::vector<TracePoint> points;  // m strictly increasing
  double target = 0.0;

  [[nodiscard]] double last() const { return points.empty() ? 0.0 : points.back().value; }
  [[nodiscard]] double relative_gap() const;
};

/// The m values visited by the limit estimators: every m up to 32, then
/// powers of two, then m_max itself.
std::vector<unsigned> limit_schedule(unsigned m_max);

/// (binom(g,k) (alpha^m)^* H^k . H^{g-k} / H^g)^{1/m} from the exact oracle,
/// over limit_schedule(m_max). Target is numerical_degree_closed. g <= 5.
ConvergenceTrace numerical_degree_limit(const VarietyModel& model, const Endomorphism& alpha, int k,
                                        unsigned m_max);

/// sigma_i(A^m)^{1/m} for every i, from log sigma_1 of (wedge^i A)^m.
/// Powers are formed by binary exponentiation with a running scale so that
/// nothing overflows; targets are the sorted eigenvalue moduli of A.
std::vector<ConvergenceTrace> sv_limit(const MatC& a, unsigned m_max);

/// log sigma_1(B^m), computed without overflow.
double log_top_singular_value_of_power(const MatC& b, unsigned m);

struct PolarizedCheck {
  int n = 0;
  int g = 0;
  std::vector<double> lambda;     // closed form, k = 0..g
  std::vector<double> chi_even;   // chi_2k
  std::vector<Rational> oracle;   // (n^*H)^k . H^{g-k} / H^g; empty when g > 6
  bool pass = false;
};

/// Multiplication by n is polarized with q = n^2; expects lambda_k = chi_2k
/// = q^k exactly and the oracle ratio to equal q^k.
PolarizedCheck polarized_check(const VarietyModel& model, int n);

struct DinhRow {
  int i = 0;
  double chi_squared = 0.0;
  double max_product = 0.0;  // max over p + q = i of lambda_p lambda_q
  double relative_gap = 0.0;
  bool pass = false;
};

std::vector<DinhRow> dinh_check(const VarietyModel& model, const Endomorphism& alpha, double tol = 1e-7);

struct NormComparison {
  int k = 0;
  double spectral_norm = 0.0;   // sigma_1 of wedge^{2k} M
  double sqrt_rho_rosati = 0.0; // rho(wedge^{2k} rep(alpha^dagger alpha))^{1/2}
  double relative_gap = 0.0;
  bool pass = false;
};

NormComparison norm_comparison(const VarietyModel& model, const Endomorphism& alpha, int k, double tol = 1e-7);

struct DegreeRow {
  int k = 0;
  double chi_2k = 0.0;
  double lambda_closed = 0.0;
  double theorem_a_gap = 0.0;
  std::optional<Rational> normalized_intersection;  // binom(g,k) ratio at m = 1
  std::optional<ConvergenceTrace> limit;            // for k >= 1 when g <= 5
};

struct DegreeTolerances {
  double theorem_a = 1e-9;
  double limit = 0.05;
};

struct DegreeReport {
  int g = 0;
  std::vector<DegreeRow> rows;     // k = 0..g
  std::vector<double> chi_odd;     // chi_1, chi_3, ..., chi_{2g-1}
  Int degree;
  bool theorem_a = false;
  bool endpoints = false;          // chi_0 = lambda_0 = 1, chi_2g = lambda_g = deg
  bool log_concave = false;
  /// Every limit estimate within tolerance of its target. Advisory: limits
  /// with repeated pair moduli converge like c^{1/m}.
  bool limits = false;

  [[nodiscard]] bool pass() const { return theorem_a && endpoints && log_concave; }
};

/// m_max = 0 skips the limit estimates.
DegreeReport degree_report(const VarietyModel& model, const Endomorphism& alpha, unsigned m_max,
                           const DegreeTolerances& tol = {});

}  // namespace albertine
