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

#include <cstdint>
#include <span>
#include <vector>

#include "albertine/matrix.hpp"
#include "albertine/polynomial.hpp"
#include "albertine/variety.hpp"

namespace albertine {

/// Antisymmetric 2g x 2g form on first cohomology, exact over Z[i].
class AlternatingForm {
 public:
  AlternatingForm() = default;
  /// Throws OracleError unless m is square, even-sized and antisymmetric.
  explicit AlternatingForm(MatG m);

  [[nodiscard]] const MatG& matrix() const { return m_; }
  [[nodiscard]] std::size_t size() const { return m_.rows(); }
  [[nodiscard]] std::size_t genus() const { return m_.rows() / 2; }
  const GaussInt& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  friend AlternatingForm operator+(const AlternatingForm& a, const AlternatingForm& b) {
    return AlternatingForm(a.m_ + b.m_);
  }
  friend AlternatingForm operator-(const AlternatingForm& a, const AlternatingForm& b) {
    return AlternatingForm(a.m_ - b.m_);
  }
  friend AlternatingForm operator*(const GaussInt& s, const AlternatingForm& a) {
    return AlternatingForm(s * a.m_);
  }
  friend bool operator==(const AlternatingForm& a, const AlternatingForm& b) { return a.m_ == b.m_; }

 private:
  MatG m_;
};

/// The principal polarization J in the basis of rational_rep: copies of
/// Types I/II are paired, each iota block of Type III and each (A, conj A)
/// copy of Type IV carries [[0, I], [-I, 0]]. Entries are 0 and +-1 and
/// Pf(J) = +-1.
AlternatingForm standard_polarization(const VarietyModel& model);

/// True iff J^{-1} M^T J = rational_rep(rosati(alpha)) holds exactly.
bool polarization_compatible(const VarietyModel& model, const AlternatingForm& j, const Endomorphism& alpha);

/// (M^power)^T w M^power.
AlternatingForm pullback_form(const MatG& m, const AlternatingForm& w, unsigned power = 1);

/// Perfect matchings of {0, ..., 2g-1}: each is a list of g pairs (i < j)
/// together with the sign of the permutation (i1 j1 i2 j2 ...).
struct Matching {
  int sign = 1;
  std::vector<std::pair<std::uint8_t, std::uint8_t>> pairs;
};
const std::vector<Matching>& perfect_matchings(std::size_t g);

inline constexpr std::size_t kMaxOracleGenus = 6;

namespace kernels {

// Coefficient of e_1 ^ ... ^ e_2g in w_1 ^ ... ^ w_g: a signed sum over
// perfect matchings of the permanent of W[t][p] = w_t(i_p, j_p).
GaussInt matching_sum_serial(std::span<const AlternatingForm> forms);
GaussInt matching_sum_parallel(std::span<const AlternatingForm> forms);

}  // namespace kernels

/// w_1 ^ ... ^ w_g on the standard volume; multilinear and symmetric in the
/// slots, equal to g! Pf(w) when all slots hold w. Only ratios of these
/// values are meaningful. Throws OracleError for g > 6.
GaussInt mixed_intersection(std::span<const AlternatingForm> forms);

/// Pf(w) = mixed_intersection(w, ..., w) / g!.
GaussInt pfaffian(const AlternatingForm& w);

/// (alpha^m)^* H^k . H^{g-k} / H^g, exact.
struct IntersectionRatio {
  int k = 0;
  unsigned m = 1;
  Int numerator;
  Int denominator;

  [[nodiscard]] Rational value() const { return make_rational(numerator, denominator); }
  [[nodiscard]] double approx() const { return to_double(value()); }
};

IntersectionRatio intersection_ratio(const VarietyModel& model, const Endomorphism& alpha, int k, unsigned m = 1);

/// binom(g, k) * ratio; for integral alpha this is the integer e_k(sigma^2).
Rational normalized_intersection(const VarietyModel& model, const Endomorphism& alpha, int k, unsigned m = 1);

struct CorollaryBCheck {
  std::vector<Rational> oracle;   // binom(g,k) * ratio(k, m = 1)
  std::vector<double> closed;     // e_k of squared pair singular values
  Int degree;
  bool pass = false;
};

/// Compares both sides coefficientwise; the closed side must round to the
/// oracle's integers and c_g must equal deg alpha.
CorollaryBCheck verify_corollary_b(const VarietyModel& model, const Endomorphism& alpha);

/// (nH - alpha^* H)^g / H^g = Pf(n J - alpha^* J) / Pf(J), exact.
Rational pfaffian_albert_value(const VarietyModel& model, const Endomorphism& alpha, const Int& n);

struct PfaffianIdentityCheck {
  std::vector<Rational> samples;  // at n = 0 .. 2g+1
  PolyQ interpolated;
  PolyZ albert;                   // P^A of alpha^dagger alpha, rounded from the closed form
  bool squares_to_char_poly = false;
  bool pass = false;
};

/// Interpolates n -> Pf(nJ - alpha^*J)/Pf(J) at n = 0..2g+1 and compares it
/// with the Albert polynomial of alpha^dagger alpha; also checks that the
/// samples square to P_{alpha^dagger alpha}(n).
PfaffianIdentityCheck verify_pfaffian_identity(const VarietyModel& model, const Endomorphism& alpha);

/// Newton interpolation through (x_i, y_i) over Q.
PolyQ interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace albertine
