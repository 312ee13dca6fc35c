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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "albertine/matrix.hpp"

namespace albertine {

namespace detail {
inline bool is_zero_coeff(const GaussInt& x) { return x.is_zero(); }
template <class R>
bool is_zero_coeff(const R& x) {
  return x == R(0);
}
}  // namespace detail

/// Univariate polynomial with coefficients in ascending degree. Trailing
/// exact zeros are trimmed, so the zero polynomial has no coefficients and
/// degree -1.
template <class R>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }

  /// Monic linear factor t - root.
  static Poly linear(const R& root) { return Poly({R(-root), R(1)}); }

  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] const std::vector<R>& coefficients() const { return c_; }
  [[nodiscard]] R coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
  [[nodiscard]] R leading() const { return c_.empty() ? R(0) : c_.back(); }
  [[nodiscard]] bool monic() const { return !c_.empty() && c_.back() == R(1); }

  template <class X>
  [[nodiscard]] X operator()(const X& x) const {
    X acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<R> out(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(out));
  }
  friend Poly operator*(const R& s, const Poly& p) {
    std::vector<R> out(p.c_);
    for (auto& x : out) x = s * x;
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  [[nodiscard]] Poly pow(unsigned e) const {
    Poly result({R(1)});
    Poly base = *this;
    while (e > 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e > 0) base = base * base;
    }
    return result;
  }

  [[nodiscard]] Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<R> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = R(static_cast<int>(i)) * c_[i];
    return Poly(std::move(out));
  }

 private:
  void trim() {
    while (!c_.empty() && detail::is_zero_coeff(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
};

using PolyZ = Poly<Int>;
using PolyQ = Poly<Rational>;
using PolyG = Poly<GaussInt>;
using PolyC = Poly<Complex>;

PolyC to_complex(const PolyZ& p);
PolyC to_complex(const PolyG& p);
PolyC to_complex(const PolyQ& p);
PolyQ to_rational(const PolyZ& p);
PolyC conj(const PolyC& p);
PolyG conj(const PolyG& p);

/// Real integer polynomial from a Gaussian one; throws if any imaginary
/// part is nonzero.
PolyZ real_part_exact(const PolyG& p);

std::string to_string(const PolyZ& p);

/// det(tI - M) by Faddeev-LeVerrier in exact arithmetic; the divisions by
/// k are exact over Z and Z[i].
PolyZ char_poly_exact(const MatZ& m);
PolyG char_poly_exact(const MatG& m);

/// det(tI - M) by Faddeev-LeVerrier in complex floating point.
PolyC char_poly_float(const MatC& m);

/// Quotient and remainder over Q; the divisor must be nonzero.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);
/// Monic greatest common divisor over Q.
PolyQ gcd(const PolyQ& a, const PolyQ& b);

/// Yun's square-free decomposition: returns f_1, f_2, ... (primitive, with
/// positive leading coefficient) such that p = c * prod f_i^i. Factors that
/// are constant are returned as the polynomial 1.
std::vector<PolyZ> squarefree_decomposition(const PolyZ& p);

/// Roots of a polynomial via companion-matrix eigenvalues, then Newton
/// polishing against p. Accurate for simple roots.
std::vector<Complex> roots(const PolyC& p);

/// prod (t - r) over the given roots.
PolyC from_roots(const std::vector<Complex>& rs);

/// max_i |a_i - b_i| / max(1, |b_i|).
double coefficient_residual(const PolyC& a, const PolyC& b);

enum class PairingConvention {
  UpperHalfPlane,  // representative has Im >= 0
  LowerHalfPlane,  // representative has Im <= 0
};

struct PairedRoot {
  Complex root;
  int multiplicity = 0;
};

/// Root multiset split as {pi, conj(pi)} pairs. Each entry stands for
/// (t - pi)^mult (t - conj(pi))^mult; a real root of multiplicity 2k is
/// recorded as (r, k).
struct ConjugatePairing {
  std::vector<PairedRoot> pairs;  // sorted by modulus, largest first
  double residual = 0.0;

  /// Representatives repeated by multiplicity; length is half the degree.
  [[nodiscard]] std::vector<Complex> representatives() const;
  /// prod (t - pi)^mult.
  [[nodiscard]] PolyC half() const;
  /// prod (t - pi)^mult (t - conj(pi))^mult.
  [[nodiscard]] PolyC expand() const;
};

inline constexpr double kPairingTolerance = 1e-7;

/// Pairs the roots of an integer polynomial. Multiplicities come from the
/// exact square-free decomposition, so only simple roots are computed
/// numerically.
ConjugatePairing conjugate_pairing(const PolyZ& p, double tol = kPairingTolerance,
                                   PairingConvention convention = PairingConvention::UpperHalfPlane);

/// Pairs the roots of a floating polynomial; multiple roots are recovered
/// by single-linkage clustering with radius tol (1 + max root modulus).
ConjugatePairing conjugate_pairing(const PolyC& p, double tol = kPairingTolerance,
                                   PairingConvention convention = PairingConvention::UpperHalfPlane);

/// e_k of the values; e_0 = 1.
double elementary_symmetric(std::size_t k, std::span<const double> values);
Int elementary_symmetric(std::size_t k, std::span<const Int> values);

/// n^{-deg} p(n t): roots divided by n, monic preserved.
PolyQ scale_roots(const PolyZ& p, unsigned n);
PolyC scale_roots(const PolyC& p, unsigned n);

/// n^{-2g} P(n t) for a characteristic polynomial of even degree 2g.
PolyQ scale_char_poly(const PolyZ& p, unsigned n);
PolyC scale_char_poly(const PolyC& p, unsigned n);

}  // namespace albertine
