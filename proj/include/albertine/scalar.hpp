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

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace albertine {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes or dimensions that do not fit the requested operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An iterative eigensolver hit its iteration cap.
class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

/// Roots could not be grouped into conjugate pairs (odd real multiplicity or
/// reconstruction residual above tolerance).
class PairingFailure : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

/// Input outside the exact oracle's supported range, or an internal identity
/// of the oracle that failed to hold exactly.
class OracleError : public Error {
 public:
  using Error::Error;
};

/// Gaussian integer a + b i with arbitrary precision parts.
struct GaussInt {
  Int re;
  Int im;

  GaussInt() = default;
  GaussInt(Int r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussInt(int r) : re(r) {}             // NOLINT(google-explicit-constructor)
  GaussInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}

  GaussInt& operator+=(const GaussInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussInt& operator-=(const GaussInt& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussInt& operator*=(const GaussInt& o) {
    Int r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }

  friend GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
  friend GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
  friend GaussInt operator*(GaussInt a, const GaussInt& b) { return a *= b; }
  friend GaussInt operator-(const GaussInt& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussInt& a, const GaussInt& b) {
    return a.re == b.re && a.im == b.im;
  }

  [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }
  [[nodiscard]] bool is_real() const { return im == 0; }
  [[nodiscard]] Int norm() const { return re * re + im * im; }
};

inline GaussInt conj(const GaussInt& z) { return {z.re, -z.im}; }

/// Exact quotient a / b; throws when b does not divide a in Z[i].
inline GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
  const Int n = b.norm();
  if (n == 0) throw Error("division by zero Gaussian integer");
  const GaussInt p = a * conj(b);
  if (p.re % n != 0 || p.im % n != 0) throw Error("inexact Gaussian division");
  return {p.re / n, p.im / n};
}

inline GaussInt exact_div(const GaussInt& a, const Int& k) {
  if (a.re % k != 0 || a.im % k != 0) throw Error("inexact Gaussian division");
  return {a.re / k, a.im / k};
}

inline Int exact_div(const Int& a, const Int& b) {
  if (b == 0) throw Error("division by zero");
  if (a % b != 0) throw Error("inexact integer division");
  return a / b;
}

/// num / den; also accepts a negative den, which cpp_rational's own
/// two-argument constructor rejects.
inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw Error("zero denominator");
  return den < 0 ? Rational(Int(-num), Int(-den)) : Rational(num, den);
}

inline Int conj(const Int& x) { return x; }
inline double conj(double x) { return x; }
inline std::int64_t conj(std::int64_t x) { return x; }
using std::conj;

inline double to_double(const Int& x) { return x.convert_to<double>(); }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }
inline Complex to_complex(const GaussInt& z) { return {to_double(z.re), to_double(z.im)}; }

/// Natural log of |x| that survives magnitudes beyond the double range.
inline double log_abs(const Int& x) {
  if (x == 0) return -HUGE_VAL;
  Int a = abs(x);
  const auto bits = static_cast<long>(msb(a));
  if (bits < 1000) return std::log(to_double(a));
  const long shift = bits - 900;
  a >>= static_cast<unsigned>(shift);
  return std::log(to_double(a)) + static_cast<double>(shift) * std::log(2.0);
}

inline double log_abs(const Rational& q) {
  return log_abs(numerator(q)) - log_abs(denominator(q));
}

/// Nearest integer to a finite double.
inline Int round_to_int(double x) {
  if (!std::isfinite(x)) throw Error("cannot round a non-finite value");
  return Int(std::nearbyint(x));
}

}  // namespace albertine
