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

#include "albertine/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "albertine/linalg.hpp"

namespace albertine {

PolyC to_complex(const PolyZ& p) {
  std::vector<Complex> c;
  for (const auto& x : p.coefficients()) c.emplace_back(to_double(x), 0.0);
  return PolyC(std::move(c));
}

PolyC to_complex(const PolyG& p) {
  std::vector<Complex> c;
  for (const auto& x : p.coefficients()) c.push_back(albertine::to_complex(x));
  return PolyC(std::move(c));
}

PolyC to_complex(const PolyQ& p) {
  std::vector<Complex> c;
  for (const auto& x : p.coefficients()) c.emplace_back(to_double(x), 0.0);
  return PolyC(std::move(c));
}

PolyQ to_rational(const PolyZ& p) {
  std::vector<Rational> c;
  for (const auto& x : p.coefficients()) c.emplace_back(x);
  return PolyQ(std::move(c));
}

PolyC conj(const PolyC& p) {
  std::vector<Complex> c;
  for (const auto& x : p.coefficients()) c.push_back(std::conj(x));
  return PolyC(std::move(c));
}

PolyG conj(const PolyG& p) {
  std::vector<GaussInt> c;
  for (const auto& x : p.coefficients()) c.push_back(albertine::conj(x));
  return PolyG(std::move(c));
}

PolyZ real_part_exact(const PolyG& p) {
  std::vector<Int> c;
  for (const auto& x : p.coefficients()) {
    if (!x.is_real()) throw Error("polynomial has a non-real Gaussian coefficient");
    c.push_back(x.re);
  }
  return PolyZ(std::move(c));
}

std::string to_string(const PolyZ& p) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i) os << ", ";
    os << p.coefficients()[i];
  }
  os << "]";
  return os.str();
}

namespace {

template <class T>
T divide_by_count(const T& x, int k) {
  if constexpr (std::is_same_v<T, Complex>) {
    return x / static_cast<double>(k);
  } else {
    return exact_div(x, Int(k));
  }
}

template <class T>
Poly<T> faddeev_leverrier(const Matrix<T>& a) {
  if (!a.square()) throw ShapeError("characteristic polynomial of non-square matrix " + a.shape());
  const std::size_t n = a.rows();
  std::vector<T> c(n + 1, T(0));
  c[n] = T(1);
  Matrix<T> mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    const Matrix<T> amk = a * mk;
    T tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += amk(i, i);
    c[n - k] = -divide_by_count(tr, static_cast<int>(k));
  }
  return Poly<T>(std::move(c));
}

}  // namespace

PolyZ char_poly_exact(const MatZ& m) { return faddeev_leverrier(m); }
PolyG char_poly_exact(const MatG& m) { return faddeev_leverrier(m); }
PolyC char_poly_float(const MatC& m) { return faddeev_leverrier(m); }

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {PolyQ(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    const Rational f = rem[static_cast<std::size_t>(i)] / bc.back();
    quo[static_cast<std::size_t>(i - db)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= f * bc[static_cast<std::size_t>(j)];
  }
  return {PolyQ(std::move(quo)), PolyQ(std::move(rem))};
}

namespace {

PolyQ make_monic(const PolyQ& p) {
  if (p.is_zero()) return p;
  const Rational lead = p.leading();
  std::vector<Rational> c = p.coefficients();
  for (auto& x : c) x /= lead;
  return PolyQ(std::move(c));
}

PolyQ exact_quotient(const PolyQ& a, const PolyQ& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error("inexact polynomial division");
  return q;
}

PolyZ primitive_integer(const PolyQ& p) {
  Int lcm_den = 1;
  for (const auto& x : p.coefficients()) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  std::vector<Int> c;
  Int g = 0;
  for (const auto& x : p.coefficients()) {
    c.push_back(numerator(x) * (lcm_den / denominator(x)));
    g = boost::multiprecision::gcd(g, c.back());
  }
  if (g == 0) return PolyZ();
  if (c.back() < 0) g = -g;
  for (auto& x : c) x /= g;
  return PolyZ(std::move(c));
}

}  // namespace

PolyQ gcd(const PolyQ& a, const PolyQ& b) {
  PolyQ x = a;
  PolyQ y = b;
  while (!y.is_zero()) {
    PolyQ r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

std::vector<PolyZ> squarefree_decomposition(const PolyZ& p) {
  if (p.degree() < 1) return {};
  const PolyQ f = make_monic(to_rational(p));
  const PolyQ fp = f.derivative();
  const PolyQ a0 = gcd(f, fp);
  PolyQ b = exact_quotient(f, a0);
  PolyQ c = exact_quotient(fp, a0);
  PolyQ d = c - b.derivative();
  std::vector<PolyZ> out;
  while (b.degree() > 0) {
    const PolyQ ai = gcd(b, d);
    b = exact_quotient(b, ai);
    c = exact_quotient(d, ai);
    d = c - b.derivative();
    out.push_back(primitive_integer(ai));
  }
  return out;
}

std::vector<Complex> roots(const PolyC& p) {
  const int deg = p.degree();
  if (deg < 0) throw Error("roots of the zero polynomial");
  if (deg == 0) return {};
  const auto& c = p.coefficients();
  const Complex lead = c.back();
  if (deg == 1) return {-c[0] / lead};
  const auto n = static_cast<std::size_t>(deg);
  MatC companion(n, n);
  for (std::size_t i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < n; ++i) companion(i, n - 1) = -c[i] / lead;
  std::vector<Complex> rs = eigenvalues(companion);
  const PolyC dp = p.derivative();
  // Newton only helps simple roots; on a scattered multiple root it drags
  // members apart unevenly and spoils the cluster mean.
  double top = 0.0;
  for (const auto& z : rs) top = std::max(top, std::abs(z));
  const double crowd = 1e-2 * (1.0 + top);
  for (auto& z : rs) {
    bool isolated = true;
    for (const auto& w : rs) {
      if (&w != &z && std::abs(w - z) <= crowd) isolated = false;
    }
    if (!isolated) continue;
    for (int it = 0; it < 8; ++it) {
      const Complex fz = p(z);
      const Complex dz = dp(z);
      if (std::abs(dz) == 0.0) break;
      const Complex step = fz / dz;
      const Complex next = z - step;
      // keep the step only if it does not increase |p|
      if (std::abs(p(next)) > std::abs(fz)) break;
      z = next;
      if (std::abs(step) <= 1e-17 * (1.0 + std::abs(z))) break;
    }
  }
  return rs;
}

PolyC from_roots(const std::vector<Complex>& rs) {
  PolyC out({Complex(1.0)});
  for (const auto& r : rs) out = out * PolyC::linear(r);
  return out;
}

double coefficient_residual(const PolyC& a, const PolyC& b) {
  const std::size_t len = std::max(a.coefficients().size(), b.coefficients().size());
  double worst = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    const Complex bi = b.coefficient(i);
    worst = std::max(worst, std::abs(a.coefficient(i) - bi) / std::max(1.0, std::abs(bi)));
  }
  return worst;
}

std::vector<Complex> ConjugatePairing::representatives() const {
  std::vector<Complex> out;
  for (const auto& pr : pairs)
    for (int i = 0; i < pr.multiplicity; ++i) out.push_back(pr.root);
  return out;
}

PolyC ConjugatePairing::half() const { return from_roots(representatives()); }

PolyC ConjugatePairing::expand() const {
  const PolyC h = half();
  return h * conj(h);
}

namespace {

Complex choose(Complex z, PairingConvention convention) {
  const bool upper = z.imag() > 0 || (z.imag() == 0 && z.real() >= 0);
  const bool want_upper = convention == PairingConvention::UpperHalfPlane;
  return upper == want_upper ? z : std::conj(z);
}

void sort_pairs(std::vector<PairedRoot>& pairs) {
  std::stable_sort(pairs.begin(), pairs.end(), [](const PairedRoot& x, const PairedRoot& y) {
    const double mx = std::abs(x.root);
    const double my = std::abs(y.root);
    if (mx != my) return mx > my;
    if (x.root.real() != y.root.real()) return x.root.real() > y.root.real();
    return x.root.imag() > y.root.imag();
  });
}

PolyC normalized(const PolyC& p) {
  const Complex lead = p.leading();
  std::vector<Complex> c = p.coefficients();
  for (auto& x : c) x /= lead;
  return PolyC(std::move(c));
}

void finish(ConjugatePairing& out, const PolyC& target, double tol) {
  sort_pairs(out.pairs);
  out.residual = coefficient_residual(out.expand(), normalized(target));
  if (!(out.residual <= tol)) {
    throw PairingFailure("reconstructed polynomial differs from input by " +
                         std::to_string(out.residual));
  }
}

void require_even_degree(int degree) {
  if (degree < 0 || degree % 2 != 0) {
    throw PairingFailure("conjugate pairing needs an even-degree polynomial, got degree " +
                         std::to_string(degree));
  }
}

}  // namespace

ConjugatePairing conjugate_pairing(const PolyZ& p, double tol, PairingConvention convention) {
  require_even_degree(p.degree());
  ConjugatePairing out;
  const auto factors = squarefree_decomposition(p);
  for (std::size_t idx = 0; idx < factors.size(); ++idx) {
    const int mult = static_cast<int>(idx) + 1;
    const PolyZ& f = factors[idx];
    if (f.degree() < 1) continue;
    int upper = 0;
    int lower = 0;
    for (const Complex& z : roots(to_complex(f))) {
      const double real_tol = 1e-8 * (1.0 + std::abs(z));
      if (std::abs(z.imag()) <= real_tol) {
        if (mult % 2 != 0) {
          throw PairingFailure("real root " + std::to_string(z.real()) + " has odd multiplicity " +
                               std::to_string(mult));
        }
        out.pairs.push_back({Complex(z.real(), 0.0), mult / 2});
      } else if (z.imag() > 0) {
        ++upper;
        out.pairs.push_back({choose(z, convention), mult});
      } else {
        ++lower;
      }
    }
    if (upper != lower) throw PairingFailure("non-real roots are not closed under conjugation");
  }
  finish(out, to_complex(p), tol);
  return out;
}

ConjugatePairing conjugate_pairing(const PolyC& p, double tol, PairingConvention convention) {
  require_even_degree(p.degree());
  ConjugatePairing out;
  const auto rs = roots(p);
  double top = 0.0;
  for (const auto& z : rs) top = std::max(top, std::abs(z));
  const double radius = tol * (1.0 + top);
  const auto groups = defect_clusters(rs, radius, 1.0 + top);
  std::vector<bool> used(groups.size(), false);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (used[i]) continue;
    const auto& [mean, count] = groups[i];
    if (std::abs(mean.imag()) <= radius) {
      if (count % 2 != 0) {
        throw PairingFailure("real root " + std::to_string(mean.real()) + " has odd multiplicity " +
                             std::to_string(count));
      }
      used[i] = true;
      out.pairs.push_back({Complex(mean.real(), 0.0), count / 2});
      continue;
    }
    std::size_t partner = groups.size();
    for (std::size_t j = 0; j < groups.size(); ++j) {
      if (j != i && !used[j] && groups[j].second == count &&
          std::abs(groups[j].first - std::conj(mean)) <= 2.0 * radius) {
        partner = j;
        break;
      }
    }
    if (partner == groups.size()) {
      throw PairingFailure("root (" + std::to_string(mean.real()) + ", " + std::to_string(mean.imag()) +
                           ") has no conjugate partner");
    }
    used[i] = used[partner] = true;
    const Complex avg = 0.5 * (mean + std::conj(groups[partner].first));
    out.pairs.push_back({choose(avg, convention), count});
  }
  finish(out, p, tol);
  return out;
}

double elementary_symmetric(std::size_t k, std::span<const double> values) {
  if (k > values.size()) throw Error("elementary_symmetric: k exceeds the number of values");
  std::vector<double> e(k + 1, 0.0);
  e[0] = 1.0;
  for (double x : values)
    for (std::size_t j = k; j >= 1; --j) e[j] += x * e[j - 1];
  return e[k];
}

Int elementary_symmetric(std::size_t k, std::span<const Int> values) {
  if (k > values.size()) throw Error("elementary_symmetric: k exceeds the number of values");
  std::vector<Int> e(k + 1, Int(0));
  e[0] = 1;
  for (const Int& x : values)
    for (std::size_t j = k; j >= 1; --j) e[j] += x * e[j - 1];
  return e[k];
}

PolyQ scale_roots(const PolyZ& p, unsigned n) {
  if (n == 0) throw Error("scale factor must be positive");
  const int deg = p.degree();
  std::vector<Rational> c;
  for (int i = 0; i <= deg; ++i) {
    const Int num = p.coefficients()[static_cast<std::size_t>(i)] * boost::multiprecision::pow(Int(n), static_cast<unsigned>(i));
    c.emplace_back(Rational(num, boost::multiprecision::pow(Int(n), static_cast<unsigned>(deg))));
  }
  return PolyQ(std::move(c));
}

PolyC scale_roots(const PolyC& p, unsigned n) {
  if (n == 0) throw Error("scale factor must be positive");
  const int deg = p.degree();
  std::vector<Complex> c;
  for (int i = 0; i <= deg; ++i) {
    c.push_back(p.coefficients()[static_cast<std::size_t>(i)] * std::pow(static_cast<double>(n), i - deg));
  }
  return PolyC(std::move(c));
}

PolyQ scale_char_poly(const PolyZ& p, unsigned n) {
  if (p.degree() < 0 || p.degree() % 2 != 0) throw Error("characteristic polynomial must have even degree");
  return scale_roots(p, n);
}

PolyC scale_char_poly(const PolyC& p, unsigned n) {
  if (p.degree() < 0 || p.degree() % 2 != 0) throw Error("characteristic polynomial must have even degree");
  return scale_roots(p, n);
}

}  // namespace albertine
