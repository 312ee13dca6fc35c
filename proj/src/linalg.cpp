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

#include "albertine/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace albertine {

MatC to_complex(const MatG& m) {
  return map_entries<GaussInt, Complex>(m, [](const GaussInt& z) { return albertine::to_complex(z); });
}

MatC to_complex(const MatZ& m) {
  return map_entries<Int, Complex>(m, [](const Int& x) { return Complex(to_double(x), 0.0); });
}

MatH to_quaternion(const MatHZ& m) {
  return map_entries<QuatInt, Quaternion>(m, [](const QuatInt& q) { return albertine::to_quaternion(q); });
}

double max_abs_diff(const MatC& a, const MatC& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("max_abs_diff of " + a.shape() + " and " + b.shape());
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) {
    worst = std::max(worst, std::abs(a.data()[k] - b.data()[k]));
  }
  return worst;
}

namespace {

template <class Q, class C, class Split>
Matrix<C> embed_impl(const Matrix<Q>& a, Split split) {
  if (!a.square()) throw ShapeError("quat_embed needs a square matrix, got " + a.shape());
  const std::size_t n = a.rows();
  Matrix<C> out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto [a1, a2] = split(a(i, j));
      out(i, j) = a1;
      out(i, n + j) = a2;
      out(n + i, j) = -conj(a2);
      out(n + i, n + j) = conj(a1);
    }
  }
  return out;
}

void reduce_to_hessenberg(MatC& h) {
  const std::size_t n = h.rows();
  if (n < 3) return;
  std::vector<Complex> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xnorm = 0.0;
    for (std::size_t r = k + 1; r < n; ++r) xnorm += std::norm(h(r, k));
    xnorm = std::sqrt(xnorm);
    if (xnorm == 0.0) continue;
    const Complex x0 = h(k + 1, k);
    const Complex phase = std::abs(x0) == 0.0 ? Complex(1.0) : x0 / std::abs(x0);
    const Complex alpha = -phase * xnorm;
    std::fill(v.begin(), v.end(), Complex(0.0));
    for (std::size_t r = k + 1; r < n; ++r) v[r] = h(r, k);
    v[k + 1] -= alpha;
    double vnorm = 0.0;
    for (std::size_t r = k + 1; r < n; ++r) vnorm += std::norm(v[r]);
    vnorm = std::sqrt(vnorm);
    if (vnorm == 0.0) continue;
    for (std::size_t r = k + 1; r < n; ++r) v[r] /= vnorm;
    // H <- (I - 2 v v*) H
    for (std::size_t c = k; c < n; ++c) {
      Complex s(0.0);
      for (std::size_t r = k + 1; r < n; ++r) s += std::conj(v[r]) * h(r, c);
      for (std::size_t r = k + 1; r < n; ++r) h(r, c) -= 2.0 * v[r] * s;
    }
    // H <- H (I - 2 v v*)
    for (std::size_t r = 0; r < n; ++r) {
      Complex s(0.0);
      for (std::size_t c = k + 1; c < n; ++c) s += h(r, c) * v[c];
      for (std::size_t c = k + 1; c < n; ++c) h(r, c) -= 2.0 * s * std::conj(v[c]);
    }
    for (std::size_t r = k + 2; r < n; ++r) h(r, k) = 0.0;
  }
}

struct Givens {
  double c = 1.0;
  Complex s{0.0};
};

// G = [[c, s], [-conj(s), c]] maps (x, y) to (r, 0).
Givens make_givens(Complex x, Complex y) {
  const double ax = std::abs(x);
  const double ay = std::abs(y);
  if (ay == 0.0) return {};
  if (ax == 0.0) return {0.0, std::conj(y) / ay};
  const double nrm = std::hypot(ax, ay);
  return {ax / nrm, x * std::conj(y) / (ax * nrm)};
}

// Eigenvalues of [[a, b], [c, d]], the larger-magnitude root first and the
// other from the determinant to avoid cancellation.
std::pair<Complex, Complex> eigen2x2(Complex a, Complex b, Complex c, Complex d) {
  const Complex half = 0.5 * (a + d);
  const Complex disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
  const Complex l1 = std::abs(half + disc) >= std::abs(half - disc) ? half + disc : half - disc;
  const Complex det = a * d - b * c;
  const Complex l2 = l1 == 0.0 ? Complex(0.0) : det / l1;
  return {l1, l2};
}

Complex wilkinson_shift(Complex a, Complex b, Complex c, Complex d) {
  const Complex tr_half = 0.5 * (a + d);
  const Complex det = a * d - b * c;
  const Complex disc = std::sqrt(tr_half * tr_half - det);
  const Complex l1 = tr_half + disc;
  const Complex l2 = tr_half - disc;
  return std::abs(l1 - d) < std::abs(l2 - d) ? l1 : l2;
}

}  // namespace

MatC quat_embed(const MatH& a) {
  return embed_impl<Quaternion, Complex>(a, [](const Quaternion& q) {
    return std::pair{Complex(q.a, q.b), Complex(q.c, q.d)};
  });
}

MatG quat_embed(const MatHZ& a) {
  return embed_impl<QuatInt, GaussInt>(a, [](const QuatInt& q) {
    return std::pair{GaussInt(q.a, q.b), GaussInt(q.c, q.d)};
  });
}

std::vector<Complex> eigenvalues(const MatC& m) {
  if (!m.square()) throw ShapeError("eigenvalues of non-square matrix " + m.shape());
  const std::size_t n = m.rows();
  std::vector<Complex> eig(n);
  if (n == 0) return eig;
  MatC h = m;
  reduce_to_hessenberg(h);

  double scale = 0.0;
  for (const auto& z : h.data()) scale = std::max(scale, std::abs(z));
  const double eps = std::numeric_limits<double>::epsilon();
  const std::size_t cap = 500 * n;
  std::size_t total = 0;
  std::size_t since_deflation = 0;
  std::vector<Givens> rot(n);

  std::size_t end = n;  // rows [0, end) are still active
  while (end > 0) {
    const std::size_t hi = end - 1;
    std::size_t lo = hi;
    while (lo > 0) {
      double ref = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
      if (ref == 0.0) ref = scale;
      if (std::abs(h(lo, lo - 1)) <= eps * ref) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      eig[hi] = h(hi, hi);
      end = hi;
      since_deflation = 0;
      continue;
    }
    if (lo + 1 == hi) {
      // a 2x2 window is solved directly; single-shift QR can stall on
      // nearly equal pairs
      const auto [l1, l2] = eigen2x2(h(lo, lo), h(lo, hi), h(hi, lo), h(hi, hi));
      eig[lo] = l1;
      eig[hi] = l2;
      end = lo;
      since_deflation = 0;
      continue;
    }
    if (++total > cap) {
      throw ConvergenceFailure("QR eigenvalue iteration did not converge within " +
                               std::to_string(cap) + " steps");
    }
    ++since_deflation;

    Complex mu;
    if (since_deflation % 11 == 10) {
      // exceptional shift to break cycles
      mu = h(hi, hi) + Complex(std::abs(h(hi, hi - 1)), 0.0) * 0.75;
    } else {
      mu = wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
    }
    for (std::size_t k = lo; k <= hi; ++k) h(k, k) -= mu;
    for (std::size_t k = lo; k < hi; ++k) {
      const Givens g = make_givens(h(k, k), h(k + 1, k));
      rot[k] = g;
      for (std::size_t c = k; c <= hi; ++c) {
        const Complex x = h(k, c);
        const Complex y = h(k + 1, c);
        h(k, c) = g.c * x + g.s * y;
        h(k + 1, c) = -std::conj(g.s) * x + g.c * y;
      }
    }
    for (std::size_t k = lo; k < hi; ++k) {
      const Givens& g = rot[k];
      const std::size_t rmax = std::min(k + 2, hi);
      for (std::size_t r = lo; r <= rmax; ++r) {
        const Complex x = h(r, k);
        const Complex y = h(r, k + 1);
        h(r, k) = g.c * x + std::conj(g.s) * y;
        h(r, k + 1) = -g.s * x + g.c * y;
      }
    }
    for (std::size_t k = lo; k <= hi; ++k) h(k, k) += mu;
  }
  return eig;
}

std::vector<double> singular_values(const MatC& m) {
  if (!m.square()) throw ShapeError("singular_values of non-square matrix " + m.shape());
  const std::size_t n = m.rows();
  MatC a = m;
  const double eps = std::numeric_limits<double>::epsilon();
  const double tol = eps * static_cast<double>(std::max<std::size_t>(n, 1));
  constexpr int kMaxSweeps = 100;
  bool converged = n < 2;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0;
        double beta = 0.0;
        Complex gamma(0.0);
        for (std::size_t r = 0; r < n; ++r) {
          alpha += std::norm(a(r, p));
          beta += std::norm(a(r, q));
          gamma += std::conj(a(r, p)) * a(r, q);
        }
        const double ag = std::abs(gamma);
        if (ag == 0.0 || ag <= tol * std::sqrt(alpha * beta)) continue;
        converged = false;
        // rotate column q by the phase of gamma so the coupling is real
        const Complex phase = std::conj(gamma) / ag;
        const double zeta = (beta - alpha) / (2.0 * ag);
        const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t r = 0; r < n; ++r) {
          const Complex x = a(r, p);
          const Complex y = a(r, q) * phase;
          a(r, p) = c * x - s * y;
          a(r, q) = s * x + c * y;
        }
      }
    }
  }
  if (!converged) throw ConvergenceFailure("one-sided Jacobi SVD did not converge");
  std::vector<double> sv(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r) s += std::norm(a(r, j));
    sv[j] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

Spectrum spectrum(const MatC& m) { return {eigenvalues(m), singular_values(m)}; }

std::vector<std::pair<Complex, int>> cluster(const std::vector<Complex>& values, double radius) {
  const std::size_t n = values.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(values[i] - values[j]) <= radius) parent[find(j)] = find(i);
    }
  }
  std::vector<std::pair<Complex, int>> out;
  std::vector<std::ptrdiff_t> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::ptrdiff_t>(out.size());
      out.emplace_back(Complex(0.0), 0);
    }
    auto& [sum, count] = out[static_cast<std::size_t>(slot[r])];
    sum += values[i];
    ++count;
  }
  for (auto& [sum, count] : out) sum /= static_cast<double>(count);
  return out;
}

double pairing_radius(const std::vector<Complex>& values) {
  double top = 0.0;
  for (const auto& z : values) top = std::max(top, std::abs(z));
  return 1e-7 * (1.0 + top);
}

std::vector<std::pair<Complex, int>> defect_clusters(std::vector<Complex> rest, double tight, double scale) {
  // A perturbed s-fold defective value scatters over a disc of radius about
  // eps^(1/s)*scale, but the mean and second central power sum of the scattered
  // values stay accurate to O(eps). Close but distinct values fail the latter.
  const double eps = std::numeric_limits<double>::epsilon();
  constexpr double kSlack = 10.0;
  constexpr std::size_t kMaxDefect = 6;
  auto allowed = [&](std::size_t s) {
    s = std::min(s, kMaxDefect);
    return std::max(tight, kSlack * std::pow(eps, 1.0 / static_cast<double>(s)) * scale);
  };
  const double moment_tol = kSlack * kSlack * eps * scale * scale;
  std::vector<std::pair<Complex, int>> out;
  while (!rest.empty()) {
    const auto top = *std::max_element(rest.begin(), rest.end(), [](const Complex& x, const Complex& y) {
      return std::abs(x) < std::abs(y);
    });
    std::sort(rest.begin(), rest.end(),
              [&](const Complex& x, const Complex& y) { return std::abs(x - top) < std::abs(y - top); });
    std::size_t take = 1;
    double diam = 0.0;
    Complex sum = rest.front();
    for (std::size_t s = 2; s <= rest.size(); ++s) {
      for (std::size_t j = 0; j + 1 < s; ++j) diam = std::max(diam, std::abs(rest[j] - rest[s - 1]));
      if (diam > allowed(kMaxDefect)) break;
      sum += rest[s - 1];
      if (diam > allowed(s)) continue;
      if (diam > tight) {
        const Complex mean = sum / static_cast<double>(s);
        Complex moment(0.0);
        for (std::size_t j = 0; j < s; ++j) moment += (rest[j] - mean) * (rest[j] - mean);
        if (std::abs(moment) > moment_tol) continue;
      }
      take = s;
    }
    Complex mean(0.0);
    for (std::size_t j = 0; j < take; ++j) mean += rest[j];
    out.emplace_back(mean / static_cast<double>(take), static_cast<int>(take));
    rest.erase(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(take));
  }
  return out;
}

double spectral_radius(const MatC& m) {
  const auto eig = eigenvalues(m);
  if (eig.empty()) return 0.0;
  double norm = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) norm += std::norm(m(i, j));
  double top = 0.0;
  for (const auto& z : eig) top = std::max(top, std::abs(z));
  const double scale = std::max({1.0, top, std::sqrt(norm / static_cast<double>(m.rows()))});
  double rho = 0.0;
  for (const auto& [mean, count] : defect_clusters(eig, pairing_radius(eig), scale)) rho = std::max(rho, std::abs(mean));
  return rho;
}

Complex determinant(const MatC& m) {
  if (!m.square()) throw ShapeError("determinant of non-square matrix " + m.shape());
  const std::size_t n = m.rows();
  MatC a = m;
  Complex det(1.0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
    }
    if (a(piv, k) == Complex(0.0)) return Complex(0.0);
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(piv, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = a(i, k) / a(k, k);
      if (f == Complex(0.0)) continue;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

namespace {

template <class T>
bool is_zero_entry(const T& x) {
  if constexpr (std::is_same_v<T, GaussInt>) {
    return x.is_zero();
  } else {
    return x == 0;
  }
}

// Fraction-free (Bareiss) elimination; every division is exact.
template <class T>
T bareiss_determinant(Matrix<T> a) {
  if (!a.square()) throw ShapeError("determinant of non-square matrix " + a.shape());
  const std::size_t n = a.rows();
  if (n == 0) return T(1);
  bool negate = false;
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero_entry(a(k, k))) {
      std::size_t piv = k + 1;
      while (piv < n && is_zero_entry(a(piv, k))) ++piv;
      if (piv == n) return T(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = exact_div(num, prev);
      }
      a(i, k) = T(0);
    }
    prev = a(k, k);
  }
  T det = a(n - 1, n - 1);
  return negate ? T(-det) : det;
}

}  // namespace

Int determinant(const MatZ& m) { return bareiss_determinant(m); }
GaussInt determinant(const MatG& m) { return bareiss_determinant(m); }

}  // namespace albertine
