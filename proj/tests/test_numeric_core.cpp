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

#include <doctest.h>

#include <cmath>
#include <random>

#include "albertine/exterior.hpp"
#include "albertine/linalg.hpp"
#include "albertine/quaternion.hpp"
#include "support.hpp"

using namespace albertine;
using testing::same_multiset;

namespace {

const Complex I{0.0, 1.0};

// Naive cofactor expansion, only for tiny matrices.
Int cofactor_det(const MatZ& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j)
      if (j != c) cols.push_back(j);
    const Int term = m(0, c) * cofactor_det(m.submatrix(rows, cols));
    total += c % 2 == 0 ? term : Int(-term);
  }
  return total;
}

}  // namespace

TEST_CASE("quaternion algebra") {
  const Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
  CHECK(i * i == Quaternion(-1));
  CHECK(j * j == Quaternion(-1));
  CHECK(k * k == Quaternion(-1));
  CHECK(i * j == k);
  CHECK(j * i == -k);
  const Quaternion q{1, 2, 3, 4};
  CHECK(conj(q) * q == Quaternion(30));
}

TEST_CASE("quat_embed examples") {
  CHECK(quat_embed(MatH::identity(3)) == MatC::identity(6));

  const MatC ej = quat_embed(MatH{{Quaternion(0, 0, 1, 0)}});
  CHECK(ej == MatC{{0.0, 1.0}, {-1.0, 0.0}});

  const MatC ei = quat_embed(MatH{{Quaternion(0, 1, 0, 0)}});
  CHECK(ei == MatC{{I, 0.0}, {0.0, -I}});
  CHECK(same_multiset(eigenvalues(ei), {I, -I}, 1e-12));

  CHECK_THROWS_AS(quat_embed(MatH(1, 2)), ShapeError);
}

TEST_CASE("quat_embed integer and float versions agree") {
  std::mt19937_64 rng(3);
  MatHZ a(2, 2);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      a(r, c) = QuatInt(testing::small_int(rng, 4), testing::small_int(rng, 4), testing::small_int(rng, 4),
                        testing::small_int(rng, 4));
  CHECK(max_abs_diff(to_complex(quat_embed(a)), quat_embed(to_quaternion(a))) == 0.0);
}

TEST_CASE("eigenvalue examples") {
  CHECK(same_multiset(eigenvalues(MatC{{2.0, 0.0}, {0.0, 3.0}}), {2.0, 3.0}, 1e-12));
  CHECK(same_multiset(eigenvalues(MatC{{0.0, 1.0}, {-1.0, 0.0}}), {I, -I}, 1e-12));
  CHECK(same_multiset(eigenvalues(MatC{{1.0, -2.0}, {2.0, 1.0}}), {1.0 + 2.0 * I, 1.0 - 2.0 * I}, 1e-12));
  CHECK_THROWS_AS(eigenvalues(MatC(2, 3)), ShapeError);
}

TEST_CASE("singular value examples") {
  for (double s : singular_values(MatC::identity(4))) CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
  auto d = singular_values(MatC{{2.0, 0.0}, {0.0, 1.0}});
  CHECK(d[0] == doctest::Approx(2.0));
  CHECK(d[1] == doctest::Approx(1.0));
  // eigenvalues of A^T A = [[4,2],[2,2]] solve mu^2 - 6 mu + 4 = 0
  auto t = singular_values(MatC{{2.0, 1.0}, {0.0, 1.0}});
  CHECK(t[0] == doctest::Approx(std::sqrt(3.0 + std::sqrt(5.0))).epsilon(1e-13));
  CHECK(t[1] == doctest::Approx(std::sqrt(3.0 - std::sqrt(5.0))).epsilon(1e-13));
  CHECK(t[0] == doctest::Approx(2.2882).epsilon(1e-4));
  CHECK(t[1] == doctest::Approx(0.8740).epsilon(1e-3));
}

TEST_CASE("spectral radius examples") {
  CHECK(spectral_radius(MatC{{2.0, 0.0}, {0.0, -3.0}}) == doctest::Approx(3.0));
  CHECK(spectral_radius(MatC{{0.0, 1.0}, {-1.0, 0.0}}) == doctest::Approx(1.0));
  CHECK(spectral_radius(MatC{{2.0, 1.0}, {0.0, 1.0}}) == doctest::Approx(2.0));
  // a defective cluster must not inflate the radius by its sqrt(eps) spread
  MatC jordan(4, 4);
  for (std::size_t i = 0; i < 4; ++i) jordan(i, i) = 2.0;
  for (std::size_t i = 0; i + 1 < 4; ++i) jordan(i, i + 1) = 1.0;
  CHECK(spectral_radius(jordan) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("exterior power examples") {
  const MatC m{{1.0, 2.0}, {3.0, 4.0}};
  CHECK(exterior_power(m, 0) == MatC{{1.0}});
  CHECK(exterior_power(m, 2) == MatC{{-2.0}});
  MatZ d(3, 3);
  d(0, 0) = 1;
  d(1, 1) = 2;
  d(2, 2) = 3;
  MatZ expect(3, 3);
  expect(0, 0) = 2;
  expect(1, 1) = 3;
  expect(2, 2) = 6;
  CHECK(exterior_power(d, 2) == expect);
  CHECK_THROWS(exterior_power(d, 4));
  CHECK(index_subsets(4, 2).size() == 6);
  CHECK(index_subsets(4, 2).front() == std::vector<std::size_t>{0, 1});
  CHECK(index_subsets(4, 2).back() == std::vector<std::size_t>{2, 3});
  CHECK(binomial(12, 6) == 924);
}

TEST_CASE("determinants agree with cofactor expansion") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    const MatZ m = testing::random_matz(rng, n, 5);
    const Int exact = cofactor_det(m);
    CHECK(determinant(m) == exact);
    const Complex approx = determinant(to_complex(m));
    CHECK(std::abs(approx - to_double(exact)) <= 1e-9 * std::max(1.0, std::abs(to_double(exact))));
  }
}

TEST_CASE("spectrum invariants on random complex matrices") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
    const MatC m = testing::random_matc(rng, n);
    const Spectrum s = spectrum(m);
    REQUIRE(s.eigenvalues.size() == n);
    REQUIRE(s.singular_values.size() == n);
    const Complex det = determinant(m);
    Complex prod_eig = 1.0;
    double prod_sv = 1.0;
    for (const auto& z : s.eigenvalues) prod_eig *= z;
    for (double x : s.singular_values) prod_sv *= x;
    CHECK(std::abs(prod_eig - det) <= 1e-9 * std::max(1.0, std::abs(det)));
    CHECK(std::abs(prod_sv - std::abs(det)) <= 1e-9 * std::max(1.0, std::abs(det)));
    CHECK(std::is_sorted(s.singular_values.rbegin(), s.singular_values.rend()));
    CHECK(s.singular_values.back() >= 0.0);
    // each eigenvalue nearly annihilates the characteristic polynomial
    for (const auto& z : s.eigenvalues) {
      CHECK(std::abs(determinant(z * MatC::identity(n) - m)) <= 1e-9 * std::pow(1.0 + std::abs(z), n) * 10.0);
    }
  }
}

TEST_CASE("quat_embed is multiplicative") {
  std::mt19937_64 rng(100);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
    const MatH a = testing::random_math(rng, n);
    const MatH b = testing::random_math(rng, n);
    CHECK(max_abs_diff(quat_embed(a * b), quat_embed(a) * quat_embed(b)) <= 1e-10);
    CHECK(max_abs_diff(quat_embed(a.adjoint()), quat_embed(a).adjoint()) <= 1e-15);
  }
}

TEST_CASE("Hermitian quaternion matrices have real eigenvalues") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
    const MatH a = testing::random_math(rng, n);
    const MatH h = a + a.adjoint();
    for (const auto& z : eigenvalues(quat_embed(h))) CHECK(std::abs(z.imag()) <= 1e-9);
  }
}

TEST_CASE("exterior power is functorial, exactly") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
    const MatZ a = testing::random_matz(rng, n, 4);
    const MatZ b = testing::random_matz(rng, n, 4);
    for (std::size_t k = 0; k <= n; ++k) {
      CHECK(exterior_power(a * b, k) == exterior_power(a, k) * exterior_power(b, k));
    }
    CHECK(exterior_power(a, n)(0, 0) == determinant(a));
  }
}

TEST_CASE("exterior power eigenvalue moduli are products of moduli") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 4);
    const MatC a = testing::random_matc(rng, n);
    std::vector<double> mod;
    for (const auto& z : eigenvalues(a)) mod.push_back(std::abs(z));
    std::sort(mod.begin(), mod.end(), std::greater<>());
    for (std::size_t k = 1; k <= n; ++k) {
      double top = 1.0;
      for (std::size_t i = 0; i < k; ++i) top *= mod[i];
      CHECK(spectral_radius(exterior_power(a, k)) == doctest::Approx(top).epsilon(1e-8));
    }
  }
}

TEST_CASE("conjugate-doubled matrices pair their eigenvalues") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    const MatC a = testing::random_matc(rng, n);
    const MatC doubled = direct_sum<Complex>({a, a.conjugate()});
    const auto eig = eigenvalues(doubled);
    std::vector<Complex> conjugated;
    for (const auto& z : eig) conjugated.push_back(std::conj(z));
    CHECK(same_multiset(eig, conjugated, 1e-8));
  }
}
