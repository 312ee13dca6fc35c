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

#include "albertine/albert.hpp"

using namespace albertine;

namespace {

SimpleFactor factor(AlbertType t, int dim_a, int n, int e0, int d, Characteristic c = Characteristic::Zero) {
  SimpleFactor f;
  f.type = t;
  f.dim_a = dim_a;
  f.n = n;
  f.e0 = e0;
  f.d = d;
  f.characteristic = c;
  return f;
}

PolyZ pz(std::initializer_list<long> c) {
  std::vector<Int> v;
  for (long x : c) v.emplace_back(x);
  return PolyZ(std::move(v));
}

const Complex I{0.0, 1.0};
const VarietyModel kCm{{factor(AlbertType::IV, 1, 1, 1, 1)}};
const VarietyModel kSuper{{factor(AlbertType::III, 1, 1, 1, 2, Characteristic::Positive)}};
const VarietyModel kType1{{factor(AlbertType::I, 2, 1, 2, 1)}};
const Endomorphism kCmAlpha{{{MatG{{GaussInt(1, 2)}}}}, "cm"};
const Endomorphism kSuperAlpha{{{MatHZ{{QuatInt(1, 1, 1, 1)}}}}, "super"};
const Endomorphism kType1Alpha{{{MatZ{{Int(2)}}, MatZ{{Int(3)}}}}, "diag23"};

Characteristic char_of(std::uint64_t seed) { return seed % 2 ? Characteristic::Zero : Characteristic::Positive; }

}  // namespace

TEST_CASE("albert_poly examples") {
  const AlbertFactorization t1 = albert_poly(kType1, kType1Alpha);
  REQUIRE(t1.integral);
  CHECK(*t1.integral == pz({6, -5, 1}));
  CHECK(t1.case_trace.at(0).halved);
  CHECK(t1.case_trace.at(0).albert_case == AlbertType::I);

  const AlbertFactorization cm = albert_poly(kCm, kCmAlpha);
  CHECK(coefficient_residual(cm.p_albert, PolyC({-(1.0 + 2.0 * I), 1.0})) == 0.0);
  CHECK(!cm.exact());

  const AlbertFactorization ss = albert_poly(kSuper, kSuperAlpha);
  CHECK(coefficient_residual(ss.p_albert, PolyC({-(1.0 + std::sqrt(3.0) * I), 1.0})) <= 1e-14);
  CHECK(ss.case_trace.at(0).paired);
  CHECK(!ss.case_trace.at(0).halved);

  const AlbertFactorization lower = albert_poly(kSuper, kSuperAlpha, PairingConvention::LowerHalfPlane);
  CHECK(coefficient_residual(lower.p_albert, PolyC({-(1.0 - std::sqrt(3.0) * I), 1.0})) <= 1e-14);
}

TEST_CASE("albert_poly_symmetric examples") {
  const Endomorphism five{{{MatG{{GaussInt(5)}}}}, ""};
  CHECK(coefficient_residual(albert_poly_symmetric(kCm, five), PolyC({-5.0, 1.0})) <= 1e-14);
  const VarietyModel g2{{factor(AlbertType::I, 2, 1, 1, 1)}};
  CHECK(coefficient_residual(albert_poly_symmetric(g2, scalar_endomorphism(g2, 1)), PolyC({1.0, -2.0, 1.0})) <=
        1e-14);
  CHECK(coefficient_residual(albert_poly_symmetric(kType1, kType1Alpha), PolyC({6.0, -5.0, 1.0})) <= 1e-14);
  CHECK_THROWS_AS(albert_poly_symmetric(kCm, kCmAlpha), NotSymmetric);
}

TEST_CASE("corollary_b_coefficients examples") {
  auto close = [](const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (std::abs(a[i] - b[i]) > 1e-9 * std::max(1.0, std::abs(b[i]))) return false;
    return true;
  };
  CHECK(close(corollary_b_coefficients(kCm, kCmAlpha), {1, 5}));
  CHECK(close(corollary_b_coefficients(kType1, kType1Alpha), {1, 13, 36}));
  const VarietyModel g2{{factor(AlbertType::I, 2, 1, 1, 1)}};
  for (int n : {1, 2, 3}) {
    const double n2 = n * n;
    CHECK(close(corollary_b_coefficients(g2, scalar_endomorphism(g2, n)), {1, 2 * n2, n2 * n2}));
  }
}

TEST_CASE("supersingular_char_poly examples") {
  CHECK(supersingular_char_poly(1, 1, 1, 1) == pz({4, -2, 1}));
  CHECK(supersingular_char_poly(5, 0, 0, 0) == pz({-5, 1}).pow(2));
  CHECK(supersingular_char_poly(0, 1, 0, 0) == pz({1, 0, 1}));
  for (int a = -2; a <= 2; ++a)
    for (int b = -1; b <= 1; ++b) {
      const Endomorphism q{{{MatHZ{{QuatInt(a, b, 1 - b, a + b)}}}}, ""};
      CHECK(supersingular_char_poly(a, b, 1 - b, a + b) == reduced_char_poly_exact(kSuper.factors[0], q.factors[0]));
    }
}

TEST_CASE("Type III with odd multiplicity pairs eigenvalues of iota") {
  // a supersingular abelian surface: definite quaternion algebra, n = 2, m = 1
  const VarietyModel m{{factor(AlbertType::III, 1, 2, 1, 2, Characteristic::Positive)}};
  const Endomorphism a{{{MatHZ{{QuatInt(1, 1, 0, 0), QuatInt(0, 0, 1, 0)}, {QuatInt(0), QuatInt(2, 0, 0, 1)}}}}, ""};
  const AlbertFactorization af = albert_poly(m, a);
  CHECK(af.p_albert.degree() == 2);
  CHECK(af.residual <= 1e-7);
  CHECK(af.case_trace.at(0).paired);
}

TEST_CASE("factorization identity on random models") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const VarietyModel m = random_model(seed, 4, char_of(seed));
    const Endomorphism a = random_endomorphism(seed, m, 3);
    const AlbertFactorization af = albert_poly(m, a);
    const PolyC full = to_complex(full_char_poly_exact(m, a));
    CHECK(af.p_albert.degree() == m.dimension());
    CHECK(std::abs(af.p_albert.leading() - 1.0) <= 1e-12);
    CHECK(coefficient_residual(af.p_albert * conj(af.p_albert), full) <= 1e-7);
    // |P^A(0)|^2 = deg alpha
    const double c0 = std::norm(af.p_albert.coefficient(0));
    const double deg = to_double(degree(m, a));
    CHECK(std::abs(c0 - deg) <= 1e-7 * deg);
  }
}

TEST_CASE("Types I and II give integer Albert polynomials") {
  int tested = 0;
  for (std::uint64_t seed = 0; tested < 50 && seed < 5000; ++seed) {
    const VarietyModel m = random_model(seed, 4, Characteristic::Zero);
    bool ok = true;
    for (const auto& f : m.factors) ok = ok && (f.type == AlbertType::I || f.type == AlbertType::II);
    if (!ok) continue;
    ++tested;
    const AlbertFactorization af = albert_poly(m, random_endomorphism(seed, m, 3));
    CHECK(af.exact());
    for (const auto& c : af.p_albert.coefficients()) {
      CHECK(c.imag() == 0.0);
      CHECK(std::abs(c.real() - std::nearbyint(c.real())) <= 1e-9);
    }
  }
  CHECK(tested == 50);
}

TEST_CASE("symmetric Albert polynomial is convention independent") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const VarietyModel m = random_model(seed, 4, char_of(seed));
    const Endomorphism b = random_endomorphism(seed, m, 2);
    const Endomorphism sym = compose(rosati(b), b);
    const PolyC up = albert_poly_symmetric(m, sym, PairingConvention::UpperHalfPlane);
    const PolyC lo = albert_poly_symmetric(m, sym, PairingConvention::LowerHalfPlane);
    CHECK(coefficient_residual(up, lo) <= 1e-9);
    for (const auto& c : up.coefficients()) CHECK(c.imag() == 0.0);
    CHECK(coefficient_residual(up * up, to_complex(full_char_poly_exact(m, sym))) <= 1e-7);
  }
}

TEST_CASE("corollary B coefficients end in the degree") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const VarietyModel m = random_model(seed, 4, char_of(seed));
    const Endomorphism a = random_endomorphism(seed, m, 3);
    const auto c = corollary_b_coefficients(m, a);
    REQUIRE(c.size() == static_cast<std::size_t>(m.dimension() + 1));
    CHECK(c.front() == 1.0);
    const double deg = to_double(degree(m, a));
    CHECK(std::abs(c.back() - deg) <= 1e-9 * deg);
    for (double x : c) CHECK(x >= 0.0);
  }
}
