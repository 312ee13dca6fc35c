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

#include "albertine/dynamics.hpp"
#include "albertine/linalg.hpp"
#include "support.hpp"

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

const VarietyModel kCm{{factor(AlbertType::IV, 1, 1, 1, 1)}};
const VarietyModel kType1{{factor(AlbertType::I, 2, 1, 2, 1)}};
const Endomorphism kCmAlpha{{{MatG{{GaussInt(1, 2)}}}}, "cm"};
const Endomorphism kType1Alpha{{{MatZ{{Int(2)}}, MatZ{{Int(3)}}}}, "diag23"};

VarietyModel elliptic() { return VarietyModel{{factor(AlbertType::I, 1, 1, 1, 1)}}; }
VarietyModel abelian(int g) { return VarietyModel{{factor(AlbertType::I, g, 1, 1, 1)}}; }

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("cohomological_degree examples") {
  CHECK(cohomological_degree(kCm, kCmAlpha, 0) == 1.0);
  CHECK(rel(cohomological_degree(kCm, kCmAlpha, 2), 5.0) <= 1e-12);
  CHECK(rel(cohomological_degree(kType1, kType1Alpha, 2), 9.0) <= 1e-12);
  CHECK(rel(cohomological_degree(kType1, kType1Alpha, 3), 18.0) <= 1e-12);
  CHECK(rel(cohomological_degree(kType1, kType1Alpha, 4), 36.0) <= 1e-12);
  CHECK_THROWS_AS(cohomological_degree(kCm, kCmAlpha, 3), ShapeError);
  CHECK_THROWS_AS(cohomological_degree(kCm, kCmAlpha, -1), ShapeError);

  for (int n = 1; n <= 3; ++n) {
    const VarietyModel model = abelian(2);
    const Endomorphism alpha = scalar_endomorphism(model, n);
    for (int i = 0; i <= 4; ++i) CHECK(cohomological_degree(model, alpha, i) == std::pow(n, i));
  }
}

TEST_CASE("numerical_degree_closed examples") {
  CHECK(numerical_degree_closed(kCm, kCmAlpha, 0) == 1.0);
  CHECK(rel(numerical_degree_closed(kCm, kCmAlpha, 1), 5.0) <= 1e-12);
  CHECK(rel(numerical_degree_closed(kType1, kType1Alpha, 1), 9.0) <= 1e-12);
  CHECK(rel(numerical_degree_closed(kType1, kType1Alpha, 2), 36.0) <= 1e-12);
  const auto moduli = pair_moduli(kType1, kType1Alpha);
  REQUIRE(moduli.size() == 2);
  CHECK(moduli[0] == doctest::Approx(3.0));
  CHECK(moduli[1] == doctest::Approx(2.0));
}

TEST_CASE("a defective endomorphism keeps chi accurate") {
  // [[3,2],[-2,-1]] is a single Jordan block at 1; its exterior powers spread
  // the repeated eigenvalue by eps^(1/s) without the defect-aware clustering.
  const VarietyModel model{{factor(AlbertType::II, 2, 1, 1, 2), factor(AlbertType::I, 1, 1, 1, 1)}};
  const Endomorphism alpha{{{MatZ{{Int(3), Int(2)}, {Int(-2), Int(-1)}}}, {MatZ{{Int(-2)}}}}, "jordan"};
  for (int k = 0; k <= model.dimension(); ++k) {
    CHECK(rel(cohomological_degree(model, alpha, 2 * k), numerical_degree_closed(model, alpha, k)) <= 1e-9);
  }
}

TEST_CASE("limit_schedule") {
  const auto s = limit_schedule(20);
  CHECK(s.front() == 1);
  CHECK(s.back() == 20);
  CHECK(s.size() == 20);
  const auto t = limit_schedule(300);
  CHECK(t.back() == 300);
  for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i] > t[i - 1]);
  CHECK(std::find(t.begin(), t.end(), 256u) != t.end());
  CHECK(std::find(t.begin(), t.end(), 33u) == t.end());
}

TEST_CASE("numerical_degree_limit examples") {
  const VarietyModel e = elliptic();
  const auto two = numerical_degree_limit(e, scalar_endomorphism(e, 2), 1, 40);
  CHECK(two.target == 4.0);
  for (const auto& p : two.points) CHECK(p.value == doctest::Approx(4.0).epsilon(1e-12));

  const auto cm = numerical_degree_limit(kCm, kCmAlpha, 1, 20);
  CHECK(cm.points.back().m == 20);
  CHECK(cm.relative_gap() <= 0.02);

  const auto t1 = numerical_degree_limit(kType1, kType1Alpha, 1, 20);
  CHECK(t1.target == doctest::Approx(9.0));
  CHECK(t1.relative_gap() <= 0.05);
  // mixes 9^m and 4^m, so the estimates approach from above
  CHECK(t1.points.front().value > t1.last());

  CHECK_THROWS(numerical_degree_limit(kCm, kCmAlpha, 0, 20));
  CHECK_THROWS(numerical_degree_limit(kCm, kCmAlpha, 1, 1));
}

TEST_CASE("sv_limit examples") {
  const auto tri = sv_limit(MatC{{2.0, 1.0}, {0.0, 1.0}}, 256);
  REQUIRE(tri.size() == 2);
  CHECK(tri[0].target == doctest::Approx(2.0));
  CHECK(tri[1].target == doctest::Approx(1.0));
  CHECK(std::abs(tri[0].last() - 2.0) <= 0.05);
  CHECK(std::abs(tri[1].last() - 1.0) <= 0.05);

  const auto jordan = sv_limit(MatC{{1.0, 1.0}, {0.0, 1.0}}, 4096);
  CHECK(jordan[0].points.back().m == 4096);
  CHECK(std::abs(jordan[0].last() - 1.0) <= 0.05);
  CHECK(std::abs(jordan[1].last() - 1.0) <= 0.05);
  CHECK(jordan[0].last() >= 1.0);

  const auto diag = sv_limit(MatC{{3.0, 0.0}, {0.0, Complex(0.0, 2.0)}}, 64);
  for (const auto& p : diag[0].points) CHECK(p.value == doctest::Approx(3.0).epsilon(1e-12));
  for (const auto& p : diag[1].points) CHECK(p.value == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("sv_limit does not overflow") {
  const auto big = sv_limit(MatC{{1e8, 1.0}, {0.0, 3.0}}, 1024);
  CHECK(std::isfinite(big[0].last()));
  CHECK(big[0].last() == doctest::Approx(1e8).epsilon(1e-6));
  CHECK(big[1].last() == doctest::Approx(3.0).epsilon(1e-3));
  const double l = log_top_singular_value_of_power(MatC{{10.0}}, 1000);
  CHECK(l == doctest::Approx(1000.0 * std::log(10.0)));
}

TEST_CASE("sv_limit on random matrices with separated moduli") {
  std::mt19937_64 rng(5);
  int tested = 0;
  while (tested < 20) {
    const std::size_t n = 2 + static_cast<std::size_t>(tested % 4);
    const MatC a = testing::random_matc(rng, n);
    std::vector<double> mod;
    for (const auto& z : eigenvalues(a)) mod.push_back(std::abs(z));
    std::sort(mod.begin(), mod.end(), std::greater<>());
    bool separated = mod.back() > 1e-3;
    for (std::size_t i = 1; i < n; ++i) separated &= mod[i - 1] >= 1.05 * mod[i];
    if (!separated) continue;
    ++tested;
    for (const auto& trace : sv_limit(a, 256)) CHECK(std::abs(trace.last() - trace.target) <= 0.05 * trace.target);
  }
}

TEST_CASE("polarized_check") {
  const PolarizedCheck two = polarized_check(abelian(2), 2);
  CHECK(two.pass);
  REQUIRE(two.lambda.size() == 3);
  CHECK(two.lambda[1] == 4.0);
  CHECK(two.lambda[2] == 16.0);
  CHECK(two.chi_even[2] == 16.0);
  CHECK(two.oracle.at(2) == Rational(16));

  const PolarizedCheck one = polarized_check(abelian(3), 1);
  CHECK(one.pass);
  for (double l : one.lambda) CHECK(l == 1.0);

  const PolarizedCheck three = polarized_check(elliptic(), 3);
  CHECK(three.pass);
  CHECK(three.lambda[1] == 9.0);
}

TEST_CASE("dinh_check examples") {
  const auto t1 = dinh_check(kType1, kType1Alpha);
  REQUIRE(t1.size() == 5);
  CHECK(t1[3].chi_squared == doctest::Approx(324.0));
  CHECK(t1[3].max_product == doctest::Approx(324.0));
  for (const auto& row : t1) CHECK(row.pass);

  const auto cm = dinh_check(kCm, kCmAlpha);
  CHECK(cm[1].chi_squared == doctest::Approx(5.0));
  CHECK(cm[1].max_product == doctest::Approx(5.0));

  const VarietyModel model = abelian(2);
  for (const auto& row : dinh_check(model, scalar_endomorphism(model, 3))) {
    CHECK(row.chi_squared == doctest::Approx(std::pow(9.0, row.i)));
    CHECK(row.pass);
  }
}

TEST_CASE("norm_comparison examples") {
  const auto cm = norm_comparison(kCm, kCmAlpha, 1);
  CHECK(cm.spectral_norm == doctest::Approx(5.0));
  CHECK(cm.sqrt_rho_rosati == doctest::Approx(5.0));
  CHECK(cm.pass);

  const auto t1 = norm_comparison(kType1, kType1Alpha, 1);
  CHECK(t1.spectral_norm == doctest::Approx(9.0));
  CHECK(t1.sqrt_rho_rosati == doctest::Approx(9.0));

  const VarietyModel model = abelian(2);
  for (int k = 0; k <= 2; ++k) {
    const auto r = norm_comparison(model, scalar_endomorphism(model, 2), k);
    CHECK(r.spectral_norm == doctest::Approx(std::pow(4.0, k)));
    CHECK(r.pass);
  }
  CHECK_THROWS_AS(norm_comparison(kCm, kCmAlpha, 2), ShapeError);
}

TEST_CASE("degree_report") {
  const DegreeReport r = degree_report(kType1, kType1Alpha, 20);
  CHECK(r.pass());
  CHECK(r.degree == Int(36));
  REQUIRE(r.rows.size() == 3);
  CHECK(r.rows[1].chi_2k == doctest::Approx(9.0));
  REQUIRE(r.rows[1].normalized_intersection);
  CHECK(*r.rows[1].normalized_intersection == Rational(13));
  REQUIRE(r.rows[1].limit);
  CHECK(r.rows[1].limit->relative_gap() <= 0.05);
  REQUIRE(r.chi_odd.size() == 2);
  CHECK(r.chi_odd[0] == doctest::Approx(3.0));
  CHECK(r.chi_odd[1] == doctest::Approx(18.0));

  const DegreeReport quick = degree_report(kCm, kCmAlpha, 0);
  CHECK(quick.pass());
  CHECK(!quick.rows[1].limit);
}

TEST_CASE("chi = lambda, Dinh and norm identities on random models") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto c = seed % 2 ? Characteristic::Zero : Characteristic::Positive;
    const VarietyModel model = random_model(seed, 4, c);
    const Endomorphism alpha = random_endomorphism(seed, model, 3);
    CAPTURE(seed);
    const int g = model.dimension();
    std::vector<double> lambda;
    for (int k = 0; k <= g; ++k) {
      lambda.push_back(numerical_degree_closed(model, alpha, k));
      CHECK(rel(cohomological_degree(model, alpha, 2 * k), lambda.back()) <= 1e-9 * std::max(1.0, lambda.back()));
      CHECK(norm_comparison(model, alpha, k).pass);
    }
    for (int k = 1; k < g; ++k) CHECK(lambda[k] * lambda[k] >= lambda[k - 1] * lambda[k + 1] * (1 - 1e-12));
    for (const auto& row : dinh_check(model, alpha)) CHECK(row.pass);
  }
}
