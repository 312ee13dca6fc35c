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

#include <random>

#include "albertine/albert.hpp"
#include "albertine/oracle.hpp"
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
const VarietyModel kSuper{{factor(AlbertType::III, 1, 1, 1, 2, Characteristic::Positive)}};
const VarietyModel kType1{{factor(AlbertType::I, 2, 1, 2, 1)}};
const Endomorphism kCmAlpha{{{MatG{{GaussInt(1, 2)}}}}, "cm"};
const Endomorphism kType1Alpha{{{MatZ{{Int(2)}}, MatZ{{Int(3)}}}}, "diag23"};

const MatG kJ1{{GaussInt(0), GaussInt(1)}, {GaussInt(-1), GaussInt(0)}};

Characteristic char_of(std::uint64_t seed) { return seed % 2 ? Characteristic::Zero : Characteristic::Positive; }

AlternatingForm random_form(std::mt19937_64& rng, std::size_t dim) {
  MatG m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      m(i, j) = GaussInt(testing::small_int(rng, 3), testing::small_int(rng, 1));
      m(j, i) = -m(i, j);
    }
  return AlternatingForm(m);
}

GaussInt mixed(std::initializer_list<AlternatingForm> forms) {
  const std::vector<AlternatingForm> v(forms);
  return mixed_intersection(v);
}

}  // namespace

TEST_CASE("alternating forms reject non-antisymmetric input") {
  CHECK_THROWS_AS(AlternatingForm(MatG::identity(2)), OracleError);
  CHECK_THROWS_AS(AlternatingForm(MatG(3, 3)), OracleError);
  CHECK_NOTHROW(AlternatingForm{kJ1});
}

TEST_CASE("standard polarization examples") {
  CHECK(standard_polarization(kCm).matrix() == kJ1);
  CHECK(standard_polarization(kSuper).matrix() == kJ1);
  const VarietyModel ell{{factor(AlbertType::I, 1, 1, 1, 1)}};
  CHECK(standard_polarization(ell).matrix() == kJ1);
  // Type I with m = 2: the two copies of the 2-dimensional block are paired
  const MatG j = standard_polarization(kType1).matrix();
  MatG expect(4, 4);
  expect(0, 2) = 1;
  expect(1, 3) = 1;
  expect(2, 0) = -1;
  expect(3, 1) = -1;
  CHECK(j == expect);
}

TEST_CASE("standard polarization is principal and Rosati compatible") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const VarietyModel m = random_model(seed, 4, char_of(seed));
    const AlternatingForm j = standard_polarization(m);
    const GaussInt pf = pfaffian(j);
    CHECK(pf.is_real());
    CHECK(abs(pf.re) == 1);
    for (std::uint64_t s = 0; s < 20; ++s) {
      CHECK(polarization_compatible(m, j, random_endomorphism(seed * 100 + s, m, 3)));
    }
  }
}

TEST_CASE("pullback examples") {
  const AlternatingForm j(kJ1);
  CHECK(pullback_form(MatG::identity(2), j) == j);
  const MatG m{{GaussInt(1), GaussInt(-2)}, {GaussInt(2), GaussInt(1)}};
  CHECK(pullback_form(m, j) == GaussInt(5) * j);
  const AlternatingForm j4 = standard_polarization(kType1);
  CHECK(pullback_form(GaussInt(3) * MatG::identity(4), j4) == GaussInt(9) * j4);
  CHECK(pullback_form(m, j, 3) == GaussInt(125) * j);
}

TEST_CASE("perfect matchings") {
  CHECK(perfect_matchings(0).size() == 1);
  CHECK(perfect_matchings(1).size() == 1);
  CHECK(perfect_matchings(2).size() == 3);
  CHECK(perfect_matchings(3).size() == 15);
  CHECK(perfect_matchings(6).size() == 10395);
  // (01)(23) is even, (02)(13) odd, (03)(12) even
  const auto& m2 = perfect_matchings(2);
  CHECK(m2[0].sign == 1);
  CHECK(m2[1].sign == -1);
  CHECK(m2[2].sign == 1);
  CHECK_THROWS_AS(perfect_matchings(7), OracleError);
}

TEST_CASE("Pfaffian squares to the determinant") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t g = 1 + static_cast<std::size_t>(trial % 4);
    const AlternatingForm w = random_form(rng, 2 * g);
    const GaussInt pf = pfaffian(w);
    CHECK(pf * pf == determinant(w.matrix()));
  }
}

TEST_CASE("mixed intersection examples") {
  const AlternatingForm j(kJ1);
  CHECK(mixed({GaussInt(5) * j}) == GaussInt(5) * mixed({j}));
  const AlternatingForm j4 = standard_polarization(kType1);
  CHECK(mixed({j4, j4}) == mixed({j4, j4}));
  const IntersectionRatio r = intersection_ratio(kType1, kType1Alpha, 1);
  CHECK(r.value() == Rational(13, 2));
  std::mt19937_64 rng(1);
  CHECK_THROWS_AS(mixed_intersection(std::vector<AlternatingForm>(7, random_form(rng, 14))), OracleError);
}

TEST_CASE("intersection ratio examples") {
  CHECK(intersection_ratio(kType1, kType1Alpha, 0).value() == 1);
  CHECK(intersection_ratio(kCm, kCmAlpha, 1).value() == 5);
  CHECK(intersection_ratio(kType1, kType1Alpha, 2).value() == 36);
  CHECK(normalized_intersection(kType1, kType1Alpha, 1) == 13);
  CHECK(intersection_ratio(kCm, kCmAlpha, 1, 4).value() == 625);
}

TEST_CASE("mixed intersection is multilinear and symmetric") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const AlternatingForm a = random_form(rng, 6), b = random_form(rng, 6), c = random_form(rng, 6),
                          d = random_form(rng, 6);
    const GaussInt abc = mixed({a, b, c});
    CHECK(mixed({b, a, c}) == abc);
    CHECK(mixed({c, b, a}) == abc);
    CHECK(mixed({a, c, b}) == abc);
    CHECK(mixed({a + d, b, c}) == abc + mixed({d, b, c}));
    CHECK(mixed({a, GaussInt(2, 1) * b, c}) == GaussInt(2, 1) * abc);
  }
}

TEST_CASE("normalized intersection coefficient examples") {
  const CorollaryBCheck cm = verify_corollary_b(kCm, kCmAlpha);
  CHECK(cm.pass);
  CHECK(cm.oracle == std::vector<Rational>{1, 5});
  const CorollaryBCheck t1 = verify_corollary_b(kType1, kType1Alpha);
  CHECK(t1.pass);
  CHECK(t1.oracle == std::vector<Rational>{1, 13, 36});
  const VarietyModel g2{{factor(AlbertType::I, 2, 1, 1, 1)}};
  for (int n : {1, 2, 3}) {
    const CorollaryBCheck c = verify_corollary_b(g2, scalar_endomorphism(g2, n));
    CHECK(c.pass);
    CHECK(c.oracle == std::vector<Rational>{1, 2 * n * n, n * n * n * n});
  }
}

TEST_CASE("top intersection is the degree") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const VarietyModel m = random_model(seed, 4, char_of(seed));
    const Endomorphism a = random_endomorphism(seed, m, 3);
    CHECK(intersection_ratio(m, a, m.dimension()).value() == Rational(degree(m, a)));
  }
}

TEST_CASE("interpolation") {
  // 3 n^2 - n + 7
  std::vector<Rational> xs, ys;
  for (int n = 0; n < 4; ++n) {
    xs.emplace_back(n);
    ys.emplace_back(3 * n * n - n + 7);
  }
  CHECK(interpolate(xs, ys) == PolyQ({Rational(7), Rational(-1), Rational(3)}));
}

TEST_CASE("Pfaffian identity on examples") {
  const PfaffianIdentityCheck t1 = verify_pfaffian_identity(kType1, kType1Alpha);
  CHECK(t1.pass);
  // alpha^dagger alpha = diag(4, 9): P^A = (t - 4)(t - 9)
  CHECK(t1.albert == PolyZ({Int(36), Int(-13), Int(1)}));
  CHECK(verify_pfaffian_identity(kCm, kCmAlpha).pass);
}
