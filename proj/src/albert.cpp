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

#include "albertine/albert.hpp"

#include <algorithm>
#include <cmath>

#include "albertine/linalg.hpp"

namespace albertine {

namespace {

struct Contribution {
  PolyC numeric;
  std::optional<PolyG> exact;
};

Contribution halve(const SimpleFactor& f, const std::vector<Block>& blocks, int m) {
  if (m % 2 != 0) {
    throw Error("Albert case " + to_string(f.type) + " needs an even multiplicity, got " + std::to_string(m));
  }
  const PolyZ red = reduced_char_poly_exact(f, blocks).pow(static_cast<unsigned>(m / 2));
  std::vector<GaussInt> c(red.coefficients().begin(), red.coefficients().end());
  return {to_complex(red), PolyG(std::move(c))};
}

Contribution pair_quaternionic(const std::vector<Block>& blocks, int m, PairingConvention convention,
                               double tol) {
  PolyC out({Complex(1.0)});
  for (const auto& b : blocks) {
    const PolyZ chi = real_part_exact(char_poly_exact(quat_embed(std::get<MatHZ>(b))));
    const ConjugatePairing pairing = conjugate_pairing(chi, tol, convention);
    out = out * pairing.half().pow(static_cast<unsigned>(m));
  }
  return {out, std::nullopt};
}

Contribution complex_blocks(const std::vector<Block>& blocks, int m) {
  PolyG out({GaussInt(1)});
  for (const auto& b : blocks) out = out * char_poly_exact(std::get<MatG>(b)).pow(static_cast<unsigned>(m));
  return {to_complex(out), out};
}

}  // namespace

AlbertFactorization albert_poly(const VarietyModel& model, const Endomorphism& alpha,
                                PairingConvention convention, double tol) {
  check_shape(model, alpha);
  AlbertFactorization out;
  PolyC total({Complex(1.0)});
  std::optional<PolyG> total_exact = PolyG({GaussInt(1)});
  for (std::size_t j = 0; j < model.factors.size(); ++j) {
    const SimpleFactor& f = model.factors[j];
    const auto& blocks = alpha.factors[j];
    const int m = multiplicity(f);
    CaseRecord rec{j, f.type, m, false, false};
    Contribution c;
    switch (f.type) {
      case AlbertType::I:
      case AlbertType::II:
        c = halve(f, blocks, m);
        rec.halved = true;
        break;
      case AlbertType::III:
        if (m % 2 == 0) {
          c = halve(f, blocks, m);
          rec.halved = true;
        } else {
          c = pair_quaternionic(blocks, m, convention, tol);
          rec.paired = true;
        }
        break;
      case AlbertType::IV:
        c = complex_blocks(blocks, m);
        break;
    }
    out.case_trace.push_back(rec);
    total = total * c.numeric;
    if (total_exact && c.exact) {
      total_exact = *total_exact * *c.exact;
    } else {
      total_exact.reset();
    }
  }
  if (total_exact) {
    const bool real = std::all_of(total_exact->coefficients().begin(), total_exact->coefficients().end(),
                                  [](const GaussInt& z) { return z.is_real(); });
    if (real) out.integral = real_part_exact(*total_exact);
  }
  out.p_albert = std::move(total);
  const PolyC full = full_char_poly(model, alpha);
  out.residual = coefficient_residual(out.p_albert * conj(out.p_albert), full);
  if (!(out.residual <= tol)) {
    throw PairingFailure("Albert polynomial misses P by residual " + std::to_string(out.residual));
  }
  return out;
}

PolyC albert_poly_symmetric(const VarietyModel& model, const Endomorphism& alpha,
                            PairingConvention convention, double tol) {
  check_shape(model, alpha);
  if (!is_symmetric(alpha)) throw NotSymmetric("endomorphism is not fixed by the Rosati involution");
  const AlbertFactorization fac = albert_poly(model, alpha, convention, tol);
  double scale = 1.0;
  for (const auto& z : fac.p_albert.coefficients()) scale = std::max(scale, std::abs(z));
  std::vector<Complex> c;
  for (const auto& z : fac.p_albert.coefficients()) {
    if (std::abs(z.imag()) > tol * scale) {
      throw PairingFailure("symmetric endomorphism produced a non-real Albert coefficient");
    }
    c.emplace_back(z.real(), 0.0);
  }
  return PolyC(std::move(c));
}

std::vector<double> pair_singular_values(const VarietyModel& model, const Endomorphism& alpha) {
  const std::vector<double> all = singular_values(rational_rep(model, alpha));
  std::vector<double> out;
  for (std::size_t i = 0; i < all.size(); i += 2) out.push_back(all[i]);
  return out;
}

std::vector<double> corollary_b_coefficients(const VarietyModel& model, const Endomorphism& alpha) {
  std::vector<double> sq;
  for (double s : pair_singular_values(model, alpha)) sq.push_back(s * s);
  std::vector<double> c;
  for (std::size_t k = 0; k <= sq.size(); ++k) c.push_back(elementary_symmetric(k, sq));
  return c;
}

PolyZ supersingular_char_poly(const Int& a, const Int& b, const Int& c, const Int& d) {
  return PolyZ({a * a + b * b + c * c + d * d, Int(-2 * a), Int(1)});
}

}  // namespace albertine
