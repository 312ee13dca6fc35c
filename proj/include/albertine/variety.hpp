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
#include <string>
#include <variant>
#include <vector>

#include "albertine/matrix.hpp"
#include "albertine/polynomial.hpp"

namespace albertine {

enum class AlbertType { I, II, III, IV };
enum class Characteristic { Zero, Positive };

std::string to_string(AlbertType t);
std::string to_string(Characteristic c);

/// Shape of the real algebra End(X_j) (x) R for one isotypic factor.
enum class BlockKind { Real, Complex, Quaternion };

/// X_j = A^n for a simple A of the given Albert type. Only the numeric
/// invariants of the type classification are kept; number fields are never
/// materialized.
struct SimpleFactor {
  AlbertType type = AlbertType::I;
  int dim_a = 1;  // dim A
  int n = 1;      // X_j = A^n
  int e0 = 1;     // [K0 : Q]
  int d = 1;      // d^2 = [D : K]
  Characteristic characteristic = Characteristic::Zero;

  /// [K : Q]; twice e0 for Type IV.
  [[nodiscard]] int e() const { return type == AlbertType::IV ? 2 * e0 : e0; }
  [[nodiscard]] int dimension() const { return dim_a * n; }
  [[nodiscard]] BlockKind block_kind() const;
  [[nodiscard]] int block_count() const;
  /// Side length of each block, counted in entries of the block's scalar.
  [[nodiscard]] int block_size() const;
  /// Degree e d n of the reduced characteristic polynomial.
  [[nodiscard]] int reduced_degree() const { return e() * d * n; }

  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

struct VarietyModel {
  std::vector<SimpleFactor> factors;

  /// g = sum of dim A_j * n_j.
  [[nodiscard]] int dimension() const;
  friend bool operator==(const VarietyModel&, const VarietyModel&) = default;
};

struct Violation {
  std::size_t factor = 0;
  std::string rule;
};

/// Checks every factor against the Albert type restrictions; an empty result
/// means the model is valid.
std::vector<Violation> validate(const VarietyModel& model);

/// m = 2 dim A / (e d). Throws when the value is not a positive integer,
/// which only happens for factors that fail validate().
int multiplicity(const SimpleFactor& factor);

using Block = std::variant<MatZ, MatG, MatHZ>;

BlockKind kind_of(const Block& b);

/// alpha (x) 1_R as a block-diagonal element, grouped per factor:
/// Type I: e real n x n; Type II: e real 2n x 2n; Type III: e quaternionic
/// n x n; Type IV: e0 complex dn x dn.
struct Endomorphism {
  std::vector<std::vector<Block>> factors;
  std::string label;

  friend bool operator==(const Endomorphism& a, const Endomorphism& b) { return a.factors == b.factors; }
};

/// Throws ShapeError when alpha's blocks do not fit the model.
void check_shape(const VarietyModel& model, const Endomorphism& alpha);

/// Composition a o b (apply b first), blockwise.
Endomorphism compose(const Endomorphism& a, const Endomorphism& b);
Endomorphism power(const Endomorphism& alpha, unsigned m);
/// Multiplication by an integer n on every factor.
Endomorphism scalar_endomorphism(const VarietyModel& model, const Int& n);

/// The Rosati involution, realized as blockwise conjugate transpose.
Endomorphism rosati(const Endomorphism& alpha);
bool is_symmetric(const Endomorphism& alpha);

PolyZ reduced_char_poly_exact(const SimpleFactor& factor, const std::vector<Block>& blocks);
PolyC reduced_char_poly(const SimpleFactor& factor, const std::vector<Block>& blocks);

/// P_alpha = prod_j chi_red_j^{m_j}, monic of degree 2g.
PolyZ full_char_poly_exact(const VarietyModel& model, const Endomorphism& alpha);
PolyC full_char_poly(const VarietyModel& model, const Endomorphism& alpha);

/// deg alpha = P_alpha(0).
Int degree(const VarietyModel& model, const Endomorphism& alpha);

/// 2g x 2g matrix of alpha on first cohomology. For each factor and each of
/// its m copies the blocks appear as: A_1..A_e (Types I, II),
/// iota(A_1)..iota(A_e) (Type III), A_1..A_e0 then conj(A_1)..conj(A_e0)
/// (Type IV).
MatG rational_rep_exact(const VarietyModel& model, const Endomorphism& alpha);
MatC rational_rep(const VarietyModel& model, const Endomorphism& alpha);

/// A seeded random valid model with 1 <= g <= max_g (max_g <= 6). Albert
/// types are drawn uniformly among those that still fit.
VarietyModel random_model(std::uint64_t seed, int max_g, Characteristic characteristic);

/// A seeded random isogeny: real, Gaussian or quaternion entries whose
/// integer components lie in [-entry_bound, entry_bound]; every block is
/// nonsingular.
Endomorphism random_endomorphism(std::uint64_t seed, const VarietyModel& model, int entry_bound);

}  // namespace albertine
