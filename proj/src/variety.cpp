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

#include "albertine/variety.hpp"

#include <random>

#include "albertine/linalg.hpp"

namespace albertine {

std::string to_string(AlbertType t) {
  switch (t) {
    case AlbertType::I: return "I";
    case AlbertType::II: return "II";
    case AlbertType::III: return "III";
    case AlbertType::IV: return "IV";
  }
  return "?";
}

std::string to_string(Characteristic c) { return c == Characteristic::Zero ? "zero" : "positive"; }

BlockKind SimpleFactor::block_kind() const {
  switch (type) {
    case AlbertType::I:
    case AlbertType::II: return BlockKind::Real;
    case AlbertType::III: return BlockKind::Quaternion;
    case AlbertType::IV: return BlockKind::Complex;
  }
  return BlockKind::Real;
}

int SimpleFactor::block_count() const { return e0; }

int SimpleFactor::block_size() const {
  switch (type) {
    case AlbertType::I: return n;
    case AlbertType::II: return 2 * n;
    case AlbertType::III: return n;
    case AlbertType::IV: return d * n;
  }
  return n;
}

int VarietyModel::dimension() const {
  int g = 0;
  for (const auto& f : factors) g += f.dimension();
  return g;
}

std::vector<Violation> validate(const VarietyModel& model) {
  std::vector<Violation> out;
  if (model.factors.empty()) out.push_back({0, "model has no factors"});
  for (std::size_t j = 0; j < model.factors.size(); ++j) {
    const SimpleFactor& f = model.factors[j];
    auto fail = [&](std::string rule) { out.push_back({j, std::move(rule)}); };
    if (f.characteristic != model.factors.front().characteristic) {
      fail("characteristic differs from factor 0");
    }
    if (f.dim_a < 1 || f.n < 1 || f.e0 < 1 || f.d < 1) {
      fail("dim_A, n, e0 and d must be positive");
      continue;
    }
    const bool char0 = f.characteristic == Characteristic::Zero;
    const int e = f.e();
    switch (f.type) {
      case AlbertType::I:
        if (f.d != 1) fail("Type I requires d = 1");
        if (f.dim_a % e != 0) fail("Type I requires e | dim_A");
        break;
      case AlbertType::II:
        if (f.d != 2) fail("Type II requires d = 2");
        if (f.dim_a % (2 * e) != 0) fail("Type II requires 2e | dim_A");
        break;
      case AlbertType::III:
        if (f.d != 2) fail("Type III requires d = 2");
        if (char0 && f.dim_a % (2 * e) != 0) fail("Type III in characteristic zero requires 2e | dim_A");
        if (!char0 && f.dim_a % e != 0) fail("Type III in positive characteristic requires e | dim_A");
        break;
      case AlbertType::IV:
        if (char0 && f.dim_a % (f.e0 * f.d * f.d) != 0) {
          fail("Type IV in characteristic zero requires e0 d^2 | dim_A");
        }
        if (!char0 && f.dim_a % (f.e0 * f.d) != 0) {
          fail("Type IV in positive characteristic requires e0 d | dim_A");
        }
        break;
    }
    if ((2 * f.dim_a) % (e * f.d) != 0) fail("multiplicity 2 dim_A / (e d) is not an integer");
  }
  return out;
}

int multiplicity(const SimpleFactor& f) {
  const int denom = f.e() * f.d;
  if (denom <= 0 || f.dim_a <= 0 || (2 * f.dim_a) % denom != 0) {
    throw Error("multiplicity 2 dim_A / (e d) is not a positive integer for this factor");
  }
  return 2 * f.dim_a / denom;
}

BlockKind kind_of(const Block& b) {
  return static_cast<BlockKind>(b.index());
}

namespace {

std::size_t side(const Block& b) {
  return std::visit([](const auto& m) { return m.rows(); }, b);
}

bool square(const Block& b) {
  return std::visit([](const auto& m) { return m.square(); }, b);
}

std::string kind_name(BlockKind k) {
  switch (k) {
    case BlockKind::Real: return "real";
    case BlockKind::Complex: return "complex";
    case BlockKind::Quaternion: return "quaternion";
  }
  return "?";
}

template <class F>
Endomorphism map_blocks(const Endomorphism& alpha, F&& f) {
  Endomorphism out;
  out.label = alpha.label;
  for (const auto& blocks : alpha.factors) {
    auto& dst = out.factors.emplace_back();
    for (const auto& b : blocks) dst.push_back(std::visit([&](const auto& m) { return Block(f(m)); }, b));
  }
  return out;
}

}  // namespace

void check_shape(const VarietyModel& model, const Endomorphism& alpha) {
  if (alpha.factors.size() != model.factors.size()) {
    throw ShapeError("endomorphism has " + std::to_string(alpha.factors.size()) + " factors, model has " +
                     std::to_string(model.factors.size()));
  }
  for (std::size_t j = 0; j < model.factors.size(); ++j) {
    const SimpleFactor& f = model.factors[j];
    const auto& blocks = alpha.factors[j];
    const std::string where = "factor " + std::to_string(j) + ": ";
    if (static_cast<int>(blocks.size()) != f.block_count()) {
      throw ShapeError(where + "expected " + std::to_string(f.block_count()) + " blocks, got " +
                       std::to_string(blocks.size()));
    }
    for (const auto& b : blocks) {
      if (kind_of(b) != f.block_kind()) {
        throw ShapeError(where + "expected " + kind_name(f.block_kind()) + " blocks, got " +
                         kind_name(kind_of(b)));
      }
      if (!square(b) || static_cast<int>(side(b)) != f.block_size()) {
        throw ShapeError(where + "expected blocks of side " + std::to_string(f.block_size()));
      }
    }
  }
}

Endomorphism compose(const Endomorphism& a, const Endomorphism& b) {
  if (a.factors.size() != b.factors.size()) throw ShapeError("compose: factor count mismatch");
  Endomorphism out;
  for (std::size_t j = 0; j < a.factors.size(); ++j) {
    if (a.factors[j].size() != b.factors[j].size()) throw ShapeError("compose: block count mismatch");
    auto& dst = out.factors.emplace_back();
    for (std::size_t i = 0; i < a.factors[j].size(); ++i) {
      dst.push_back(std::visit(
          [](const auto& x, const auto& y) -> Block {
            using X = std::decay_t<decltype(x)>;
            using Y = std::decay_t<decltype(y)>;
            if constexpr (std::is_same_v<X, Y>) {
              return x * y;
            } else {
              throw ShapeError("compose: block kinds differ");
            }
          },
          a.factors[j][i], b.factors[j][i]));
    }
  }
  return out;
}

Endomorphism power(const Endomorphism& alpha, unsigned m) {
  return map_blocks(alpha, [m](const auto& x) { return matrix_power(x, m); });
}

Endomorphism scalar_endomorphism(const VarietyModel& model, const Int& n) {
  Endomorphism out;
  out.label = "multiplication by " + n.str();
  for (const auto& f : model.factors) {
    auto& dst = out.factors.emplace_back();
    const auto s = static_cast<std::size_t>(f.block_size());
    for (int i = 0; i < f.block_count(); ++i) {
      switch (f.block_kind()) {
        case BlockKind::Real: dst.emplace_back(MatZ(n * MatZ::identity(s))); break;
        case BlockKind::Complex: dst.emplace_back(MatG(GaussInt(n) * MatG::identity(s))); break;
        case BlockKind::Quaternion: dst.emplace_back(MatHZ(QuatInt(n) * MatHZ::identity(s))); break;
      }
    }
  }
  return out;
}

Endomorphism rosati(const Endomorphism& alpha) {
  return map_blocks(alpha, [](const auto& x) { return x.adjoint(); });
}

bool is_symmetric(const Endomorphism& alpha) { return rosati(alpha) == alpha; }

namespace {

PolyZ block_reduced_poly(const Block& b) {
  return std::visit(
      [](const auto& m) -> PolyZ {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, MatZ>) {
          return char_poly_exact(m);
        } else if constexpr (std::is_same_v<M, MatG>) {
          // N_{C/R} of det(tI - A)
          const PolyG p = char_poly_exact(m);
          return real_part_exact(p * conj(p));
        } else {
          return real_part_exact(char_poly_exact(quat_embed(m)));
        }
      },
      b);
}

}  // namespace

PolyZ reduced_char_poly_exact(const SimpleFactor& factor, const std::vector<Block>& blocks) {
  VarietyModel one{{factor}};
  check_shape(one, Endomorphism{{blocks}, {}});
  PolyZ out({Int(1)});
  for (const auto& b : blocks) out = out * block_reduced_poly(b);
  return out;
}

PolyC reduced_char_poly(const SimpleFactor& factor, const std::vector<Block>& blocks) {
  return to_complex(reduced_char_poly_exact(factor, blocks));
}

PolyZ full_char_poly_exact(const VarietyModel& model, const Endomorphism& alpha) {
  check_shape(model, alpha);
  PolyZ out({Int(1)});
  for (std::size_t j = 0; j < model.factors.size(); ++j) {
    const auto m = static_cast<unsigned>(multiplicity(model.factors[j]));
    out = out * reduced_char_poly_exact(model.factors[j], alpha.factors[j]).pow(m);
  }
  return out;
}

PolyC full_char_poly(const VarietyModel& model, const Endomorphism& alpha) {
  return to_complex(full_char_poly_exact(model, alpha));
}

Int degree(const VarietyModel& model, const Endomorphism& alpha) {
  return full_char_poly_exact(model, alpha).coefficient(0);
}

MatG rational_rep_exact(const VarietyModel& model, const Endomorphism& alpha) {
  check_shape(model, alpha);
  std::vector<MatG> pieces;
  for (std::size_t j = 0; j < model.factors.size(); ++j) {
    const SimpleFactor& f = model.factors[j];
    std::vector<MatG> unit;
    for (const auto& b : alpha.factors[j]) {
      std::visit(
          [&](const auto& m) {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, MatZ>) {
              unit.push_back(map_entries<Int, GaussInt>(m, [](const Int& x) { return GaussInt(x); }));
            } else if constexpr (std::is_same_v<M, MatG>) {
              unit.push_back(m);
            } else {
              unit.push_back(quat_embed(m));
            }
          },
          b);
    }
    if (f.type == AlbertType::IV) {
      const std::size_t half = unit.size();
      for (std::size_t i = 0; i < half; ++i) unit.push_back(unit[i].conjugate());
    }
    const int m = multiplicity(f);
    for (int c = 0; c < m; ++c) pieces.insert(pieces.end(), unit.begin(), unit.end());
  }
  return direct_sum(pieces);
}

MatC rational_rep(const VarietyModel& model, const Endomorphism& alpha) {
  return to_complex(rational_rep_exact(model, alpha));
}

namespace {

// Deterministic across standard libraries: mt19937_64's output sequence is
// fixed by the standard, the distributions are not.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  int uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

std::vector<SimpleFactor> candidates(AlbertType type, int budget, Characteristic ch) {
  std::vector<SimpleFactor> out;
  for (int dim_a = 1; dim_a <= budget; ++dim_a) {
    for (int n = 1; dim_a * n <= budget; ++n) {
      for (int e0 = 1; e0 <= dim_a; ++e0) {
        for (int d = 1; d <= (type == AlbertType::IV ? dim_a : 2); ++d) {
          SimpleFactor f{type, dim_a, n, e0, d, ch};
          if (validate(VarietyModel{{f}}).empty()) out.push_back(f);
        }
      }
    }
  }
  return out;
}

Block random_block(SeededRng& rng, const SimpleFactor& f, int bound) {
  const auto s = static_cast<std::size_t>(f.block_size());
  auto draw = [&] { return Int(rng.uniform(-bound, bound)); };
  // resample until nonsingular
  while (true) {
    switch (f.block_kind()) {
      case BlockKind::Real: {
        MatZ m(s, s);
        for (std::size_t i = 0; i < s; ++i)
          for (std::size_t j = 0; j < s; ++j) m(i, j) = draw();
        if (determinant(m) != 0) return m;
        break;
      }
      case BlockKind::Complex: {
        MatG m(s, s);
        for (std::size_t i = 0; i < s; ++i)
          for (std::size_t j = 0; j < s; ++j) {
            Int re = draw();
            m(i, j) = GaussInt(std::move(re), draw());
          }
        if (!determinant(m).is_zero()) return m;
        break;
      }
      case BlockKind::Quaternion: {
        MatHZ m(s, s);
        for (std::size_t i = 0; i < s; ++i)
          for (std::size_t j = 0; j < s; ++j) {
            Int a = draw();
            Int b = draw();
            Int c = draw();
            m(i, j) = QuatInt(std::move(a), std::move(b), std::move(c), draw());
          }
        if (!determinant(quat_embed(m)).is_zero()) return m;
        break;
      }
    }
  }
}

}  // namespace

VarietyModel random_model(std::uint64_t seed, int max_g, Characteristic characteristic) {
  if (max_g < 1 || max_g > 6) throw Error("random_model: max_g must lie in [1, 6]");
  SeededRng rng(seed);
  int remaining = rng.uniform(1, max_g);
  VarietyModel model;
  while (remaining > 0) {
    std::vector<std::vector<SimpleFactor>> per_type;
    for (AlbertType t : {AlbertType::I, AlbertType::II, AlbertType::III, AlbertType::IV}) {
      auto c = candidates(t, remaining, characteristic);
      if (!c.empty()) per_type.push_back(std::move(c));
    }
    const auto& pool = per_type[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(per_type.size()) - 1))];
    const SimpleFactor& pick = pool[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(pool.size()) - 1))];
    model.factors.push_back(pick);
    remaining -= pick.dimension();
  }
  return model;
}

Endomorphism random_endomorphism(std::uint64_t seed, const VarietyModel& model, int entry_bound) {
  if (entry_bound < 1) throw Error("random_endomorphism: entry_bound must be positive");
  SeededRng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  Endomorphism out;
  out.label = "random(seed=" + std::to_string(seed) + ")";
  for (const auto& f : model.factors) {
    auto& dst = out.factors.emplace_back();
    for (int i = 0; i < f.block_count(); ++i) dst.push_back(random_block(rng, f, entry_bound));
  }
  return out;
}

}  // namespace albertine
