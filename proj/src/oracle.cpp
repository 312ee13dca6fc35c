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

#include "albertine/oracle.hpp"

#include <array>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "albertine/albert.hpp"
#include "albertine/exterior.hpp"

namespace albertine {

AlternatingForm::AlternatingForm(MatG m) : m_(std::move(m)) {
  if (!m_.square() || m_.rows() % 2 != 0) {
    throw OracleError("alternating form must be square of even size, got " + m_.shape());
  }
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    if (!m_(i, i).is_zero()) throw OracleError("alternating form has a nonzero diagonal entry");
    for (std::size_t j = i + 1; j < m_.cols(); ++j) {
      if (!(m_(i, j) == -m_(j, i))) throw OracleError("form is not antisymmetric");
    }
  }
}

namespace {

void put_symplectic(MatG& j, std::size_t offset, std::size_t half) {
  for (std::size_t i = 0; i < half; ++i) {
    j(offset + i, offset + half + i) = GaussInt(1);
    j(offset + half + i, offset + i) = GaussInt(-1);
  }
}

}  // namespace

AlternatingForm standard_polarization(const VarietyModel& model) {
  if (!validate(model).empty()) throw OracleError("standard_polarization needs a valid model");
  const auto dim = static_cast<std::size_t>(2 * model.dimension());
  MatG j(dim, dim);
  std::size_t offset = 0;
  for (const auto& f : model.factors) {
    const int m = multiplicity(f);
    const auto unit = static_cast<std::size_t>(f.e0 * f.block_size());
    switch (f.type) {
      case AlbertType::I:
      case AlbertType::II:
        if (m % 2 != 0) throw OracleError("Types I and II need an even multiplicity");
        for (int c = 0; c < m; c += 2) {
          put_symplectic(j, offset, unit);
          offset += 2 * unit;
        }
        break;
      case AlbertType::III:
        for (int c = 0; c < m * f.e0; ++c) {
          const auto n = static_cast<std::size_t>(f.n);
          put_symplectic(j, offset, n);
          offset += 2 * n;
        }
        break;
      case AlbertType::IV:
        for (int c = 0; c < m; ++c) {
          put_symplectic(j, offset, unit);
          offset += 2 * unit;
        }
        break;
    }
  }
  if (offset != dim) throw OracleError("polarization layout does not cover first cohomology");
  return AlternatingForm(std::move(j));
}

bool polarization_compatible(const VarietyModel& model, const AlternatingForm& j, const Endomorphism& alpha) {
  const MatG m = rational_rep_exact(model, alpha);
  const MatG dagger = rational_rep_exact(model, rosati(alpha));
  // J^{-1} M^T J = M^dagger  <=>  M^T J = J M^dagger
  return m.transpose() * j.matrix() == j.matrix() * dagger;
}

AlternatingForm pullback_form(const MatG& m, const AlternatingForm& w, unsigned power) {
  if (m.rows() != w.size() || !m.square()) {
    throw ShapeError("pullback of a " + w.matrix().shape() + " form along " + m.shape());
  }
  const MatG p = matrix_power(m, power);
  return AlternatingForm(p.transpose() * w.matrix() * p);
}

namespace {

void enumerate(std::size_t n, std::vector<bool>& used, Matching& cur, std::vector<Matching>& out) {
  std::size_t i = 0;
  while (i < n && used[i]) ++i;
  if (i == n) {
    out.push_back(cur);
    return;
  }
  used[i] = true;
  int parity = 0;
  for (std::size_t j = i + 1; j < n; ++j) {
    if (used[j]) continue;
    used[j] = true;
    const int saved = cur.sign;
    cur.sign = parity % 2 == 0 ? saved : -saved;
    cur.pairs.emplace_back(static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j));
    enumerate(n, used, cur, out);
    cur.pairs.pop_back();
    cur.sign = saved;
    used[j] = false;
    ++parity;
  }
  used[i] = false;
}

std::array<std::vector<Matching>, kMaxOracleGenus + 1> build_matchings() {
  std::array<std::vector<Matching>, kMaxOracleGenus + 1> table;
  for (std::size_t g = 0; g <= kMaxOracleGenus; ++g) {
    std::vector<bool> used(2 * g, false);
    Matching cur;
    enumerate(2 * g, used, cur, table[g]);
  }
  return table;
}

std::size_t check_forms(std::span<const AlternatingForm> forms) {
  const std::size_t g = forms.size();
  if (g > kMaxOracleGenus) {
    throw OracleError("mixed intersection supports g <= 6, got " + std::to_string(g));
  }
  for (const auto& w : forms) {
    if (w.size() != 2 * g) {
      throw OracleError("mixed intersection of " + std::to_string(g) + " forms needs " + std::to_string(2 * g) +
                        "-dimensional forms");
    }
  }
  return g;
}

// Signed permanent term of one matching, by dynamic programming over the
// set of pair slots already filled.
GaussInt matching_term(std::span<const AlternatingForm> forms, const Matching& mt) {
  const std::size_t g = forms.size();
  // a column (pair) on which every form vanishes kills the term
  for (const auto& [i, j] : mt.pairs) {
    bool any = false;
    for (const auto& w : forms) any = any || !w(i, j).is_zero();
    if (!any) return {};
  }
  std::vector<GaussInt> dp(std::size_t{1} << g);
  dp[0] = GaussInt(1);
  for (std::size_t mask = 0; mask + 1 < dp.size(); ++mask) {
    if (dp[mask].is_zero()) continue;
    const auto row = static_cast<std::size_t>(std::popcount(mask));
    const AlternatingForm& w = forms[row];
    for (std::size_t p = 0; p < g; ++p) {
      if (mask & (std::size_t{1} << p)) continue;
      const GaussInt& x = w(mt.pairs[p].first, mt.pairs[p].second);
      if (x.is_zero()) continue;
      dp[mask | (std::size_t{1} << p)] += dp[mask] * x;
    }
  }
  GaussInt term = std::move(dp.back());
  return mt.sign < 0 ? -term : term;
}

}  // namespace

const std::vector<Matching>& perfect_matchings(std::size_t g) {
  static const auto table = build_matchings();
  if (g > kMaxOracleGenus) throw OracleError("perfect matchings are tabulated for g <= 6");
  return table[g];
}

namespace kernels {

GaussInt matching_sum_serial(std::span<const AlternatingForm> forms) {
  const std::size_t g = check_forms(forms);
  GaussInt total;
  for (const auto& mt : perfect_matchings(g)) total += matching_term(forms, mt);
  return total;
}

GaussInt matching_sum_parallel(std::span<const AlternatingForm> forms) {
  const std::size_t g = check_forms(forms);
  const auto& table = perfect_matchings(g);
  const auto count = static_cast<std::ptrdiff_t>(table.size());
#ifdef _OPENMP
  std::vector<GaussInt> partial(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    GaussInt local;
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) local += matching_term(forms, table[static_cast<std::size_t>(i)]);
    partial[static_cast<std::size_t>(omp_get_thread_num())] = std::move(local);
  }
  // fixed reduction order; exact arithmetic makes it order-independent anyway
  GaussInt total;
  for (const auto& p : partial) total += p;
  return total;
#else
  GaussInt total;
  for (std::ptrdiff_t i = 0; i < count; ++i) total += matching_term(forms, table[static_cast<std::size_t>(i)]);
  return total;
#endif
}

}  // namespace kernels

GaussInt mixed_intersection(std::span<const AlternatingForm> forms) {
  const std::size_t g = check_forms(forms);
  return perfect_matchings(g).size() >= 945 ? kernels::matching_sum_parallel(forms)
                                            : kernels::matching_sum_serial(forms);
}

GaussInt pfaffian(const AlternatingForm& w) {
  const std::size_t g = w.genus();
  const std::vector<AlternatingForm> slots(g, w);
  Int fact = 1;
  for (std::size_t i = 2; i <= g; ++i) fact *= i;
  return exact_div(mixed_intersection(slots), fact);
}

namespace {

Rational real_ratio(const GaussInt& num, const GaussInt& den) {
  if (!num.is_real() || !den.is_real()) throw OracleError("intersection number is not real");
  if (den.re == 0) throw OracleError("degenerate polarization");
  return make_rational(num.re, den.re);
}

std::vector<AlternatingForm> slots(const AlternatingForm& a, int k, const AlternatingForm& b, int rest) {
  std::vector<AlternatingForm> out(static_cast<std::size_t>(k), a);
  out.insert(out.end(), static_cast<std::size_t>(rest), b);
  return out;
}

}  // namespace

IntersectionRatio intersection_ratio(const VarietyModel& model, const Endomorphism& alpha, int k, unsigned m) {
  const int g = model.dimension();
  if (k < 0 || k > g) throw OracleError("intersection_ratio: k out of range");
  const AlternatingForm j = standard_polarization(model);
  const AlternatingForm pulled = pullback_form(rational_rep_exact(model, alpha), j, m);
  const GaussInt num = mixed_intersection(slots(pulled, k, j, g - k));
  const GaussInt den = mixed_intersection(slots(j, 0, j, g));
  const Rational r = real_ratio(num, den);
  return {k, m, numerator(r), denominator(r)};
}

Rational normalized_intersection(const VarietyModel& model, const Endomorphism& alpha, int k, unsigned m) {
  const auto g = static_cast<std::size_t>(model.dimension());
  return Rational(binomial(g, static_cast<std::size_t>(k))) * intersection_ratio(model, alpha, k, m).value();
}

CorollaryBCheck verify_corollary_b(const VarietyModel& model, const Endomorphism& alpha) {
  CorollaryBCheck out;
  const int g = model.dimension();
  out.closed = corollary_b_coefficients(model, alpha);
  out.degree = degree(model, alpha);
  out.pass = true;
  for (int k = 0; k <= g; ++k) {
    out.oracle.push_back(normalized_intersection(model, alpha, k));
    const Rational& lhs = out.oracle.back();
    const double rhs = out.closed[static_cast<std::size_t>(k)];
    const bool integral = denominator(lhs) == 1;
    const bool rounds = std::abs(rhs - std::nearbyint(rhs)) <= 1e-6 * std::max(1.0, std::abs(rhs));
    if (!integral || !rounds || numerator(lhs) != round_to_int(rhs)) out.pass = false;
  }
  if (out.oracle.back() != Rational(out.degree)) out.pass = false;
  return out;
}

Rational pfaffian_albert_value(const VarietyModel& model, const Endomorphism& alpha, const Int& n) {
  const int g = model.dimension();
  const AlternatingForm j = standard_polarization(model);
  const AlternatingForm pulled = pullback_form(rational_rep_exact(model, alpha), j);
  const AlternatingForm shifted = GaussInt(n) * j - pulled;
  return real_ratio(mixed_intersection(slots(shifted, g, j, 0)), mixed_intersection(slots(j, g, j, 0)));
}

PolyQ interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw Error("interpolate: need matching nonempty samples");
  const std::size_t n = xs.size();
  std::vector<Rational> coef = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  PolyQ result({coef[n - 1]});
  for (std::size_t i = n - 1; i-- > 0;) {
    result = result * PolyQ({-xs[i], Rational(1)}) + PolyQ({coef[i]});
  }
  return result;
}

PfaffianIdentityCheck verify_pfaffian_identity(const VarietyModel& model, const Endomorphism& alpha) {
  PfaffianIdentityCheck out;
  const int g = model.dimension();
  const Endomorphism sym = compose(rosati(alpha), alpha);
  const PolyZ char_sym = full_char_poly_exact(model, sym);
  std::vector<Rational> xs;
  out.squares_to_char_poly = true;
  for (int n = 0; n <= 2 * g + 1; ++n) {
    xs.emplace_back(n);
    out.samples.push_back(pfaffian_albert_value(model, alpha, Int(n)));
    const Rational sq = out.samples.back() * out.samples.back();
    if (sq != Rational(char_sym(Int(n)))) out.squares_to_char_poly = false;
  }
  out.interpolated = interpolate(xs, out.samples);

  const PolyC closed = albert_poly_symmetric(model, sym);
  std::vector<Int> rounded;
  bool rounds = true;
  for (const auto& z : closed.coefficients()) {
    rounded.push_back(round_to_int(z.real()));
    rounds = rounds && std::abs(z.real() - std::nearbyint(z.real())) <= 1e-6 * std::max(1.0, std::abs(z.real()));
  }
  out.albert = PolyZ(std::move(rounded));
  out.pass = rounds && out.squares_to_char_poly && out.interpolated == to_rational(out.albert);
  return out;
}

}  // namespace albertine
