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

#include "albertine/scalar.hpp"

namespace albertine {

/// q = a + b i + c j + d k in the Hamilton quaternions (i^2 = j^2 = k^2 = -1,
/// ij = k). T is double for numerics or Int for integral endomorphisms.
template <class T>
struct BasicQuaternion {
  T a{};
  T b{};
  T c{};
  T d{};

  BasicQuaternion() = default;
  BasicQuaternion(T real) : a(std::move(real)) {}  // NOLINT(google-explicit-constructor)
  BasicQuaternion(int real) : a(real) {}           // NOLINT(google-explicit-constructor)
  BasicQuaternion(T a_, T b_, T c_, T d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  BasicQuaternion& operator+=(const BasicQuaternion& o) {
    a += o.a;
    b += o.b;
    c += o.c;
    d += o.d;
    return *this;
  }
  BasicQuaternion& operator-=(const BasicQuaternion& o) {
    a -= o.a;
    b -= o.b;
    c -= o.c;
    d -= o.d;
    return *this;
  }
  BasicQuaternion& operator*=(const BasicQuaternion& o) { return *this = *this * o; }

  friend BasicQuaternion operator+(BasicQuaternion x, const BasicQuaternion& y) { return x += y; }
  friend BasicQuaternion operator-(BasicQuaternion x, const BasicQuaternion& y) { return x -= y; }
  friend BasicQuaternion operator-(const BasicQuaternion& x) { return {-x.a, -x.b, -x.c, -x.d}; }
  friend BasicQuaternion operator*(const BasicQuaternion& x, const BasicQuaternion& y) {
    return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
            x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
            x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
            x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
  }
  friend bool operator==(const BasicQuaternion& x, const BasicQuaternion& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }

  /// a^2 + b^2 + c^2 + d^2, which equals conj(q) q.
  [[nodiscard]] T norm() const { return a * a + b * b + c * c + d * d; }
};

template <class T>
BasicQuaternion<T> conj(const BasicQuaternion<T>& q) {
  return {q.a, -q.b, -q.c, -q.d};
}

using Quaternion = BasicQuaternion<double>;
using QuatInt = BasicQuaternion<Int>;

inline Quaternion to_quaternion(const QuatInt& q) {
  return {to_double(q.a), to_double(q.b), to_double(q.c), to_double(q.d)};
}

}  // namespace albertine
