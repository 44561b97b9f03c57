// Copyright 2026 The discord-kit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DISCORD_LINALG_H
#define DISCORD_LINALG_H

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace discord {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

inline double dot(const Vec3 &a, const Vec3 &b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm(const Vec3 &a) {
  return std::sqrt(dot(a, a));
}

inline Vec3 operator+(const Vec3 &a, const Vec3 &b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline Vec3 operator-(const Vec3 &a, const Vec3 &b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline Vec3 operator*(double k, const Vec3 &a) {
  return {k * a[0], k * a[1], k * a[2]};
}

/// Component-wise product.
inline Vec3 hadamard(const Vec3 &a, const Vec3 &b) {
  return {a[0] * b[0], a[1] * b[1], a[2] * b[2]};
}

/// Dense N x N complex matrix stored row-major.
template <std::size_t N>
struct SquareMatrix {
  std::array<Complex, N * N> data{};

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) {
      m(i, i) = 1.0;
    }
    return m;
  }

  Complex &operator()(std::size_t row, std::size_t col) {
    return data[row * N + col];
  }
  const Complex &operator()(std::size_t row, std::size_t col) const {
    return data[row * N + col];
  }

  bool operator==(const SquareMatrix &) const = default;

  SquareMatrix adjoint() const {
    SquareMatrix out;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        out(i, j) = std::conj((*this)(j, i));
      }
    }
    return out;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      t += (*this)(i, i);
    }
    return t;
  }

  SquareMatrix &operator+=(const SquareMatrix &other) {
    for (std::size_t k = 0; k < N * N; ++k) {
      data[k] += other.data[k];
    }
    return *this;
  }

  SquareMatrix &operator*=(Complex k) {
    for (auto &x : data) {
      x *= k;
    }
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix &b) {
    a += b;
    return a;
  }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix &b) {
    for (std::size_t k = 0; k < N * N; ++k) {
      a.data[k] -= b.data[k];
    }
    return a;
  }
  friend SquareMatrix operator*(Complex k, SquareMatrix a) {
    a *= k;
    return a;
  }
  friend SquareMatrix operator*(const SquareMatrix &a, const SquareMatrix &b) {
    SquareMatrix out;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t k = 0; k < N; ++k) {
        Complex aik = a(i, k);
        if (aik == Complex(0.0)) {
          continue;
        }
        for (std::size_t j = 0; j < N; ++j) {
          out(i, j) += aik * b(k, j);
        }
      }
    }
    return out;
  }

  /// Largest entry-wise modulus of (this - other).
  double max_abs_diff(const SquareMatrix &other) const {
    double m = 0.0;
    for (std::size_t k = 0; k < N * N; ++k) {
      m = std::max(m, std::abs(data[k] - other.data[k]));
    }
    return m;
  }

  /// Largest |A_ij - conj(A_ji)|.
  double hermiticity_defect() const {
    return max_abs_diff(adjoint());
  }
};

using Mat2 = SquareMatrix<2>;
using Mat4 = SquareMatrix<4>;

/// a (x) b with the first factor as the high-order index (|00>,|01>,|10>,|11>).
inline Mat4 kron(const Mat2 &a, const Mat2 &b) {
  Mat4 out;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t l = 0; l < 2; ++l) {
          out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

/// Standard Pauli matrices; index 0,1,2 = sigma_x, sigma_y, sigma_z.
inline Mat2 pauli(int axis) {
  Mat2 m;
  switch (axis) {
    case 0:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case 1:
      m(0, 1) = Complex(0.0, -1.0);
      m(1, 0) = Complex(0.0, 1.0);
      break;
    default:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

/// v . sigma
inline Mat2 pauli_dot(const Vec3 &v) {
  Mat2 m;
  m(0, 0) = v[2];
  m(1, 1) = -v[2];
  m(0, 1) = Complex(v[0], -v[1]);
  m(1, 0) = Complex(v[0], v[1]);
  return m;
}

}  // namespace discord

#endif  // DISCORD_LINALG_H
