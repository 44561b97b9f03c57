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

#ifndef DISCORD_DENSITY_H
#define DISCORD_DENSITY_H

#include <array>

#include "discord/linalg.h"

namespace discord {

/// Gates applied to every density matrix.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kNegativeEigenTol = 1e-9;

/// Local Bloch vectors r (party a), s (party b) and the diagonal c of the
/// correlation tensor. The state is
///   rho = 1/4 (I(x)I + r.sigma(x)I + I(x)s.sigma + sum_i c_i sigma_i(x)sigma_i).
struct BlochParams {
  Vec3 r{};
  Vec3 s{};
  Vec3 c{};

  bool operator==(const BlochParams &) const = default;
};

/// 4x4 density matrix that passed the Hermitian / trace / PSD gates.
class DensityMatrix4 {
 public:
  /// Validates `m`; throws PhysicalityError if any gate fails.
  static DensityMatrix4 from_matrix(const Mat4 &m);

  const Mat4 &matrix() const {
    return m_;
  }
  Complex operator()(std::size_t row, std::size_t col) const {
    return m_(row, col);
  }

 private:
  explicit DensityMatrix4(const Mat4 &m) : m_(m) {
  }
  Mat4 m_;
};

/// Single-qubit density matrix.
class Qubit2 {
 public:
  /// Maximally mixed.
  Qubit2() {
    m_(0, 0) = 0.5;
    m_(1, 1) = 0.5;
  }
  static Qubit2 from_matrix(const Mat2 &m);
  static Qubit2 from_bloch(const Vec3 &v);

  const Mat2 &matrix() const {
    return m_;
  }
  Vec3 bloch_vector() const;
  /// Descending; closed form for a 2x2 Hermitian matrix.
  std::array<double, 2> eigenvalues() const;

 private:
  explicit Qubit2(const Mat2 &m) : m_(m) {
  }
  Mat2 m_;
};

struct Spectrum {
  /// Sorted descending.
  std::array<double, 4> eigenvalues{};
  /// eigenvectors[k] belongs to eigenvalues[k]; first non-negligible
  /// component is real and positive.
  std::array<std::array<Complex, 4>, 4> eigenvectors{};

  /// U diag(lambda) U^dagger.
  Mat4 reconstruct() const;
};

/// Jacobi sweep settings. Fixed by the contract; exposed for tests.
inline constexpr double kJacobiOffDiagonalTol = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;

Mat4 build_matrix(const BlochParams &p);
/// Throws PhysicalityError when the parameters do not describe a state.
DensityMatrix4 build_state(const BlochParams &p);
/// Smallest eigenvalue of build_matrix(p) >= -1e-9 and |r|, |s| <= 1.
bool is_physical(const BlochParams &p);

/// tr(rho P_i (x) P_j) with P_0 = I and P_1..3 the Paulis.
double pauli_expectation(const Mat4 &rho, int left, int right);

/// Inverse of build_state. Throws OutOfFamilyError if any off-diagonal
/// correlation tr(rho sigma_i (x) sigma_j), i != j, exceeds 1e-9.
BlochParams extract_bloch(const DensityMatrix4 &rho);

/// Cyclic complex Jacobi. Throws DomainError for non-Hermitian input and
/// ConvergenceError if the off-diagonal Frobenius norm stays above 1e-13.
Spectrum hermitian_eigen(const Mat4 &m);
Spectrum hermitian_eigen(const DensityMatrix4 &rho);

enum class Side { kA, kB };

/// Side::kA keeps party a (traces out b).
Qubit2 partial_trace(const DensityMatrix4 &rho, Side keep);

/// -sum lambda log2 lambda, in bits. Eigenvalues in [-1e-9, 0) count as 0;
/// lower ones raise PhysicalityError.
double entropy_of_eigenvalues(const double *eigenvalues, std::size_t n);
double von_neumann_entropy(const DensityMatrix4 &rho);
double von_neumann_entropy(const Qubit2 &rho);

/// x log2 x with 0 log 0 = 0.
double xlog2x(double x);

/// H_eps(x) = 1/2 (1+eps+x) log2(1+eps+x) + 1/2 (1+eps-x) log2(1+eps-x).
/// Arguments in [-1e-12, 1e-12) are clamped to 0; below that DomainError.
double entropic_h(double eps, double x);

inline double entropic_h0(double x) {
  return entropic_h(0.0, x);
}

}  // namespace discord

#endif  // DISCORD_DENSITY_H
