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

#include "discord/density.h"

#include <cmath>

#include "gtest/gtest.h"

#include "discord/errors.h"
#include "discord/sampling.h"
#include "test_util.h"

using namespace discord;

namespace {

const BlochParams kStateA{{0.0, 0.0, 0.0}, {0.1, 0.2, 0.2}, {0.3, 0.3, 0.3}};
const BlochParams kSinglet{{0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, {-1.0, -1.0, -1.0}};

}  // namespace

TEST(density, maximally_mixed) {
  DensityMatrix4 rho = build_state(BlochParams{});
  EXPECT_EQ(rho.matrix(), 0.25 * Mat4::identity());
  Spectrum eig = hermitian_eigen(rho);
  for (double v : eig.eigenvalues) {
    EXPECT_NEAR(v, 0.25, 1e-15);
  }
  EXPECT_NEAR(von_neumann_entropy(rho), 2.0, 1e-14);
}

TEST(density, singlet_is_pure) {
  DensityMatrix4 rho = build_state(kSinglet);
  Spectrum eig = hermitian_eigen(rho);
  EXPECT_NEAR(eig.eigenvalues[0], 1.0, 1e-14);
  for (int k = 1; k < 4; ++k) {
    EXPECT_NEAR(eig.eigenvalues[k], 0.0, 1e-14);
  }
  // (|01> - |10>)/sqrt(2), phase fixed by the first nonzero component.
  EXPECT_NEAR(eig.eigenvectors[0][1].real(), std::sqrt(0.5), 1e-14);
  EXPECT_NEAR(eig.eigenvectors[0][2].real(), -std::sqrt(0.5), 1e-14);
  EXPECT_NEAR(von_neumann_entropy(rho), 0.0, 1e-12);
  for (Side side : {Side::kA, Side::kB}) {
    Qubit2 q = partial_trace(rho, side);
    EXPECT_LT(q.matrix().max_abs_diff(Qubit2().matrix()), 1e-15);
  }
}

TEST(density, state_a_matrix_entries) {
  Mat4 m = build_matrix(kStateA);
  EXPECT_NEAR(m(0, 0).real(), 0.375, 1e-15);
  EXPECT_NEAR(m(0, 1).real(), 0.025, 1e-15);
  EXPECT_NEAR(m(0, 1).imag(), -0.05, 1e-15);
  EXPECT_NEAR(m(1, 2).real(), 0.15, 1e-15);
  EXPECT_NEAR(m(3, 3).real(), 0.275, 1e-15);
}

TEST(density, state_a_spectrum) {
  Spectrum eig = hermitian_eigen(build_state(kStateA));
  // 0.3427... and 0.0072... are 0.175 +- sqrt(0.028125).
  EXPECT_NEAR(eig.eigenvalues[0], 0.4, 1e-12);
  EXPECT_NEAR(eig.eigenvalues[1], 0.3427050983124842, 1e-12);
  EXPECT_NEAR(eig.eigenvalues[2], 0.25, 1e-12);
  EXPECT_NEAR(eig.eigenvalues[3], 0.007294901687515751, 1e-12);
  EXPECT_LT(eig.reconstruct().max_abs_diff(build_matrix(kStateA)), 1e-12);

  double from_list = entropy_of_eigenvalues(eig.eigenvalues.data(), 4);
  EXPECT_NEAR(von_neumann_entropy(build_state(kStateA)), from_list, 1e-14);
}

TEST(density, state_a_marginal_b) {
  Qubit2 b = partial_trace(build_state(kStateA), Side::kB);
  Qubit2 expected = Qubit2::from_bloch({0.1, 0.2, 0.2});
  EXPECT_LT(b.matrix().max_abs_diff(expected.matrix()), 1e-15);
  Vec3 v = b.bloch_vector();
  EXPECT_NEAR(v[0], 0.1, 1e-15);
  EXPECT_NEAR(v[1], 0.2, 1e-15);
  EXPECT_NEAR(v[2], 0.2, 1e-15);
  Qubit2 a = partial_trace(build_state(kStateA), Side::kA);
  EXPECT_LT(a.matrix().max_abs_diff(Qubit2().matrix()), 1e-15);
}

TEST(density, physicality_gates) {
  EXPECT_THROW(build_state({{0, 0, 0}, {0, 0, 0}, {1, 1, 1}}), PhysicalityError);
  EXPECT_THROW(build_state({{1.2, 0, 0}, {0, 0, 0}, {0, 0, 0}}), PhysicalityError);
  EXPECT_FALSE(is_physical({{0, 0, 0}, {0, 0, 0}, {0.5, 0.5, 0.5}}));
  EXPECT_TRUE(is_physical(kSinglet));

  Mat4 m = 0.25 * Mat4::identity();
  m(0, 1) = Complex(0.0, 0.01);  // not Hermitian
  EXPECT_THROW(DensityMatrix4::from_matrix(m), PhysicalityError);
  Mat4 t = 0.3 * Mat4::identity();
  EXPECT_THROW(DensityMatrix4::from_matrix(t), PhysicalityError);
}

TEST(density, extract_bloch_round_trip) {
  EXPECT_EQ(extract_bloch(build_state(BlochParams{})), BlochParams{});
  auto rng = seeded_engine(11);
  for (int trial = 0; trial < 1000; ++trial) {
    BlochParams p = sample_family(Family::kGeneric, rng);
    BlochParams q = extract_bloch(build_state(p));
    for (int i = 0; i < 3; ++i) {
      ASSERT_NEAR(q.r[i], p.r[i], 1e-12);
      ASSERT_NEAR(q.s[i], p.s[i], 1e-12);
      ASSERT_NEAR(q.c[i], p.c[i], 1e-12);
    }
  }
}

TEST(density, extract_bloch_rejects_off_diagonal_correlations) {
  Mat4 m = 0.25 * Mat4::identity();
  Mat4 extra = kron(pauli(0), pauli(1));
  extra *= 0.1 / 4.0;
  m += extra;
  DensityMatrix4 rho = DensityMatrix4::from_matrix(m);
  EXPECT_NEAR(pauli_expectation(rho.matrix(), 1, 2), 0.1, 1e-15);
  EXPECT_THROW(extract_bloch(rho), OutOfFamilyError);
}

TEST(density, jacobi_reconstruction_random_hermitian) {
  auto rng = seeded_engine(5);
  for (int trial = 0; trial < 1000; ++trial) {
    Mat4 m = test_util::random_hermitian_unit_trace(rng);
    Spectrum eig = hermitian_eigen(m);
    ASSERT_LE(eig.reconstruct().max_abs_diff(m), 1e-10);
    double sum = 0.0;
    for (int k = 0; k < 4; ++k) {
      sum += eig.eigenvalues[k];
      if (k > 0) {
        ASSERT_GE(eig.eigenvalues[k - 1], eig.eigenvalues[k]);
      }
    }
    ASSERT_NEAR(sum, 1.0, 1e-10);
    // Orthonormal eigenvectors.
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        Complex ip = 0.0;
        for (int i = 0; i < 4; ++i) {
          ip += std::conj(eig.eigenvectors[a][i]) * eig.eigenvectors[b][i];
        }
        ASSERT_NEAR(std::abs(ip - Complex(a == b ? 1.0 : 0.0)), 0.0, 1e-12);
      }
    }
  }
}

TEST(density, jacobi_is_deterministic) {
  Mat4 m = build_matrix(kStateA);
  Spectrum a = hermitian_eigen(m);
  Spectrum b = hermitian_eigen(m);
  EXPECT_EQ(a.eigenvalues, b.eigenvalues);
  EXPECT_EQ(a.eigenvectors, b.eigenvectors);
}

TEST(density, jacobi_rejects_non_hermitian) {
  Mat4 m = Mat4::identity();
  m(0, 3) = 1.0;
  EXPECT_THROW(hermitian_eigen(m), DomainError);
}

TEST(density, theorem1_family_eigenvalues) {
  auto rng = seeded_engine(8);
  for (int trial = 0; trial < 200; ++trial) {
    BlochParams p = sample_family(Family::kTheorem1, rng);
    double c = p.c[0];
    double r = norm(p.r);
    std::array<double, 4> expected{0.25 * (1 + c + r), 0.25 * (1 + c - r),
                                   0.25 * (1 - c + std::sqrt(4 * c * c + r * r)),
                                   0.25 * (1 - c - std::sqrt(4 * c * c + r * r))};
    std::sort(expected.begin(), expected.end(), std::greater<>());
    Spectrum eig = hermitian_eigen(build_state(p));
    for (int k = 0; k < 4; ++k) {
      ASSERT_NEAR(eig.eigenvalues[k], expected[k], 1e-10);
    }
  }
}

TEST(density, entropy_bounds_and_rank) {
  auto rng = seeded_engine(9);
  for (int trial = 0; trial < 1000; ++trial) {
    DensityMatrix4 rho = build_state(sample_family(Family::kGeneric, rng));
    double s = von_neumann_entropy(rho);
    ASSERT_GE(s, 0.0);
    ASSERT_LE(s, 2.0 + 1e-12);
  }
  EXPECT_NEAR(von_neumann_entropy(build_state(kSinglet)), 0.0, 1e-12);
  // |00><00| is pure; (|00><00| + |11><11|)/2 has one bit.
  DensityMatrix4 pure00 = build_state({{0, 0, 1}, {0, 0, 1}, {0, 0, 1}});
  EXPECT_NEAR(von_neumann_entropy(pure00), 0.0, 1e-12);
  DensityMatrix4 classical = build_state({{0, 0, 0}, {0, 0, 0}, {0, 0, 1}});
  EXPECT_NEAR(von_neumann_entropy(classical), 1.0, 1e-12);
}

TEST(density, entropy_clamps_rounding_noise) {
  double tiny[4] = {0.5, 0.5, -5e-10, 0.0};
  EXPECT_NEAR(entropy_of_eigenvalues(tiny, 4), 1.0, 1e-12);
  double bad[4] = {0.6, 0.5, -1e-3, 0.0};
  EXPECT_THROW(entropy_of_eigenvalues(bad, 4), PhysicalityError);
}

TEST(density, qubit_entropy_matches_entropic_function) {
  auto rng = seeded_engine(10);
  for (int trial = 0; trial < 1000; ++trial) {
    Vec3 v = uniform_ball(rng);
    Qubit2 q = Qubit2::from_bloch(v);
    ASSERT_NEAR(von_neumann_entropy(q) + entropic_h0(norm(v)), 1.0, 1e-12);
    auto ev = q.eigenvalues();
    ASSERT_NEAR(ev[0], 0.5 * (1 + norm(v)), 1e-14);
    ASSERT_NEAR(ev[1], 0.5 * (1 - norm(v)), 1e-14);
  }
}

TEST(density, entropic_function) {
  EXPECT_EQ(entropic_h0(0.0), 0.0);
  EXPECT_NEAR(entropic_h0(1.0), 1.0, 1e-15);
  for (double eps : {-0.4, -0.1, 0.0, 0.2, 0.5}) {
    EXPECT_NEAR(entropic_h(eps, 0.0), (1 + eps) * std::log2(1 + eps), 1e-15);
    for (double x = -0.5; x <= 0.5; x += 0.01) {
      ASSERT_EQ(entropic_h(eps, x), entropic_h(eps, -x));
      ASSERT_GE(entropic_h(eps, x), entropic_h(eps, 0.0) - 1e-15);
    }
  }
  EXPECT_THROW(entropic_h(0.0, 1.1), DomainError);
  EXPECT_THROW(entropic_h(-0.5, 0.6), DomainError);
  // Rounding at the domain edge is clamped.
  EXPECT_NEAR(entropic_h0(1.0 + 1e-13), 1.0, 1e-12);
}
