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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "discord/errors.h"

namespace discord {

namespace {

std::string describe(double value) {
  std::ostringstream out;
  out.precision(17);
  out << value;
  return out.str();
}

// Lexicographic comparison on (re_0, im_0, re_1, im_1, ...).
bool lex_greater(const std::array<Complex, 4> &a, const std::array<Complex, 4> &b) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (a[i].real() != b[i].real()) {
      return a[i].real() > b[i].real();
    }
    if (a[i].imag() != b[i].imag()) {
      return a[i].imag() > b[i].imag();
    }
  }
  return false;
}

constexpr double kPhaseReferenceTol = 1e-10;
constexpr double kEigenTieTol = 1e-12;

void fix_phase(std::array<Complex, 4> &v) {
  for (const Complex &x : v) {
    double mag = std::abs(x);
    if (mag > kPhaseReferenceTol) {
      Complex phase = std::conj(x) / mag;
      for (Complex &y : v) {
        y *= phase;
      }
      return;
    }
  }
}

double off_diagonal_norm(const Mat4 &a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (i != j) {
        sum += std::norm(a(i, j));
      }
    }
  }
  return std::sqrt(sum);
}

}  // namespace

DensityMatrix4 DensityMatrix4::from_matrix(const Mat4 &m) {
  for (const Complex &x : m.data) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
      throw PhysicalityError("density matrix has non-finite entries");
    }
  }
  double herm = m.hermiticity_defect();
  if (herm > kHermitianTol) {
    throw PhysicalityError("density matrix is not Hermitian (defect " + describe(herm) + ")");
  }
  double trace_error = std::abs(m.trace() - 1.0);
  if (trace_error > kTraceTol) {
    throw PhysicalityError("density matrix trace deviates from 1 by " + describe(trace_error));
  }
  Spectrum spectrum = hermitian_eigen(m);
  double smallest = spectrum.eigenvalues[3];
  if (smallest < -kNegativeEigenTol) {
    throw PhysicalityError("density matrix has negative eigenvalue " + describe(smallest));
  }
  return DensityMatrix4(m);
}

Qubit2 Qubit2::from_matrix(const Mat2 &m) {
  double herm = m.hermiticity_defect();
  if (herm > kHermitianTol) {
    throw PhysicalityError("qubit matrix is not Hermitian (defect " + describe(herm) + ")");
  }
  double trace_error = std::abs(m.trace() - 1.0);
  if (trace_error > kTraceTol) {
    throw PhysicalityError("qubit matrix trace deviates from 1 by " + describe(trace_error));
  }
  Qubit2 q(m);
  double smallest = q.eigenvalues()[1];
  if (smallest < -kNegativeEigenTol) {
    throw PhysicalityError("qubit matrix has negative eigenvalue " + describe(smallest));
  }
  return q;
}

Qubit2 Qubit2::from_bloch(const Vec3 &v) {
  Mat2 m = Mat2::identity() + pauli_dot(v);
  m *= 0.5;
  return from_matrix(m);
}

Vec3 Qubit2::bloch_vector() const {
  return {2.0 * m_(1, 0).real(), 2.0 * m_(1, 0).imag(), (m_(0, 0) - m_(1, 1)).real()};
}

std::array<double, 2> Qubit2::eigenvalues() const {
  double a = m_(0, 0).real();
  double d = m_(1, 1).real();
  double half_gap = std::hypot(0.5 * (a - d), std::abs(m_(0, 1)));
  double mid = 0.5 * (a + d);
  return {mid + half_gap, mid - half_gap};
}

Mat4 Spectrum::reconstruct() const {
  Mat4 out;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto &v = eigenvectors[k];
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        out(i, j) += eigenvalues[k] * v[i] * std::conj(v[j]);
      }
    }
  }
  return out;
}

Mat4 build_matrix(const BlochParams &p) {
  const Mat2 id = Mat2::identity();
  Mat4 m = kron(id, id);
  m += kron(pauli_dot(p.r), id);
  m += kron(id, pauli_dot(p.s));
  for (int i = 0; i < 3; ++i) {
    m += p.c[i] * kron(pauli(i), pauli(i));
  }
  m *= 0.25;
  return m;
}

DensityMatrix4 build_state(const BlochParams &p) {
  return DensityMatrix4::from_matrix(build_matrix(p));
}

bool is_physical(const BlochParams &p) {
  for (const Vec3 *v : {&p.r, &p.s, &p.c}) {
    for (double x : *v) {
      if (!std::isfinite(x)) {
        return false;
      }
    }
  }
  return hermitian_eigen(build_matrix(p)).eigenvalues[3] >= -kNegativeEigenTol;
}

double pauli_expectation(const Mat4 &rho, int left, int right) {
  const Mat2 id = Mat2::identity();
  Mat2 a = left == 0 ? id : pauli(left - 1);
  Mat2 b = right == 0 ? id : pauli(right - 1);
  return (rho * kron(a, b)).trace().real();
}

BlochParams extract_bloch(const DensityMatrix4 &rho) {
  constexpr double kOffDiagonalTol = 1e-9;
  const Mat4 &m = rho.matrix();
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      if (i == j) {
        continue;
      }
      double t = pauli_expectation(m, i, j);
      if (std::abs(t) > kOffDiagonalTol) {
        throw OutOfFamilyError("correlation tensor entry (" + std::to_string(i) + "," +
                               std::to_string(j) + ") = " + describe(t) +
                               " is not zero; only diagonal correlations are supported");
      }
    }
  }
  BlochParams p;
  for (int i = 0; i < 3; ++i) {
    p.r[i] = pauli_expectation(m, i + 1, 0);
    p.s[i] = pauli_expectation(m, 0, i + 1);
    p.c[i] = pauli_expectation(m, i + 1, i + 1);
  }
  return p;
}

Spectrum hermitian_eigen(const Mat4 &m) {
  for (const Complex &x : m.data) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
      throw DomainError("hermitian_eigen: non-finite matrix entry");
    }
  }
  if (m.hermiticity_defect() > kHermitianTol) {
    throw DomainError("hermitian_eigen: input is not Hermitian");
  }
  Mat4 a = m + m.adjoint();
  a *= 0.5;
  Mat4 v = Mat4::identity();

  bool converged = false;
  for (int sweep = 0; sweep <= kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < kJacobiOffDiagonalTol) {
      converged = true;
      break;
    }
    if (sweep == kJacobiMaxSweeps) {
      break;
    }
    for (std::size_t p = 0; p < 3; ++p) {
      for (std::size_t q = p + 1; q < 4; ++q) {
        Complex apq = a(p, q);
        double mag = std::abs(apq);
        if (mag == 0.0) {
          continue;
        }
        // Phase rotation makes a(p,q) real, then a real Jacobi rotation zeroes it.
        Complex e = apq / mag;
        double app = a(p, p).real();
        double aqq = a(q, q).real();
        double theta = (aqq - app) / (2.0 * mag);
        double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        Complex upp = c;
        Complex upq = s;
        Complex uqp = -s * std::conj(e);
        Complex uqq = c * std::conj(e);

        for (std::size_t k = 0; k < 4; ++k) {
          Complex akp = a(k, p);
          Complex akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
          Complex vkp = v(k, p);
          Complex vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
        for (std::size_t k = 0; k < 4; ++k) {
          Complex apk = a(p, k);
          Complex aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  if (!converged) {
    throw ConvergenceError("hermitian_eigen: Jacobi iteration did not converge in " +
                           std::to_string(kJacobiMaxSweeps) + " sweeps");
  }

  std::array<std::size_t, 4> order{0, 1, 2, 3};
  std::array<std::array<Complex, 4>, 4> vectors;
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t i = 0; i < 4; ++i) {
      vectors[k][i] = v(i, k);
    }
    fix_phase(vectors[k]);
  }
  auto before = [&](std::size_t x, std::size_t y) {
    double lx = a(x, x).real();
    double ly = a(y, y).real();
    if (std::abs(lx - ly) > kEigenTieTol) {
      return lx > ly;
    }
    return lex_greater(vectors[x], vectors[y]);
  };
  // Insertion sort: the tie tolerance makes the order non-transitive, so keep
  // the procedure explicit and deterministic.
  for (std::size_t i = 1; i < 4; ++i) {
    for (std::size_t j = i; j > 0 && before(order[j], order[j - 1]); --j) {
      std::swap(order[j], order[j - 1]);
    }
  }

  Spectrum out;
  for (std::size_t k = 0; k < 4; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    out.eigenvectors[k] = vectors[order[k]];
  }
  return out;
}

Spectrum hermitian_eigen(const DensityMatrix4 &rho) {
  return hermitian_eigen(rho.matrix());
}

Qubit2 partial_trace(const DensityMatrix4 &rho, Side keep) {
  Mat2 out;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k < 2; ++k) {
      for (std::size_t j = 0; j < 2; ++j) {
        if (keep == Side::kA) {
          out(i, k) += rho(2 * i + j, 2 * k + j);
        } else {
          out(i, k) += rho(2 * j + i, 2 * j + k);
        }
      }
    }
  }
  return Qubit2::from_matrix(out);
}

double xlog2x(double x) {
  return x <= 0.0 ? 0.0 : x * std::log2(x);
}

double entropy_of_eigenvalues(const double *eigenvalues, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double lambda = eigenvalues[i];
    if (lambda < -kNegativeEigenTol) {
      throw PhysicalityError("entropy: eigenvalue " + describe(lambda) + " is below -1e-9");
    }
    s -= xlog2x(lambda);
  }
  // -0.0 for pure states prints badly.
  return s == 0.0 ? 0.0 : s;
}

double von_neumann_entropy(const DensityMatrix4 &rho) {
  Spectrum spectrum = hermitian_eigen(rho);
  return entropy_of_eigenvalues(spectrum.eigenvalues.data(), 4);
}

double von_neumann_entropy(const Qubit2 &rho) {
  auto lambda = rho.eigenvalues();
  return entropy_of_eigenvalues(lambda.data(), 2);
}

double entropic_h(double eps, double x) {
  constexpr double kClampTol = 1e-12;
  double plus = 1.0 + eps + x;
  double minus = 1.0 + eps - x;
  if (!(plus >= -kClampTol) || !(minus >= -kClampTol)) {
    throw DomainError("entropic_h: log argument negative for eps=" + describe(eps) +
                      ", x=" + describe(x));
  }
  if (plus < kClampTol) {
    plus = 0.0;
  }
  if (minus < kClampTol) {
    minus = 0.0;
  }
  return 0.5 * xlog2x(plus) + 0.5 * xlog2x(minus);
}

}  // namespace discord
