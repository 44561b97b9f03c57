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

#include "discord/measurement.h"

#include <cmath>
#include <optional>
#include <string>

#include "discord/errors.h"

namespace discord {

namespace {

constexpr double kQuaternionTol = 1e-9;
constexpr double kAxisTol = 1e-9;
constexpr double kBranchTol = 1e-12;

std::optional<EnsembleBranch> measure_branch(const DensityMatrix4 &rho, const MeasurementAxis &z,
                                             int k) {
  const Mat2 id = Mat2::identity();
  Mat2 projector = id + (k == 0 ? 1.0 : -1.0) * pauli_dot(z.z());
  projector *= 0.5;
  Mat4 lift = kron(id, projector);
  Mat4 projected = lift * rho.matrix() * lift;
  double probability = projected.trace().real();
  if (probability < kBranchTol) {
    return std::nullopt;
  }
  Mat2 reduced;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t b = 0; b < 2; ++b) {
        reduced(i, j) += projected(2 * i + b, 2 * j + b);
      }
    }
  }
  reduced *= 1.0 / probability;
  return EnsembleBranch{probability, Qubit2::from_matrix(reduced)};
}

}  // namespace

double UnitQuaternion::norm() const {
  return std::sqrt(t * t + y1 * y1 + y2 * y2 + y3 * y3);
}

Mat2 UnitQuaternion::to_unitary() const {
  Mat2 v = Mat2::identity();
  v *= t;
  v += Complex(0.0, 1.0) * pauli_dot({y1, y2, y3});
  return v;
}

MeasurementAxis::MeasurementAxis(const Vec3 &v) {
  double n = norm(v);
  if (!(std::abs(n - 1.0) <= kAxisTol)) {
    throw NormError("measurement axis must be a unit vector, got norm " + std::to_string(n));
  }
  z_ = (1.0 / n) * v;
}

MeasurementAxis MeasurementAxis::normalized(const Vec3 &v) {
  double n = norm(v);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw NormError("cannot normalize a zero or non-finite axis");
  }
  return MeasurementAxis((1.0 / n) * v);
}

MeasurementAxis MeasurementAxis::operator-() const {
  MeasurementAxis out = *this;
  out.z_ = {-z_[0], -z_[1], -z_[2]};
  return out;
}

MeasurementAxis axis_from_su2(const UnitQuaternion &q) {
  double n = q.norm();
  if (!(std::abs(n - 1.0) <= kQuaternionTol)) {
    throw NormError("axis_from_su2: quaternion norm " + std::to_string(n) + " is not 1");
  }
  double t = q.t / n;
  double y1 = q.y1 / n;
  double y2 = q.y2 / n;
  double y3 = q.y3 / n;
  Vec3 z{2.0 * (-t * y2 + y1 * y3), 2.0 * (t * y1 + y2 * y3), t * t + y3 * y3 - y1 * y1 - y2 * y2};
  return MeasurementAxis(z);
}

Ensemble post_measurement_ensemble(const BlochParams &p, const MeasurementAxis &z) {
  DensityMatrix4 rho = build_state(p);
  Ensemble out;
  for (int k = 0; k < 2; ++k) {
    auto branch = measure_branch(rho, z, k);
    if (!branch) {
      throw DegenerateBranchError("measurement outcome " + std::to_string(k) +
                                  " has probability below 1e-12");
    }
    out.branches[k] = *branch;
  }
  return out;
}

std::array<std::array<double, 2>, 2> branch_eigenvalues(const BlochParams &p,
                                                        const MeasurementAxis &z) {
  double sz = dot(p.s, z.z());
  Vec3 cz = hadamard(p.c, z.z());
  std::array<std::array<double, 2>, 2> out{};
  for (int k = 0; k < 2; ++k) {
    double sign = k == 0 ? 1.0 : -1.0;
    double weight = 1.0 + sign * sz;
    double radius = norm(p.r + sign * cz);
    out[k][0] = (weight + radius) / (2.0 * weight);
    out[k][1] = (weight - radius) / (2.0 * weight);
  }
  return out;
}

double conditional_entropy(const BlochParams &p, const MeasurementAxis &z) {
  DensityMatrix4 rho = build_state(p);
  double total = 0.0;
  for (int k = 0; k < 2; ++k) {
    if (auto branch = measure_branch(rho, z, k)) {
      total += branch->probability * von_neumann_entropy(branch->state);
    }
  }
  return total;
}

double g_objective(const BlochParams &p, const MeasurementAxis &z) {
  double sz = dot(p.s, z.z());
  Vec3 cz = hadamard(p.c, z.z());
  return -entropic_h0(sz) + 0.5 * entropic_h(sz, norm(p.r + cz)) +
         0.5 * entropic_h(-sz, norm(p.r - cz));
}

double damped_g_objective(const BlochParams &p, double gamma, const MeasurementAxis &z) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw RangeError("decoherence rate must lie in [0, 1]");
  }
  const Vec3 &v = z.z();
  double q = std::sqrt(1.0 - gamma);
  double eps = q * (p.s[0] * v[0] + p.s[1] * v[1]) + p.s[2] * v[2];
  double delta[2];
  for (int k = 0; k < 2; ++k) {
    double sign = k == 0 ? 1.0 : -1.0;
    double a = p.r[0] + sign * (q * p.c[0]) * v[0];
    double b = p.r[1] + sign * (q * p.c[1]) * v[1];
    double c = p.r[2] + sign * p.c[2] * v[2];
    delta[k] = std::sqrt((1.0 - gamma) * (a * a + b * b) + c * c);
  }
  return -entropic_h0(eps) + 0.5 * entropic_h(eps, delta[0]) + 0.5 * entropic_h(-eps, delta[1]);
}

}  // namespace discord
