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

#ifndef DISCORD_MEASUREMENT_H
#define DISCORD_MEASUREMENT_H

#include <array>

#include "discord/density.h"
#include "discord/linalg.h"

namespace discord {

/// V = t I + i (y1 sigma_x + y2 sigma_y + y3 sigma_z) in SU(2).
struct UnitQuaternion {
  double t = 1.0;
  double y1 = 0.0;
  double y2 = 0.0;
  double y3 = 0.0;

  double norm() const;
  Mat2 to_unitary() const;
};

/// Unit vector z; the measurement on party b is B_k = (I + (-1)^k z.sigma)/2.
class MeasurementAxis {
 public:
  /// Throws NormError unless | |v| - 1 | <= 1e-9; the stored vector is
  /// renormalized.
  explicit MeasurementAxis(const Vec3 &v);
  /// Normalizes any nonzero vector.
  static MeasurementAxis normalized(const Vec3 &v);

  const Vec3 &z() const {
    return z_;
  }
  double operator[](std::size_t i) const {
    return z_[i];
  }
  MeasurementAxis operator-() const;

 private:
  Vec3 z_;
};

/// z1 = 2(-t y2 + y1 y3), z2 = 2(t y1 + y2 y3), z3 = t^2 + y3^2 - y1^2 - y2^2.
/// Equivalently z.sigma = V sigma_z V^dagger. Throws NormError if the
/// quaternion norm is off by more than 1e-9.
MeasurementAxis axis_from_su2(const UnitQuaternion &q);

struct EnsembleBranch {
  double probability = 0.0;
  Qubit2 state;
};

/// Conditional states of party a after measuring party b along z.
struct Ensemble {
  std::array<EnsembleBranch, 2> branches;
};

/// Projects with (I (x) B_k), traces out b and renormalizes. Throws
/// DegenerateBranchError when a branch has probability below 1e-12.
Ensemble post_measurement_ensemble(const BlochParams &p, const MeasurementAxis &z);

/// Eigenvalues of rho_k from the Bloch form:
///   lambda_k^(+-) = (1 + (-1)^k s.z +- |r + (-1)^k c(.)z|) / (2 (1 + (-1)^k s.z)).
/// Indexed [k][0] = +, [k][1] = -.
std::array<std::array<double, 2>, 2> branch_eigenvalues(const BlochParams &p,
                                                        const MeasurementAxis &z);

/// sum_k p_k S(rho_k), bits. Branches with p_k < 1e-12 contribute 0.
double conditional_entropy(const BlochParams &p, const MeasurementAxis &z);

/// G(z) = -H_0(s.z) + H_{s.z}(|r + c(.)z|)/2 + H_{-s.z}(|r - c(.)z|)/2.
/// Satisfies G(z) = 1 - conditional_entropy(p, z).
double g_objective(const BlochParams &p, const MeasurementAxis &z);

/// The objective after symmetric phase damping of strength gamma, written in
/// the undamped parameters:
///   eps = sqrt(1-g)(s1 z1 + s2 z2) + s3 z3,
///   delta_pm^2 = (1-g)[(r1 +- sqrt(1-g) c1 z1)^2 + (r2 +- sqrt(1-g) c2 z2)^2]
///                + (r3 +- c3 z3)^2,
///   G~ = -H_0(eps) + H_eps(delta_+)/2 + H_{-eps}(delta_-)/2.
double damped_g_objective(const BlochParams &p, double gamma, const MeasurementAxis &z);

}  // namespace discord

#endif  // DISCORD_MEASUREMENT_H
