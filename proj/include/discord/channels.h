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

#ifndef DISCORD_CHANNELS_H
#define DISCORD_CHANNELS_H

#include <vector>

#include "discord/density.h"
#include "discord/discord.h"
#include "discord/sphere_opt.h"

namespace discord {

/// Phase damping of equal strength on both qubits.
class PhaseDamping {
 public:
  /// Throws RangeError unless gamma is in [0, 1].
  explicit PhaseDamping(double gamma);

  double gamma() const {
    return gamma_;
  }

 private:
  double gamma_;
};

/// K1 = |0><0| + sqrt(1-gamma)|1><1|, K2 = sqrt(gamma)|1><1|.
struct KrausPair {
  Mat2 k1;
  Mat2 k2;
};

KrausPair kraus_pair(const PhaseDamping &ch);

/// sum_{i,j} (K_i (x) K_j) rho (K_i (x) K_j)^dagger.
DensityMatrix4 apply_kraus(const DensityMatrix4 &rho, const PhaseDamping &ch);

/// The same channel on the Bloch parameters: r1, r2, s1, s2 scale by
/// sqrt(1-gamma), c1, c2 by (1-gamma); r3, s3, c3 are unchanged.
BlochParams damp_bloch(const BlochParams &p, const PhaseDamping &ch);

/// Discord of the damped state, using the damped objective on the original
/// parameters:
///   Q = 2 - H_0(|s~|) + sum lambda~ log2 lambda~ - max_z G~(z).
DiscordReport damped_discord(const BlochParams &p, const PhaseDamping &ch,
                             const SphereOptConfig &cfg = discord_opt_defaults());

/// 2 - H_0(sqrt(|r|^2 - g r1^2 - g r2^2)) - H_0(sqrt(|s|^2 - g s1^2 - g s2^2))
///   + sum lambda~ log2 lambda~.
double damped_mutual_information_expanded(const BlochParams &p, const PhaseDamping &ch);

/// Correlation vector of the Werner state in the damping convention
/// rho = (I - c sum sigma_i (x) sigma_i)/4, i.e. (-c, -c, -c).
BlochParams werner_damping_state(double c);

/// T(c, g) = Q(rho) - Q(rho~) for werner_damping_state(c), c in [-1/3, 1]:
///   T = (1-c)/4 log2(1-c) + (1+3c)/4 log2(1+3c)
///     - (1+3c-2cg)/4 log2(1+3c-2cg) - (1-c+2cg)/4 log2(1-c+2cg).
double werner_damped_gap(double c, double gamma);
/// dT/dg = (c/2) log2((1+3c-2cg)/(1-c+2cg)).
double werner_damped_gap_derivative(double c, double gamma);

/// Q(rho) - Q(rho~) for s = 0, c3 = 0, c1 = c2 = c:
///   [H_0(a+) + H_0(a-) - H_0(b+) - H_0(b-) - (H_0(m+) + H_0(m-) - H_0(t+) - H_0(t-))]/2
/// with a+-, b+- as in discord_theorem3 and their damped counterparts
///   m+- = sqrt(2c^2(1-g)^2 + (r1^2 + r2^2)(1-g) + r3^2 +- 2 v),
///   v   = sqrt(c^4 (1-g)^4 + c^2 (r1^2 + r2^2)(1-g)^3),
///   t+- = sqrt((1-g)(sqrt(r1^2 + r2^2) +- sqrt(1-g) c)^2 + r3^2).
double theorem3_damped_gap(const Vec3 &r, double c, double gamma);

struct SweepRow {
  double gamma = 0.0;
  double discord = 0.0;
  /// Q(rho) - Q(rho~).
  double gap = 0.0;
};

/// Damped discord along a strictly increasing grid in [0, 1]. Rows follow the
/// grid order; points are evaluated in parallel.
std::vector<SweepRow> gamma_sweep(const BlochParams &p, const std::vector<double> &grid,
                                  const SphereOptConfig &cfg = discord_opt_defaults());

/// start, start + step, ... up to stop (inclusive within 1e-9 step).
/// RangeError for start > stop, step <= 0, or points outside [0, 1].
std::vector<double> gamma_grid(double start, double stop, double step);

}  // namespace discord

#endif  // DISCORD_CHANNELS_H
