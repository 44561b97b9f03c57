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

#ifndef DISCORD_SPHERE_OPT_H
#define DISCORD_SPHERE_OPT_H

#include <cstddef>
#include <functional>
#include <vector>

#include "discord/measurement.h"

namespace discord {

/// Settings for maximize_on_sphere.
///
/// The search evaluates a Fibonacci lattice of `grid_points` directions, then
/// refines the best `refine_seeds` lattice points independently: each round
/// samples `local_points` directions in a spherical cap around the incumbent
/// and shrinks the cap radius by `shrink_factor`.
struct SphereOptConfig {
  int grid_points = 2000;
  int refine_rounds = 40;
  double shrink_factor = 0.5;
  int local_points = 64;
  int refine_seeds = 3;
  /// Only valid for objectives with f(z) = f(-z): the lattice covers z3 >= 0
  /// and the reported argmax is folded into that hemisphere.
  bool hemisphere = false;

  /// Throws RangeError if a field is outside its range.
  void validate() const;
};

/// Defaults used for measurement objectives, which are antipodally symmetric.
SphereOptConfig discord_opt_defaults();

struct OptResult {
  MeasurementAxis argmax{Vec3{0.0, 0.0, 1.0}};
  double value = 0.0;
  std::size_t evaluations = 0;
  /// Incumbent value of the winning seed after the lattice pass and after
  /// each refinement round.
  std::vector<double> history;
};

using SphereObjective = std::function<double(const MeasurementAxis &)>;

/// n near-uniform directions on the hemisphere z3 >= 0, deterministic in n.
std::vector<MeasurementAxis> fibonacci_grid(std::size_t n);
/// n near-uniform directions on the whole sphere.
std::vector<MeasurementAxis> fibonacci_sphere(std::size_t n);

/// Lexicographic order on (z1, z2, z3).
bool lex_less(const MeasurementAxis &a, const MeasurementAxis &b);

/// Values within this distance count as ties; ties go to the lexicographically
/// smallest axis.
inline constexpr double kSphereTieTol = 1e-14;

OptResult maximize_on_sphere(const SphereObjective &f, const SphereOptConfig &cfg);

}  // namespace discord

#endif  // DISCORD_SPHERE_OPT_H
