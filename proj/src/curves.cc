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

#include "discord/curves.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "discord/discord.h"
#include "discord/errors.h"
#include "discord/measurement.h"
#include "discord/sphere_opt.h"

namespace discord {

namespace {

bool is_zero(const Vec3 &v) {
  return std::abs(v[0]) <= kFamilyTol && std::abs(v[1]) <= kFamilyTol && std::abs(v[2]) <= kFamilyTol;
}

bool is_isotropic(const Vec3 &c) {
  return std::abs(c[0] - c[1]) <= kFamilyTol && std::abs(c[1] - c[2]) <= kFamilyTol;
}

double theta_of(const BlochParams &p, const MeasurementAxis &z) {
  Vec3 w = p.r + hadamard(p.c, z.z());
  return dot(w, w);
}

std::vector<double> even_grid(double lo, double hi, std::size_t samples) {
  if (hi - lo <= 0.0) {
    return {lo};
  }
  if (samples < 2) {
    throw RangeError("a curve over a proper interval needs at least 2 samples");
  }
  std::vector<double> out(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples - 1);
  }
  out.back() = hi;
  return out;
}

std::vector<CurvePoint> reduced_curve(double r_norm, double c, std::size_t samples) {
  ThetaInterval range = theta_range(r_norm, c);
  std::vector<CurvePoint> rows;
  for (double theta : even_grid(range.min, range.max, samples)) {
    rows.push_back({theta, g_reduced(theta, r_norm, c)});
  }
  return rows;
}

std::vector<CurvePoint> profile_curve(const BlochParams &p, std::size_t samples) {
  SphereOptConfig cfg;
  auto hi = maximize_on_sphere([&p](const MeasurementAxis &z) { return theta_of(p, z); }, cfg);
  auto lo = maximize_on_sphere([&p](const MeasurementAxis &z) { return -theta_of(p, z); }, cfg);
  double theta_min = std::max(0.0, -lo.value);
  double theta_max = hi.value;
  std::vector<double> grid = even_grid(theta_min, theta_max, samples);
  if (grid.size() == 1) {
    return {{grid[0], g_objective(p, lo.argmax)}};
  }

  const double step = grid[1] - grid[0];
  constexpr double kUnseen = -std::numeric_limits<double>::infinity();
  std::vector<double> best(grid.size(), kUnseen);
  auto record = [&](const MeasurementAxis &z) {
    double t = std::clamp(theta_of(p, z), theta_min, theta_max);
    auto bin = static_cast<std::size_t>(std::lround((t - theta_min) / step));
    bin = std::min(bin, grid.size() - 1);
    best[bin] = std::max(best[bin], g_objective(p, z));
  };
  for (const MeasurementAxis &z : fibonacci_sphere(kProfileLatticePoints)) {
    record(z);
  }
  // The extremes themselves, which a lattice only approaches.
  record(lo.argmax);
  record(hi.argmax);

  std::vector<CurvePoint> rows;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (best[i] != kUnseen) {
      rows.push_back({grid[i], best[i]});
    }
  }
  return rows;
}

}  // namespace

std::vector<CurvePoint> g_curve(const BlochParams &p, std::size_t samples) {
  build_state(p);
  if (samples == 0) {
    throw RangeError("samples must be positive");
  }
  if (is_zero(p.s) && is_isotropic(p.c)) {
    return reduced_curve(norm(p.r), p.c[0], samples);
  }
  if (is_zero(p.r) && is_isotropic(p.c)) {
    return reduced_curve(norm(p.s), p.c[0], samples);
  }
  if (is_zero(p.s)) {
    return profile_curve(p, samples);
  }
  throw FamilyError("theta curve needs s = 0, or r = 0 with c1 = c2 = c3");
}

}  // namespace discord
