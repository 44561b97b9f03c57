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

#include "discord/sphere_opt.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "discord/errors.h"

namespace discord {

namespace {

const double kGoldenAngle = std::numbers::pi * (3.0 - std::sqrt(5.0));

struct Candidate {
  MeasurementAxis z;
  double value;
};

// Reduction order used for the lattice and across seeds.
bool wins(const Candidate &a, const Candidate &b) {
  if (a.value > b.value + kSphereTieTol) {
    return true;
  }
  if (a.value < b.value - kSphereTieTol) {
    return false;
  }
  return lex_less(a.z, b.z);
}

// Used inside a refinement run, so the incumbent value never decreases.
bool improves(const Candidate &a, const Candidate &incumbent) {
  if (a.value != incumbent.value) {
    return a.value > incumbent.value;
  }
  return lex_less(a.z, incumbent.z);
}

std::vector<MeasurementAxis> spiral(std::size_t n, double z_top, double z_span) {
  std::vector<MeasurementAxis> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double z3 = z_top - z_span * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    double rho = std::sqrt(std::max(0.0, 1.0 - z3 * z3));
    double phi = kGoldenAngle * static_cast<double>(i);
    out.push_back(MeasurementAxis::normalized({rho * std::cos(phi), rho * std::sin(phi), z3}));
  }
  return out;
}

// Orthonormal u, v spanning the tangent plane at z.
void tangent_basis(const Vec3 &z, Vec3 &u, Vec3 &v) {
  int axis = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(z[i]) < std::abs(z[axis])) {
      axis = i;
    }
  }
  Vec3 e{};
  e[axis] = 1.0;
  Vec3 w = e - dot(e, z) * z;
  u = (1.0 / norm(w)) * w;
  v = {z[1] * u[2] - z[2] * u[1], z[2] * u[0] - z[0] * u[2], z[0] * u[1] - z[1] * u[0]};
}

}  // namespace

void SphereOptConfig::validate() const {
  if (grid_points < 1) {
    throw RangeError("grid_points must be positive");
  }
  if (refine_rounds < 1) {
    throw RangeError("refine_rounds must be positive");
  }
  if (!(shrink_factor > 0.0 && shrink_factor < 1.0)) {
    throw RangeError("shrink_factor must lie in (0, 1)");
  }
  if (local_points < 1) {
    throw RangeError("local_points must be positive");
  }
  if (refine_seeds < 1) {
    throw RangeError("refine_seeds must be positive");
  }
}

SphereOptConfig discord_opt_defaults() {
  SphereOptConfig cfg;
  cfg.hemisphere = true;
  return cfg;
}

std::vector<MeasurementAxis> fibonacci_grid(std::size_t n) {
  return spiral(n, 1.0, 1.0);
}

std::vector<MeasurementAxis> fibonacci_sphere(std::size_t n) {
  return spiral(n, 1.0, 2.0);
}

bool lex_less(const MeasurementAxis &a, const MeasurementAxis &b) {
  return a.z() < b.z();
}

OptResult maximize_on_sphere(const SphereObjective &f, const SphereOptConfig &cfg) {
  cfg.validate();
  const auto n = static_cast<std::size_t>(cfg.grid_points);
  std::vector<MeasurementAxis> grid = cfg.hemisphere ? fibonacci_grid(n) : fibonacci_sphere(n);

  std::vector<Candidate> lattice;
  lattice.reserve(n);
  for (const MeasurementAxis &z : grid) {
    lattice.push_back({z, f(z)});
  }
  std::size_t evaluations = n;

  const auto seed_count = std::min(n, static_cast<std::size_t>(cfg.refine_seeds));
  // Selection by linear scans in lattice order; the tie tolerance rules out
  // std::sort-style comparators.
  for (std::size_t s = 0; s < seed_count; ++s) {
    std::size_t top = s;
    for (std::size_t i = s + 1; i < n; ++i) {
      if (wins(lattice[i], lattice[top])) {
        top = i;
      }
    }
    std::swap(lattice[s], lattice[top]);
  }

  const double area = cfg.hemisphere ? 2.0 * std::numbers::pi : 4.0 * std::numbers::pi;
  const double initial_radius =
      std::min(std::numbers::pi / 2.0, 2.0 * std::sqrt(area / static_cast<double>(n)));
  const auto m = static_cast<std::size_t>(cfg.local_points);

  bool have_best = false;
  Candidate best = lattice.front();
  std::vector<double> best_history;
  for (std::size_t s = 0; s < seed_count; ++s) {
    Candidate incumbent = lattice[s];
    std::vector<double> history{incumbent.value};
    double radius = initial_radius;
    for (int round = 0; round < cfg.refine_rounds; ++round) {
      const Vec3 center = incumbent.z.z();
      Vec3 u;
      Vec3 v;
      tangent_basis(center, u, v);
      for (std::size_t i = 0; i < m; ++i) {
        double a = radius * std::sqrt((static_cast<double>(i) + 0.5) / static_cast<double>(m));
        double phi = kGoldenAngle * static_cast<double>(i);
        Vec3 dir = std::cos(a) * center + std::sin(a) * (std::cos(phi) * u + std::sin(phi) * v);
        Candidate c{MeasurementAxis::normalized(dir), 0.0};
        c.value = f(c.z);
        if (improves(c, incumbent)) {
          incumbent = c;
        }
      }
      evaluations += m;
      history.push_back(incumbent.value);
      radius *= cfg.shrink_factor;
    }
    if (!have_best || wins(incumbent, best)) {
      best = incumbent;
      best_history = std::move(history);
      have_best = true;
    }
  }

  OptResult out;
  out.argmax = best.z;
  if (cfg.hemisphere && best.z[2] < 0.0) {
    out.argmax = -best.z;
  }
  out.value = best.value;
  out.evaluations = evaluations;
  out.history = std::move(best_history);
  return out;
}

}  // namespace discord
