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

#include "discord/channels.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "discord/errors.h"
#include "discord/parallel.h"

namespace discord {

namespace {

constexpr double kDomainTol = 1e-12;

double checked_xlog2x(double x) {
  if (x < -kDomainTol) {
    throw DomainError("log argument is negative");
  }
  return xlog2x(std::max(0.0, x));
}

double checked_sqrt(double x) {
  if (x < -kDomainTol) {
    throw DomainError("square root of a negative quantity");
  }
  return std::sqrt(std::max(0.0, x));
}

void require_rate(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw RangeError("decoherence rate must lie in [0, 1]");
  }
}

void require_werner_domain(double c) {
  if (!(c >= -1.0 / 3.0 - kDomainTol && c <= 1.0 + kDomainTol)) {
    throw DomainError("Werner damping convention requires c in [-1/3, 1]");
  }
}

}  // namespace

PhaseDamping::PhaseDamping(double gamma) : gamma_(gamma) {
  require_rate(gamma);
}

KrausPair kraus_pair(const PhaseDamping &ch) {
  KrausPair k;
  k.k1(0, 0) = 1.0;
  k.k1(1, 1) = std::sqrt(1.0 - ch.gamma());
  k.k2(1, 1) = std::sqrt(ch.gamma());
  return k;
}

DensityMatrix4 apply_kraus(const DensityMatrix4 &rho, const PhaseDamping &ch) {
  KrausPair k = kraus_pair(ch);
  const Mat2 *ops[2] = {&k.k1, &k.k2};
  Mat4 out;
  for (const Mat2 *a : ops) {
    for (const Mat2 *b : ops) {
      Mat4 op = kron(*a, *b);
      out += op * rho.matrix() * op.adjoint();
    }
  }
  return DensityMatrix4::from_matrix(out);
}

BlochParams damp_bloch(const BlochParams &p, const PhaseDamping &ch) {
  double q = std::sqrt(1.0 - ch.gamma());
  double lin = 1.0 - ch.gamma();
  BlochParams out = p;
  for (int i = 0; i < 2; ++i) {
    out.r[i] *= q;
    out.s[i] *= q;
    out.c[i] *= lin;
  }
  return out;
}

double damped_mutual_information_expanded(const BlochParams &p, const PhaseDamping &ch) {
  const double g = ch.gamma();
  DensityMatrix4 damped = apply_kraus(build_state(p), ch);
  Spectrum spectrum = hermitian_eigen(damped);
  double sum = -entropy_of_eigenvalues(spectrum.eigenvalues.data(), 4);
  double r_len = checked_sqrt(dot(p.r, p.r) - g * p.r[0] * p.r[0] - g * p.r[1] * p.r[1]);
  double s_len = checked_sqrt(dot(p.s, p.s) - g * p.s[0] * p.s[0] - g * p.s[1] * p.s[1]);
  return 2.0 - entropic_h0(r_len) - entropic_h0(s_len) + sum;
}

DiscordReport damped_discord(const BlochParams &p, const PhaseDamping &ch,
                             const SphereOptConfig &cfg) {
  const double g = ch.gamma();
  DensityMatrix4 damped = apply_kraus(build_state(p), ch);
  Spectrum spectrum = hermitian_eigen(damped);

  OptResult opt = maximize_on_sphere(
      [&p, g](const MeasurementAxis &z) { return damped_g_objective(p, g, z); }, cfg);

  double r_len = checked_sqrt(dot(p.r, p.r) - g * p.r[0] * p.r[0] - g * p.r[1] * p.r[1]);
  DiscordReport report;
  report.mutual_info = damped_mutual_information_expanded(p, ch);
  report.classical_corr = -entropic_h0(r_len) + opt.value;
  report.discord = report.mutual_info - report.classical_corr;
  report.argmax_axis = opt.argmax;
  report.spectrum = spectrum.eigenvalues;
  report.method = Method::kNumeric;
  return report;
}

BlochParams werner_damping_state(double c) {
  require_werner_domain(c);
  return BlochParams{{0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, {-c, -c, -c}};
}

double werner_damped_gap(double c, double gamma) {
  require_werner_domain(c);
  require_rate(gamma);
  double cg = 2.0 * c * gamma;
  // Paired so that gamma = 0 cancels exactly.
  return 0.25 * ((checked_xlog2x(1.0 - c) - checked_xlog2x(1.0 - c + cg)) +
                 (checked_xlog2x(1.0 + 3.0 * c) - checked_xlog2x(1.0 + 3.0 * c - cg)));
}

double werner_damped_gap_derivative(double c, double gamma) {
  require_werner_domain(c);
  require_rate(gamma);
  if (c == 0.0) {
    return 0.0;
  }
  double num = 1.0 + 3.0 * c - 2.0 * c * gamma;
  double den = 1.0 - c + 2.0 * c * gamma;
  if (!(num > 0.0 && den > 0.0)) {
    throw DomainError("werner_damped_gap_derivative: unbounded at this (c, gamma)");
  }
  return 0.5 * c * std::log2(num / den);
}

double theorem3_damped_gap(const Vec3 &r, double c, double gamma) {
  require_rate(gamma);
  if (!is_physical(BlochParams{r, {0.0, 0.0, 0.0}, {c, c, 0.0}})) {
    throw DomainError("theorem3_damped_gap: parameters do not describe a positive semidefinite state");
  }
  const double q2 = 1.0 - gamma;
  const double q = std::sqrt(q2);
  const double perp2 = r[0] * r[0] + r[1] * r[1];
  const double perp = std::sqrt(perp2);
  const double r3sq = r[2] * r[2];
  const double c2 = c * c;

  double alpha_base = 2.0 * c2 + perp2 + r3sq;
  double alpha_split = 2.0 * std::sqrt(c2 * c2 + c2 * perp2);
  double alpha_plus = std::sqrt(alpha_base + alpha_split);
  double alpha_minus = checked_sqrt(alpha_base - alpha_split);
  double beta_plus = std::sqrt((perp + c) * (perp + c) + r3sq);
  double beta_minus = std::sqrt((perp - c) * (perp - c) + r3sq);

  double varsigma = std::sqrt(c2 * c2 * q2 * q2 * q2 * q2 + c2 * perp2 * q2 * q2 * q2);
  double mu_base = 2.0 * c2 * q2 * q2 + perp2 * q2 + r3sq;
  double mu_plus = std::sqrt(mu_base + 2.0 * varsigma);
  double mu_minus = checked_sqrt(mu_base - 2.0 * varsigma);
  double sigma_plus = std::sqrt(q2 * (perp + q * c) * (perp + q * c) + r3sq);
  double sigma_minus = std::sqrt(q2 * (perp - q * c) * (perp - q * c) + r3sq);

  double undamped = entropic_h0(alpha_plus) + entropic_h0(alpha_minus) - entropic_h0(beta_plus) -
                    entropic_h0(beta_minus);
  double damped = entropic_h0(mu_plus) + entropic_h0(mu_minus) - entropic_h0(sigma_plus) -
                  entropic_h0(sigma_minus);
  return 0.5 * (undamped - damped);
}

std::vector<SweepRow> gamma_sweep(const BlochParams &p, const std::vector<double> &grid,
                                  const SphereOptConfig &cfg) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    require_rate(grid[i]);
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw RangeError("gamma grid must be strictly increasing");
    }
  }
  build_state(p);
  const double undamped = damped_discord(p, PhaseDamping(0.0), cfg).discord;
  std::vector<SweepRow> rows(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    double q = damped_discord(p, PhaseDamping(grid[i]), cfg).discord;
    rows[i] = SweepRow{grid[i], q, undamped - q};
  });
  return rows;
}

std::vector<double> gamma_grid(double start, double stop, double step) {
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
    throw RangeError("gamma grid bounds must be finite");
  }
  if (start > stop) {
    throw RangeError("gamma grid start exceeds stop");
  }
  if (!(step > 0.0)) {
    throw RangeError("gamma grid step must be positive");
  }
  if (start < 0.0 || stop > 1.0) {
    throw RangeError("gamma grid must lie within [0, 1]");
  }
  auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(std::min(stop, start + static_cast<double>(i) * step));
  }
  return out;
}

}  // namespace discord
