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

#include "discord/discord.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "discord/errors.h"

namespace discord {

namespace {

constexpr double kDomainTol = 1e-12;

bool is_zero(double x) {
  return std::abs(x) <= kFamilyTol;
}

bool is_zero(const Vec3 &v) {
  return is_zero(v[0]) && is_zero(v[1]) && is_zero(v[2]);
}

// x log2 x for an argument that may round slightly below zero.
double clamped_xlog2x(double x, const char *where) {
  if (x < -kDomainTol) {
    throw DomainError(std::string(where) + ": log argument is negative");
  }
  return xlog2x(std::max(0.0, x));
}

double clamped_sqrt(double x) {
  if (x < -kDomainTol) {
    throw DomainError("square root of a negative quantity");
  }
  return std::sqrt(std::max(0.0, x));
}

// Eigenvalue conditions 1 + c - |v| >= 0 and 1 - c - sqrt(4c^2 + |v|^2) >= 0
// for states with one zero Bloch vector and isotropic correlations.
void require_isotropic_family(double v_norm, double c, const char *where) {
  if (!(v_norm >= 0.0) || !std::isfinite(c)) {
    throw DomainError(std::string(where) + ": Bloch vector norm must be non-negative");
  }
  if (1.0 + c - v_norm < -kDomainTol || 1.0 - c - std::sqrt(4.0 * c * c + v_norm * v_norm) < -kDomainTol) {
    throw DomainError(std::string(where) + ": parameters do not describe a positive semidefinite state");
  }
}

MeasurementAxis upper_hemisphere(const Vec3 &v) {
  MeasurementAxis z = MeasurementAxis::normalized(v);
  return z[2] < 0.0 ? -z : z;
}

struct StateSummary {
  std::array<double, 4> spectrum;
  double mutual_info;
};

StateSummary summarize(const BlochParams &p) {
  DensityMatrix4 rho = build_state(p);
  Spectrum spectrum = hermitian_eigen(rho);
  double s_ab = entropy_of_eigenvalues(spectrum.eigenvalues.data(), 4);
  double s_a = von_neumann_entropy(partial_trace(rho, Side::kA));
  double s_b = von_neumann_entropy(partial_trace(rho, Side::kB));
  return {spectrum.eigenvalues, s_a + s_b - s_ab};
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kNumeric:
      return "numeric";
    case Method::kTheorem1:
      return "theorem1";
    case Method::kTheorem1CEqR:
      return "theorem1-c-eq-r";
    case Method::kWerner:
      return "werner";
    case Method::kEq214:
      return "eq214";
    case Method::kTheorem2Zero:
      return "theorem2-zero";
    case Method::kTheorem2Formula:
      return "theorem2-formula";
    case Method::kTheorem3:
      return "theorem3";
  }
  return "numeric";
}

Method method_from_name(std::string_view name) {
  for (Method m : {Method::kNumeric, Method::kTheorem1, Method::kTheorem1CEqR, Method::kWerner,
                   Method::kEq214, Method::kTheorem2Zero, Method::kTheorem2Formula,
                   Method::kTheorem3}) {
    if (method_name(m) == name) {
      return m;
    }
  }
  throw std::invalid_argument("unknown method tag '" + std::string(name) + "'");
}

double mutual_information(const BlochParams &p) {
  return summarize(p).mutual_info;
}

double mutual_information_expanded(const BlochParams &p) {
  Spectrum spectrum = hermitian_eigen(build_state(p));
  double sum = -entropy_of_eigenvalues(spectrum.eigenvalues.data(), 4);
  return 2.0 - entropic_h0(norm(p.r)) - entropic_h0(norm(p.s)) + sum;
}

ClassicalCorrelation classical_correlation_numeric(const BlochParams &p,
                                                   const SphereOptConfig &cfg) {
  build_state(p);
  OptResult opt = maximize_on_sphere(
      [&p](const MeasurementAxis &z) { return g_objective(p, z); }, cfg);
  ClassicalCorrelation out;
  out.max_g = opt.value;
  out.value = -entropic_h0(norm(p.r)) + opt.value;
  out.axis = opt.argmax;
  out.evaluations = opt.evaluations;
  return out;
}

DiscordReport discord_numeric(const BlochParams &p, const SphereOptConfig &cfg) {
  StateSummary summary = summarize(p);
  ClassicalCorrelation cc = classical_correlation_numeric(p, cfg);
  DiscordReport report;
  report.mutual_info = summary.mutual_info;
  report.classical_corr = cc.value;
  report.discord = summary.mutual_info - cc.value;
  report.argmax_axis = cc.axis;
  report.spectrum = summary.spectrum;
  report.method = Method::kNumeric;
  return report;
}

ThetaInterval theta_range(double r_norm, double c) {
  if (!(r_norm >= 0.0)) {
    throw DomainError("theta_range: r_norm must be non-negative");
  }
  double lo = r_norm - std::abs(c);
  double hi = r_norm + std::abs(c);
  return {lo * lo, hi * hi};
}

double g_reduced(double theta, double r_norm, double c) {
  double total = 2.0 * (r_norm * r_norm + c * c);
  if (theta < -kDomainTol || theta > total + kDomainTol) {
    throw DomainError("g_reduced: theta outside [0, 2(|r|^2 + c^2)]");
  }
  theta = std::clamp(theta, 0.0, total);
  return 0.5 * entropic_h0(std::sqrt(theta)) + 0.5 * entropic_h0(std::sqrt(total - theta));
}

double discord_theorem1(double r_norm, double c) {
  require_isotropic_family(r_norm, c, "discord_theorem1");
  double ac = std::abs(c);
  return 0.5 * entropic_h(c, r_norm) + 0.5 * entropic_h(-c, std::sqrt(4.0 * c * c + r_norm * r_norm)) -
         0.5 * (entropic_h0(r_norm + ac) + entropic_h0(std::abs(r_norm - ac)));
}

double discord_theorem1_c_eq_r(double c) {
  const double limit = 1.0 / (1.0 + std::sqrt(5.0));
  if (!(c > 0.0) || c > limit + kDomainTol) {
    throw DomainError("discord_theorem1_c_eq_r: requires 0 < c <= 1/(1+sqrt(5))");
  }
  const double root5 = std::sqrt(5.0);
  const char *where = "discord_theorem1_c_eq_r";
  return 0.25 * clamped_xlog2x(1.0 - c + root5 * c, where) +
         0.25 * clamped_xlog2x(1.0 - c - root5 * c, where) -
         0.25 * clamped_xlog2x(1.0 - 2.0 * c, where);
}

double discord_werner(double c) {
  if (!(c >= -1.0 - kDomainTol && c <= 1.0 / 3.0 + kDomainTol)) {
    throw DomainError("discord_werner: c must lie in [-1, 1/3]");
  }
  const char *where = "discord_werner";
  return 0.25 * (clamped_xlog2x(1.0 - 3.0 * c, where) - 2.0 * clamped_xlog2x(1.0 - c, where) +
                 clamped_xlog2x(1.0 + c, where));
}

double discord_r0_isotropic(double s_norm, double c) {
  require_isotropic_family(s_norm, c, "discord_r0_isotropic");
  return 0.5 * entropic_h(-c, std::sqrt(4.0 * c * c + s_norm * s_norm)) - 0.5 * entropic_h(-c, s_norm);
}

double discord_theorem2_formula(const BlochParams &p) {
  double den = std::sqrt(p.s[0] * p.s[0] + p.s[1] * p.s[1] + (p.c[2] + p.s[2]) * (p.c[2] + p.s[2]));
  if (den == 0.0) {
    throw DomainError("discord_theorem2_formula: s1^2 + s2^2 + (c3 + s3)^2 vanishes");
  }
  return entropic_h0(norm(p.s) / den);
}

double discord_theorem2(const BlochParams &p, Theorem2Mode mode, const SphereOptConfig &cfg) {
  if (!is_zero(p.c[0]) || !is_zero(p.c[1])) {
    throw FamilyError("discord_theorem2: requires c1 = c2 = 0");
  }
  if (is_zero(p.s)) {
    build_state(p);
    return 0.0;
  }
  if (!is_zero(p.r)) {
    throw FamilyError("discord_theorem2: requires s = 0 or r = 0");
  }
  if (mode == Theorem2Mode::kPrintedFormula) {
    build_state(p);
    return discord_theorem2_formula(p);
  }
  return discord_numeric(p, cfg).discord;
}

double discord_theorem3(const Vec3 &r, double c) {
  if (!is_physical(BlochParams{r, {0.0, 0.0, 0.0}, {c, c, 0.0}})) {
    throw DomainError("discord_theorem3: parameters do not describe a positive semidefinite state");
  }
  double perp2 = r[0] * r[0] + r[1] * r[1];
  double perp = std::sqrt(perp2);
  double base = 2.0 * c * c + perp2 + r[2] * r[2];
  double split = 2.0 * std::sqrt(c * c * c * c + c * c * perp2);
  double alpha_plus = std::sqrt(base + split);
  double alpha_minus = clamped_sqrt(base - split);
  double beta_plus = std::hypot(perp + c, r[2]);
  double beta_minus = std::hypot(perp - c, r[2]);
  return 0.5 * (entropic_h0(alpha_plus) + entropic_h0(alpha_minus) - entropic_h0(beta_plus) -
                entropic_h0(beta_minus));
}

std::array<double, 2> theorem3_beta_ratio_form(const Vec3 &r, double c) {
  double perp = std::hypot(r[0], r[1]);
  if (perp == 0.0) {
    throw DomainError("theorem3_beta_ratio_form: undefined for r1 = r2 = 0");
  }
  std::array<double, 2> out{};
  for (int k = 0; k < 2; ++k) {
    double sign = k == 0 ? 1.0 : -1.0;
    double a = r[0] + sign * r[0] * c / perp;
    double b = r[1] + sign * r[1] * c / perp;
    out[k] = std::sqrt(a * a + b * b + r[2] * r[2]);
  }
  return out;
}

Method classify(const BlochParams &p) {
  const bool isotropic = std::abs(p.c[0] - p.c[1]) <= kFamilyTol && std::abs(p.c[1] - p.c[2]) <= kFamilyTol;
  const bool r_zero = is_zero(p.r);
  const bool s_zero = is_zero(p.s);
  const double c = p.c[0];
  if (isotropic && r_zero && s_zero) {
    return Method::kWerner;
  }
  if (isotropic && s_zero) {
    return (c > 0.0 && std::abs(c - norm(p.r)) <= kFamilyTol) ? Method::kTheorem1CEqR : Method::kTheorem1;
  }
  if (isotropic && r_zero) {
    return Method::kEq214;
  }
  const bool c12_zero = is_zero(p.c[0]) && is_zero(p.c[1]);
  if (c12_zero && s_zero) {
    return Method::kTheorem2Zero;
  }
  if (s_zero && is_zero(p.c[2]) && std::abs(p.c[0] - p.c[1]) <= kFamilyTol) {
    return Method::kTheorem3;
  }
  if (c12_zero && r_zero) {
    return Method::kTheorem2Formula;
  }
  return Method::kNumeric;
}

DiscordReport compute_discord(const BlochParams &p, const DiscordOptions &options) {
  Method method = options.force_numeric ? Method::kNumeric : classify(p);
  if (method == Method::kTheorem2Formula && !options.theorem2_printed_formula) {
    method = Method::kNumeric;
  }
  if (method == Method::kNumeric) {
    return discord_numeric(p, options.opt);
  }

  StateSummary summary = summarize(p);
  const double c = p.c[0];
  double q = 0.0;
  Vec3 axis{0.0, 0.0, 1.0};
  switch (method) {
    case Method::kWerner:
      q = discord_werner(c);
      break;
    case Method::kTheorem1CEqR:
      q = discord_theorem1_c_eq_r(c);
      axis = p.r;
      break;
    case Method::kTheorem1:
      q = discord_theorem1(norm(p.r), c);
      axis = p.r;
      break;
    case Method::kEq214:
      q = discord_r0_isotropic(norm(p.s), c);
      axis = p.s;
      break;
    case Method::kTheorem2Zero:
      q = discord_theorem2(p);
      break;
    case Method::kTheorem2Formula:
      q = discord_theorem2(p, Theorem2Mode::kPrintedFormula);
      break;
    case Method::kTheorem3:
      q = discord_theorem3(p.r, c);
      if (std::hypot(p.r[0], p.r[1]) > kFamilyTol) {
        axis = {p.r[0], p.r[1], 0.0};
      } else {
        axis = {1.0, 0.0, 0.0};
      }
      break;
    case Method::kNumeric:
      break;
  }

  DiscordReport report;
  report.mutual_info = summary.mutual_info;
  report.classical_corr = summary.mutual_info - q;
  report.discord = q;
  report.argmax_axis = upper_hemisphere(axis);
  report.spectrum = summary.spectrum;
  report.method = method;
  return report;
}

double g_monotone_helper(double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError("g_monotone_helper: x must lie in (0, 1)");
  }
  return std::log2((1.0 + x) / (1.0 - x)) / x;
}

}  // namespace discord
