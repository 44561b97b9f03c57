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

#ifndef DISCORD_DISCORD_H
#define DISCORD_DISCORD_H

#include <array>
#include <string>
#include <string_view>

#include "discord/density.h"
#include "discord/measurement.h"
#include "discord/sphere_opt.h"

namespace discord {

/// Which computation produced a DiscordReport.
enum class Method {
  kNumeric,
  kTheorem1,
  kTheorem1CEqR,
  kWerner,
  kEq214,
  kTheorem2Zero,
  kTheorem2Formula,
  kTheorem3,
};

std::string_view method_name(Method m);
/// Inverse of method_name; throws std::invalid_argument for unknown tags.
Method method_from_name(std::string_view name);

/// All quantities in bits. discord = mutual_info - classical_corr.
struct DiscordReport {
  double mutual_info = 0.0;
  double classical_corr = 0.0;
  double discord = 0.0;
  MeasurementAxis argmax_axis{Vec3{0.0, 0.0, 1.0}};
  /// Eigenvalues of the state, descending.
  std::array<double, 4> spectrum{};
  Method method = Method::kNumeric;
};

/// S(rho_a) + S(rho_b) - S(rho) from the density matrix.
double mutual_information(const BlochParams &p);
/// 2 - H_0(|r|) - H_0(|s|) + sum lambda log2 lambda.
double mutual_information_expanded(const BlochParams &p);

struct ClassicalCorrelation {
  double value = 0.0;
  /// max_z G(z).
  double max_g = 0.0;
  MeasurementAxis axis{Vec3{0.0, 0.0, 1.0}};
  std::size_t evaluations = 0;
};

/// C = -H_0(|r|) + max_z G(z), maximized numerically over measurements on b.
ClassicalCorrelation classical_correlation_numeric(const BlochParams &p,
                                                   const SphereOptConfig &cfg = discord_opt_defaults());

/// Q = I - C with the numerically optimized C. Reference for every closed form.
DiscordReport discord_numeric(const BlochParams &p,
                              const SphereOptConfig &cfg = discord_opt_defaults());

// --- closed forms for the isotropic-correlation family s = 0, c1 = c2 = c3 = c ---

/// Range of theta = |r + c z|^2 over unit z.
struct ThetaInterval {
  double min = 0.0;
  double max = 0.0;
};

ThetaInterval theta_range(double r_norm, double c);

/// G as a function of theta:
///   G(theta) = H_0(sqrt(theta))/2 + H_0(sqrt(2(|r|^2 + c^2) - theta))/2.
/// DomainError outside [0, 2(|r|^2 + c^2)].
double g_reduced(double theta, double r_norm, double c);

/// Q = H_c(|r|)/2 + H_{-c}(sqrt(4c^2 + |r|^2))/2 - [H_0(|r| + |c|) + H_0(||r| - |c||)]/2.
/// DomainError unless (1+c)^2 >= |r|^2 and (1-c)^2 >= 4c^2 + |r|^2.
double discord_theorem1(double r_norm, double c);
/// The c = |r| > 0 case; requires c <= 1/(1+sqrt(5)).
double discord_theorem1_c_eq_r(double c);
/// r = s = 0: Q = [(1-3c)log2(1-3c) - 2(1-c)log2(1-c) + (1+c)log2(1+c)]/4, c in [-1, 1/3].
double discord_werner(double c);

/// r = 0, c1 = c2 = c3 = c:
///   Q = H_{-c}(sqrt(4c^2 + |s|^2))/2 - H_{-c}(|s|)/2.
double discord_r0_isotropic(double s_norm, double c);

enum class Theorem2Mode {
  /// Branch |r| = 0 returns the numerically optimized discord.
  kOracle,
  /// Branch |r| = 0 returns H_0(|s| / sqrt(s1^2 + s2^2 + (c3 + s3)^2)). This
  /// expression is known to be wrong (it gives 1 for product states).
  kPrintedFormula,
};

/// c1 = c2 = 0 and (s = 0 or r = 0). The s = 0 branch is exactly 0.
/// FamilyError if the preconditions fail.
double discord_theorem2(const BlochParams &p, Theorem2Mode mode = Theorem2Mode::kOracle,
                        const SphereOptConfig &cfg = discord_opt_defaults());
/// The printed |r| = 0 expression on its own.
double discord_theorem2_formula(const BlochParams &p);

/// s = 0, c3 = 0, c1 = c2 = c:
///   Q = [H_0(a+) + H_0(a-) - H_0(b+) - H_0(b-)]/2,
///   a+- = sqrt(2c^2 + |r|^2 +- 2 sqrt(c^4 + c^2 (r1^2 + r2^2))),
///   b+- = sqrt((sqrt(r1^2 + r2^2) +- c)^2 + r3^2).
double discord_theorem3(const Vec3 &r, double c);

/// The ratio form of b+- used for cross-checking; undefined at r1 = r2 = 0.
std::array<double, 2> theorem3_beta_ratio_form(const Vec3 &r, double c);

/// Tolerance used to decide family membership (zero or equal components).
inline constexpr double kFamilyTol = 1e-12;

/// Closed form whose preconditions `p` satisfies, or kNumeric.
Method classify(const BlochParams &p);

struct DiscordOptions {
  SphereOptConfig opt = discord_opt_defaults();
  /// Skip the analytic dispatch.
  bool force_numeric = false;
  /// Use the printed expression for the r = 0, c1 = c2 = 0 family.
  bool theorem2_printed_formula = false;
};

/// Dispatches to the matching closed form, else to discord_numeric. The
/// report's method records the path taken.
DiscordReport compute_discord(const BlochParams &p, const DiscordOptions &options = {});

/// g(x) = log2((1+x)/(1-x)) / x on (0, 1).
double g_monotone_helper(double x);

}  // namespace discord

#endif  // DISCORD_DISCORD_H
