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

#include <cmath>

#include "gtest/gtest.h"

#include "discord/errors.h"
#include "discord/sampling.h"

using namespace discord;

namespace {

const BlochParams kStateA{{0.0, 0.0, 0.0}, {0.1, 0.2, 0.2}, {0.3, 0.3, 0.3}};
const BlochParams kStateB{{0.1, 0.2, 0.0}, {0.0, 0.0, 0.0}, {0.3, 0.3, 0.0}};
const BlochParams kSinglet{{0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, {-1.0, -1.0, -1.0}};

// Reference values from an independent brute-force computation (projector
// measurements, dense sphere grid plus simplex polish, double precision).
constexpr double kStateAQ = 0.250941243302718;
constexpr double kStateAI = 0.324045251234528;
constexpr double kStateAMaxG = 0.0731040079318099;
constexpr double kStateBQ = 0.0752716130743235;
constexpr double kStateBMaxG = 0.106092712710852;
constexpr double kTheorem1R03C02 = 0.0799303889637643;
constexpr double kEq214S02C02 = 0.0773480180934398;
constexpr double kTheorem2Branch2 = 0.00121867560541256;
constexpr double kTheorem3R04C02 = 0.0323728165154178;

}  // namespace

TEST(discord, method_names_round_trip) {
  for (Method m : {Method::kNumeric, Method::kTheorem1, Method::kTheorem1CEqR, Method::kWerner,
                   Method::kEq214, Method::kTheorem2Zero, Method::kTheorem2Formula, Method::kTheorem3}) {
    EXPECT_EQ(method_from_name(method_name(m)), m);
  }
  EXPECT_EQ(method_name(Method::kTheorem1CEqR), "theorem1-c-eq-r");
  EXPECT_THROW(method_from_name("bogus"), std::invalid_argument);
}

TEST(discord, mutual_information_examples) {
  EXPECT_NEAR(mutual_information(BlochParams{}), 0.0, 1e-14);
  // Products inside the family: one marginal trivial, or both along one axis
  // with c3 = r3 s3. c = 0 alone is not enough.
  EXPECT_NEAR(mutual_information({{0.2, 0.1, 0.3}, {0, 0, 0}, {0, 0, 0}}), 0.0, 1e-12);
  EXPECT_NEAR(mutual_information({{0, 0, 0.6}, {0, 0, -0.5}, {0, 0, -0.3}}), 0.0, 1e-12);
  EXPECT_GT(mutual_information({{0.2, 0.1, 0.3}, {-0.4, 0.1, 0.0}, {0, 0, 0}}), 0.01);
  EXPECT_NEAR(mutual_information(kSinglet), 2.0, 1e-12);
  EXPECT_NEAR(mutual_information(kStateA), kStateAI, 1e-12);
  EXPECT_NEAR(mutual_information_expanded(kStateA), kStateAI, 1e-12);
}

TEST(discord, mutual_information_paths_agree) {
  auto rng = seeded_engine(41);
  for (int trial = 0; trial < 1000; ++trial) {
    BlochParams p = sample_family(Family::kGeneric, rng);
    ASSERT_NEAR(mutual_information(p), mutual_information_expanded(p), 1e-10);
  }
}

TEST(discord, state_a_numeric) {
  DiscordReport rep = discord_numeric(kStateA);
  EXPECT_EQ(rep.method, Method::kNumeric);
  EXPECT_NEAR(rep.discord, kStateAQ, 1e-9);
  EXPECT_NEAR(rep.classical_corr, kStateAMaxG, 1e-9);  // |r| = 0, so C = max G
  EXPECT_NEAR(rep.mutual_info, kStateAI, 1e-12);
  EXPECT_NEAR(rep.discord, rep.mutual_info - rep.classical_corr, 1e-12);
  // Closed form for the r = 0 isotropic family agrees with the optimizer.
  EXPECT_NEAR(discord_r0_isotropic(norm(kStateA.s), 0.3), kStateAQ, 1e-12);
}

TEST(discord, state_b_numeric) {
  ClassicalCorrelation cc = classical_correlation_numeric(kStateB);
  EXPECT_NEAR(cc.max_g, kStateBMaxG, 1e-9);
  DiscordReport rep = discord_numeric(kStateB);
  EXPECT_NEAR(rep.discord, kStateBQ, 1e-9);
  EXPECT_NEAR(discord_theorem3(kStateB.r, 0.3), kStateBQ, 1e-12);
}

TEST(discord, classical_correlation_two_routes) {
  auto rng = seeded_engine(42);
  for (int trial = 0; trial < 20; ++trial) {
    BlochParams p = sample_family(Family::kGeneric, rng);
    ClassicalCorrelation cc = classical_correlation_numeric(p);
    double s_a = von_neumann_entropy(partial_trace(build_state(p), Side::kA));
    ASSERT_NEAR(cc.value, s_a - conditional_entropy(p, cc.axis), 1e-10);
  }
}

TEST(discord, product_states_have_no_discord) {
  auto rng = seeded_engine(43);
  for (int trial = 0; trial < 30; ++trial) {
    BlochParams p;
    if (trial % 3 == 0) {
      p.r = uniform_ball(rng);
    } else if (trial % 3 == 1) {
      p.s = uniform_ball(rng);
    } else {
      int axis = trial % 2;
      p.r[axis] = uniform(rng, -1.0, 1.0);
      p.s[axis] = uniform(rng, -1.0, 1.0);
      p.c[axis] = p.r[axis] * p.s[axis];
    }
    DiscordReport rep = discord_numeric(p);
    ASSERT_NEAR(rep.discord, 0.0, 1e-8);
    ASSERT_NEAR(rep.classical_corr, 0.0, 1e-8);
  }
}

TEST(discord, nonnegative_on_random_states) {
  auto rng = seeded_engine(44);
  for (int trial = 0; trial < 100; ++trial) {
    DiscordReport rep = discord_numeric(sample_family(Family::kGeneric, rng));
    ASSERT_GE(rep.discord, -1e-8);
    ASSERT_GE(rep.classical_corr, -1e-9);
    ASSERT_GE(rep.mutual_info, -1e-9);
  }
}

TEST(discord, theta_range_examples) {
  ThetaInterval a = theta_range(0.0, 0.3);
  EXPECT_NEAR(a.min, 0.09, 1e-15);
  EXPECT_NEAR(a.max, 0.09, 1e-15);
  ThetaInterval b = theta_range(0.3, 0.3);
  EXPECT_EQ(b.min, 0.0);
  EXPECT_NEAR(b.max, 0.36, 1e-15);
  ThetaInterval c = theta_range(0.4, 0.0);
  EXPECT_NEAR(c.min, 0.16, 1e-15);
  EXPECT_NEAR(c.max, 0.16, 1e-15);
}

TEST(discord, g_reduced_shape) {
  for (auto [r, c] : {std::pair{0.3, 0.3}, {0.1, 0.25}, {0.4, -0.2}, {0.05, -0.5}}) {
    ThetaInterval range = theta_range(r, c);
    EXPECT_NEAR(g_reduced(range.min, r, c), g_reduced(range.max, r, c), 1e-13);
    double mid = r * r + c * c;
    double at_mid = g_reduced(mid, r, c);
    for (int i = 0; i <= 1000; ++i) {
      double theta = range.min + (range.max - range.min) * i / 1000.0;
      ASSERT_GE(g_reduced(theta, r, c), at_mid - 1e-15);
    }
  }
  EXPECT_THROW(g_reduced(-0.1, 0.3, 0.3), DomainError);
  EXPECT_THROW(g_reduced(0.5, 0.3, 0.3), DomainError);
}

TEST(discord, theorem1_examples) {
  for (double r : {0.0, 0.3, 0.7, 1.0}) {
    EXPECT_NEAR(discord_theorem1(r, 0.0), 0.0, 1e-15);
  }
  EXPECT_NEAR(discord_theorem1(0.0, 0.25), discord_werner(0.25), 1e-15);
  EXPECT_NEAR(discord_theorem1(0.3, 0.2), kTheorem1R03C02, 1e-12);
  BlochParams p{{0.3, 0.0, 0.0}, {0, 0, 0}, {0.2, 0.2, 0.2}};
  EXPECT_NEAR(discord_numeric(p).discord, kTheorem1R03C02, 1e-9);
  EXPECT_THROW(discord_theorem1(0.9, 0.3), DomainError);
}

TEST(discord, theorem1_c_equals_r) {
  for (double c : {0.05, 0.1, 0.2, 0.3, 1.0 / (1.0 + std::sqrt(5.0))}) {
    EXPECT_NEAR(discord_theorem1_c_eq_r(c), discord_theorem1(c, c), 1e-12);
    BlochParams p{{0.0, c, 0.0}, {0, 0, 0}, {c, c, c}};
    EXPECT_NEAR(discord_numeric(p).discord, discord_theorem1_c_eq_r(c), 1e-6);
  }
  EXPECT_THROW(discord_theorem1_c_eq_r(0.4), DomainError);
  EXPECT_THROW(discord_theorem1_c_eq_r(0.0), DomainError);
}

TEST(discord, theorem1_internal_identity) {
  auto rng = seeded_engine(45);
  for (int trial = 0; trial < 200; ++trial) {
    BlochParams p = sample_family(Family::kTheorem1, rng);
    double r = norm(p.r);
    double c = p.c[0];
    double root = std::sqrt(4 * c * c + r * r);
    double lambdas[4] = {0.25 * (1 + c + r), 0.25 * (1 + c - r), 0.25 * (1 - c + root),
                         0.25 * (1 - c - root)};
    double sum = 0.0;
    for (double l : lambdas) {
      sum += xlog2x(std::max(0.0, l));
    }
    double max_g = 0.5 * entropic_h0(r + std::abs(c)) + 0.5 * entropic_h0(std::abs(r - std::abs(c)));
    ASSERT_NEAR(discord_theorem1(r, c), 2.0 + sum - max_g, 1e-12);
  }
}

TEST(discord, werner) {
  EXPECT_NEAR(discord_werner(0.0), 0.0, 1e-15);
  EXPECT_NEAR(discord_werner(-1.0), 1.0, 1e-12);  // singlet
  EXPECT_THROW(discord_werner(0.5), DomainError);
  EXPECT_THROW(discord_werner(-1.1), DomainError);
  EXPECT_NEAR(discord_numeric(kSinglet).discord, 1.0, 1e-9);
}

TEST(discord, eq214_examples) {
  EXPECT_NEAR(discord_r0_isotropic(0.0, 0.25), discord_theorem1(0.0, 0.25), 1e-15);
  EXPECT_NEAR(discord_r0_isotropic(0.5, 0.0), 0.0, 1e-15);
  EXPECT_NEAR(discord_r0_isotropic(0.2, 0.2), kEq214S02C02, 1e-12);
  BlochParams p{{0, 0, 0}, {0.0, 0.2, 0.0}, {0.2, 0.2, 0.2}};
  EXPECT_NEAR(discord_numeric(p).discord, kEq214S02C02, 1e-9);
}

TEST(discord, theorem2_branches) {
  BlochParams zero{{0.3, 0.0, 0.2}, {0, 0, 0}, {0, 0, 0.4}};
  EXPECT_EQ(discord_theorem2(zero), 0.0);
  EXPECT_NEAR(discord_numeric(zero).discord, 0.0, 1e-8);

  BlochParams product{{0, 0, 0}, {0.1, 0.1, 0.1}, {0, 0, 0}};
  EXPECT_NEAR(discord_theorem2(product), 0.0, 1e-8);
  // The printed expression gives H_0(1) = 1 for this uncorrelated state.
  EXPECT_NEAR(discord_theorem2(product, Theorem2Mode::kPrintedFormula), 1.0, 1e-12);

  BlochParams branch2{{0, 0, 0}, {0.1, 0.2, 0.2}, {0, 0, 0.3}};
  EXPECT_NEAR(discord_theorem2(branch2), kTheorem2Branch2, 1e-9);

  EXPECT_THROW(discord_theorem2(kStateA), FamilyError);
  EXPECT_THROW(discord_theorem2({{0.1, 0, 0}, {0.1, 0, 0}, {0, 0, 0.1}}), FamilyError);
}

TEST(discord, theorem3_examples) {
  EXPECT_NEAR(discord_theorem3({0.2, 0.1, 0.3}, 0.0), 0.0, 1e-15);
  EXPECT_NEAR(discord_theorem3({0.0, 0.0, 0.4}, 0.2), kTheorem3R04C02, 1e-12);
  BlochParams p{{0.0, 0.0, 0.4}, {0, 0, 0}, {0.2, 0.2, 0.0}};
  EXPECT_NEAR(discord_numeric(p).discord, kTheorem3R04C02, 1e-9);
  EXPECT_THROW(discord_theorem3({0.9, 0.0, 0.0}, 0.9), DomainError);
}

TEST(discord, theorem3_beta_forms_agree) {
  auto rng = seeded_engine(46);
  for (int trial = 0; trial < 500; ++trial) {
    BlochParams p = sample_family(Family::kTheorem3, rng);
    double perp = std::hypot(p.r[0], p.r[1]);
    double c = p.c[0];
    auto ratio = theorem3_beta_ratio_form(p.r, c);
    ASSERT_NEAR(ratio[0], std::hypot(perp + c, p.r[2]), 1e-12);
    ASSERT_NEAR(ratio[1], std::hypot(perp - c, p.r[2]), 1e-12);
  }
  EXPECT_THROW(theorem3_beta_ratio_form({0, 0, 0.4}, 0.2), DomainError);
}

TEST(discord, dispatch) {
  EXPECT_EQ(classify(BlochParams{}), Method::kWerner);
  EXPECT_EQ(classify(kStateA), Method::kEq214);
  EXPECT_EQ(classify(kStateB), Method::kTheorem3);
  EXPECT_EQ(classify({{0.3, 0, 0}, {0, 0, 0}, {0.2, 0.2, 0.2}}), Method::kTheorem1);
  EXPECT_EQ(classify({{0.2, 0, 0}, {0, 0, 0}, {0.2, 0.2, 0.2}}), Method::kTheorem1CEqR);
  EXPECT_EQ(classify({{0.3, 0, 0.2}, {0, 0, 0}, {0, 0, 0.4}}), Method::kTheorem2Zero);
  EXPECT_EQ(classify({{0, 0, 0}, {0.1, 0.2, 0.2}, {0, 0, 0.3}}), Method::kTheorem2Formula);
  EXPECT_EQ(classify({{0.1, 0, 0}, {0.1, 0, 0}, {0.2, 0.1, 0}}), Method::kNumeric);

  // The r = 0, c1 = c2 = 0 family goes to the optimizer unless asked otherwise.
  BlochParams branch2{{0, 0, 0}, {0.1, 0.2, 0.2}, {0, 0, 0.3}};
  EXPECT_EQ(compute_discord(branch2).method, Method::kNumeric);
  DiscordOptions printed;
  printed.theorem2_printed_formula = true;
  EXPECT_EQ(compute_discord(branch2, printed).method, Method::kTheorem2Formula);

  DiscordOptions numeric;
  numeric.force_numeric = true;
  EXPECT_EQ(compute_discord(kStateA, numeric).method, Method::kNumeric);

  auto rng = seeded_engine(47);
  for (Family f : {Family::kTheorem1, Family::kEq214, Family::kTheorem2Zero, Family::kTheorem3,
                   Family::kWerner}) {
    for (int trial = 0; trial < 10; ++trial) {
      BlochParams p = sample_family(f, rng);
      DiscordReport fast = compute_discord(p);
      DiscordReport slow = discord_numeric(p);
      ASSERT_NEAR(fast.discord, slow.discord, 1e-6);
      ASSERT_NEAR(fast.mutual_info, slow.mutual_info, 1e-12);
      ASSERT_NEAR(fast.discord, fast.mutual_info - fast.classical_corr, 1e-12);
      ASSERT_EQ(fast.spectrum, slow.spectrum);
      // The reported axis attains the maximum of G.
      ASSERT_NEAR(g_objective(p, fast.argmax_axis), g_objective(p, slow.argmax_axis), 1e-9);
    }
  }
}

TEST(discord, monotone_helper) {
  double prev = g_monotone_helper(1e-4);
  for (int i = 2; i < 10000; ++i) {
    double x = i * 1e-4;
    double cur = g_monotone_helper(x);
    ASSERT_GT(cur, prev) << "x = " << x;
    prev = cur;
  }
  EXPECT_THROW(g_monotone_helper(0.0), DomainError);
  EXPECT_THROW(g_monotone_helper(1.0), DomainError);
}
