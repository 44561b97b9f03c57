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

#include "discord/sampling.h"

#include <stdexcept>
#include <string>

#include "discord/errors.h"

namespace discord {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kTheorem1:
      return "theorem1";
    case Family::kEq214:
      return "eq214";
    case Family::kTheorem2Zero:
      return "theorem2-zero";
    case Family::kTheorem2Formula:
      return "theorem2-formula";
    case Family::kTheorem3:
      return "theorem3";
    case Family::kWerner:
      return "werner";
    case Family::kGeneric:
      return "generic";
  }
  return "generic";
}

Family family_from_name(std::string_view name) {
  for (Family f : {Family::kTheorem1, Family::kEq214, Family::kTheorem2Zero,
                   Family::kTheorem2Formula, Family::kTheorem3, Family::kWerner,
                   Family::kGeneric}) {
    if (family_name(f) == name) {
      return f;
    }
  }
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

const std::vector<Family> &analytic_families() {
  static const std::vector<Family> families{Family::kTheorem1,     Family::kEq214,
                                            Family::kTheorem2Zero, Family::kTheorem2Formula,
                                            Family::kTheorem3,     Family::kWerner};
  return families;
}

double uniform(std::mt19937_64 &rng, double lo, double hi) {
  double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

Vec3 uniform_ball(std::mt19937_64 &rng, double radius) {
  while (true) {
    Vec3 v{uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
    if (dot(v, v) <= 1.0) {
      return radius * v;
    }
  }
}

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

BlochParams sample_family(Family f, std::mt19937_64 &rng) {
  constexpr int kMaxAttempts = 100000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    BlochParams p;
    switch (f) {
      case Family::kTheorem1: {
        double c = uniform(rng, -1.0, 1.0 / 3.0);
        p.r = uniform_ball(rng);
        p.c = {c, c, c};
        break;
      }
      case Family::kEq214: {
        double c = uniform(rng, -1.0, 1.0 / 3.0);
        p.s = uniform_ball(rng);
        p.c = {c, c, c};
        break;
      }
      case Family::kTheorem2Zero:
        p.r = uniform_ball(rng);
        p.c = {0.0, 0.0, uniform(rng, -1.0, 1.0)};
        break;
      case Family::kTheorem2Formula:
        p.s = uniform_ball(rng);
        p.c = {0.0, 0.0, uniform(rng, -1.0, 1.0)};
        break;
      case Family::kTheorem3: {
        double c = uniform(rng, -1.0, 1.0);
        p.r = uniform_ball(rng);
        p.c = {c, c, 0.0};
        break;
      }
      case Family::kWerner: {
        double c = uniform(rng, -1.0, 1.0 / 3.0);
        p.c = {c, c, c};
        break;
      }
      case Family::kGeneric:
        p.r = uniform_ball(rng);
        p.s = uniform_ball(rng);
        p.c = {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
        break;
    }
    if (is_physical(p)) {
      return p;
    }
  }
  throw ConvergenceError("sample_family: no physical state found for family " +
                         std::string(family_name(f)));
}

}  // namespace discord
