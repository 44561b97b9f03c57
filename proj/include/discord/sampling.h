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

#ifndef DISCORD_SAMPLING_H
#define DISCORD_SAMPLING_H

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "discord/density.h"

namespace discord {

/// Parameter families with a closed-form discord.
enum class Family {
  kTheorem1,        // s = 0, c1 = c2 = c3
  kEq214,           // r = 0, c1 = c2 = c3
  kTheorem2Zero,    // s = 0, c1 = c2 = 0
  kTheorem2Formula, // r = 0, c1 = c2 = 0
  kTheorem3,        // s = 0, c1 = c2, c3 = 0
  kWerner,          // r = s = 0, c1 = c2 = c3
  kGeneric,         // any physical state in the family of diagonal correlations
};

std::string_view family_name(Family f);
/// Throws std::invalid_argument for unknown names.
Family family_from_name(std::string_view name);
/// Every family except kGeneric, in declaration order.
const std::vector<Family> &analytic_families();

/// Uniform double in [lo, hi) from the top 53 bits of the engine output, so
/// draws are identical across standard libraries.
double uniform(std::mt19937_64 &rng, double lo, double hi);
/// Uniform point in the closed unit ball scaled by `radius`.
Vec3 uniform_ball(std::mt19937_64 &rng, double radius = 1.0);

/// Rejection-samples a physical member of the family.
BlochParams sample_family(Family f, std::mt19937_64 &rng);

/// Engine for (seed, stream); different streams give independent sequences.
std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream = 0);

}  // namespace discord

#endif  // DISCORD_SAMPLING_H
