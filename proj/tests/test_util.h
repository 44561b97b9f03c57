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

#ifndef DISCORD_TESTS_TEST_UTIL_H
#define DISCORD_TESTS_TEST_UTIL_H

#include <random>

#include "discord/density.h"
#include "discord/sampling.h"

namespace discord::test_util {

/// Random Hermitian matrix with unit trace (not necessarily positive).
inline Mat4 random_hermitian_unit_trace(std::mt19937_64 &rng) {
  Mat4 m;
  for (std::size_t i = 0; i < 4; ++i) {
    m(i, i) = uniform(rng, -1.0, 1.0);
    for (std::size_t j = i + 1; j < 4; ++j) {
      Complex z(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
      m(i, j) = z;
      m(j, i) = std::conj(z);
    }
  }
  Complex shift = (1.0 - m.trace()) / 4.0;
  for (std::size_t i = 0; i < 4; ++i) {
    m(i, i) += shift;
  }
  return m;
}

inline Vec3 random_unit(std::mt19937_64 &rng) {
  while (true) {
    Vec3 v = uniform_ball(rng);
    double n = norm(v);
    if (n > 1e-3) {
      return (1.0 / n) * v;
    }
  }
}

}  // namespace discord::test_util

#endif  // DISCORD_TESTS_TEST_UTIL_H
