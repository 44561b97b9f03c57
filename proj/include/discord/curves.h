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

#ifndef DISCORD_CURVES_H
#define DISCORD_CURVES_H

#include <cstddef>
#include <vector>

#include "discord/density.h"
#include "discord/report_io.h"

namespace discord {

/// Profile of the measurement objective against theta = |r + c(.)z|^2.
///
///  * s = 0, c1 = c2 = c3: the exact reduced curve g_reduced on
///    [theta_min, theta_max], `samples` evenly spaced points.
///  * r = 0, c1 = c2 = c3: the same curve with |s| in the role of |r|.
///  * s = 0 otherwise: G is not a function of theta alone, so each row holds
///    the largest G seen at that theta over a dense lattice of measurement
///    axes. Grid points that no lattice axis falls near are dropped.
///
/// A degenerate interval (c = 0) gives a single row. Throws FamilyError for
/// states outside these cases and RangeError for samples < 2 on a proper
/// interval.
std::vector<CurvePoint> g_curve(const BlochParams &p, std::size_t samples);

/// Lattice size for the profile case.
inline constexpr std::size_t kProfileLatticePoints = 200000;

}  // namespace discord

#endif  // DISCORD_CURVES_H
