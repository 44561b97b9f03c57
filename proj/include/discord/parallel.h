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

#ifndef DISCORD_PARALLEL_H
#define DISCORD_PARALLEL_H

#include <cstddef>
#include <functional>

namespace discord {

/// Worker count: DISCORD_KIT_THREADS if set and positive, otherwise the
/// hardware concurrency (0 means auto).
std::size_t worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. If any call
/// throws, the exception from the smallest index is rethrown after all workers
/// finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &body);

}  // namespace discord

#endif  // DISCORD_PARALLEL_H
