// Copyright 2026 The stabrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STABRANK_PARALLEL_HPP
#define STABRANK_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace stabrank {

/// Worker count: set_thread_count, else STABRANK_THREADS, else hardware concurrency.
size_t thread_count();
/// 0 restores the default.
void set_thread_count(size_t k);

/// Runs body(begin, end) over contiguous chunks of [0, n). Chunk i always covers the same
/// range for a given n and thread count, so chunked reductions combine deterministically.
void parallel_for(size_t n, const std::function<void(size_t, size_t)> &body);

}  // namespace stabrank

#endif
