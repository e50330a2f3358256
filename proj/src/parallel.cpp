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

#include "stabrank/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace stabrank {

namespace {
std::atomic<size_t> g_threads{0};
}

size_t thread_count() {
  size_t k = g_threads.load();
  if (k > 0) {
    return k;
  }
  if (const char *env = std::getenv("STABRANK_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0) {
        return static_cast<size_t>(v);
      }
    } catch (const std::exception &) {
    }
  }
  return std::max<size_t>(1, std::thread::hardware_concurrency());
}

void set_thread_count(size_t k) { g_threads.store(k); }

void parallel_for(size_t n, const std::function<void(size_t, size_t)> &body) {
  size_t workers = std::min(thread_count(), n);
  if (workers <= 1 || n < 64) {
    if (n > 0) {
      body(0, n);
    }
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  size_t chunk = (n + workers - 1) / workers;
  for (size_t w = 0; w < workers; w++) {
    size_t b = w * chunk;
    size_t e = std::min(n, b + chunk);
    if (b >= e) {
      break;
    }
    pool.emplace_back([&, w, b, e] {
      try {
        body(b, e);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto &t : pool) {
    t.join();
  }
  for (auto &e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
}

}  // namespace stabrank
