// Copyright 2026 The sosgap Authors
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

#pragma once

#include <condition_variable>
#include <cstddef>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace sosgap {

/// Runs map(i) for i in [0, count) on up to `workers` threads and feeds the
/// results to reduce() strictly in index order on the calling thread. At most
/// 2 * workers results are held in flight. The first exception thrown by
/// either callback is rethrown after all workers have stopped.
///
/// reduce() may return false to stop scheduling new work early.
template <typename Map, typename Reduce>
void ordered_map_reduce(std::size_t count, unsigned workers, Map&& map,
                        Reduce&& reduce) {
  using Result = decltype(map(std::size_t{0}));
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      if (!reduce(map(i))) return;
    }
    return;
  }

  const std::size_t window = 2 * static_cast<std::size_t>(workers);
  std::mutex mu;
  std::condition_variable cv;
  std::size_t next = 0;
  std::size_t reduced = 0;
  bool stop = false;
  std::exception_ptr error;
  std::map<std::size_t, Result> ready;

  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return stop || next >= count || next < reduced + window; });
        if (stop || next >= count) return;
        i = next++;
      }
      try {
        Result r = map(i);
        std::lock_guard lock(mu);
        ready.emplace(i, std::move(r));
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        stop = true;
      }
      cv.notify_all();
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);

  for (std::size_t i = 0; i < count; ++i) {
    Result r;
    {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return stop || ready.contains(i); });
      if (stop && !ready.contains(i)) break;
      auto node = ready.extract(i);
      r = std::move(node.mapped());
    }
    bool keep_going = false;
    try {
      keep_going = reduce(std::move(r));
    } catch (...) {
      std::lock_guard lock(mu);
      if (!error) error = std::current_exception();
      stop = true;
    }
    {
      std::lock_guard lock(mu);
      ++reduced;
      if (!keep_going) stop = true;
    }
    cv.notify_all();
    if (!keep_going) break;
  }
  {
    std::lock_guard lock(mu);
    stop = true;
  }
  cv.notify_all();
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace sosgap
