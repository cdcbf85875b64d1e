// Copyright 2026 The cutq Authors
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

#pragma once

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

namespace cutq {

/// Fork-join worker pool used for gradient stencils, multistart runs, and
/// rounding trials. The calling thread always participates in its own batch,
/// so nested parallel_for calls (a pooled run issuing pooled gradients) make
/// progress even when every worker is busy: worst case the call degrades to
/// serial execution on the caller.
///
/// Results must be written to per-index slots by the callback; the pool gives
/// no ordering guarantees, which is why all users are slot-writers. That is
/// what makes outputs identical for any worker count.
class ThreadPool {
  public:
    /// Creates a pool with `workers` threads in addition to callers.
    /// workers == 0 means every parallel_for runs inline on the caller.
    explicit ThreadPool(std::size_t workers);
    ~ThreadPool();

    ThreadPool(const ThreadPool&) = delete;
    ThreadPool& operator=(const ThreadPool&) = delete;

    std::size_t worker_count() const { return threads_.size(); }

    /// Runs fn(i) for i in [0, count) across the pool and the caller;
    /// returns once every index has finished.
    void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

  private:
    struct Batch;
    void worker_loop();
    // Claims and runs indices of `batch` until none remain.
    static void drain(Batch& batch);

    std::mutex mutex_;
    std::condition_variable wake_;
    std::vector<std::shared_ptr<Batch>> active_;
    std::vector<std::thread> threads_;
    bool stopping_ = false;
};

/// Shared pool helper: lazily constructs a process-wide pool sized to the
/// hardware, or a caller-specified size. Most library entry points take an
/// explicit worker count and build a local pool instead; this exists for
/// one-shot convenience calls.
ThreadPool& global_pool();

}  // namespace cutq
