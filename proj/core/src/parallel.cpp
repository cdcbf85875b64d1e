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

#include "cutq/parallel.hpp"

#include <algorithm>
#include <atomic>

namespace cutq {

struct ThreadPool::Batch {
    std::size_t count = 0;
    const std::function<void(std::size_t)>* fn = nullptr;
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::mutex done_mutex;
    std::condition_variable done_cv;
};

ThreadPool::ThreadPool(std::size_t workers) {
    threads_.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i) {
        threads_.emplace_back([this] { worker_loop(); });
    }
}

ThreadPool::~ThreadPool() {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        stopping_ = true;
    }
    wake_.notify_all();
    for (auto& t : threads_) t.join();
}

void ThreadPool::drain(Batch& batch) {
    for (;;) {
        const std::size_t i = batch.next.fetch_add(1, std::memory_order_relaxed);
        if (i >= batch.count) break;
        (*batch.fn)(i);
        if (batch.done.fetch_add(1, std::memory_order_acq_rel) + 1 == batch.count) {
            std::lock_guard<std::mutex> lock(batch.done_mutex);
            batch.done_cv.notify_all();
        }
    }
}

void ThreadPool::worker_loop() {
    for (;;) {
        std::shared_ptr<Batch> batch;
        {
            std::unique_lock<std::mutex> lock(mutex_);
            wake_.wait(lock, [this] { return stopping_ || !active_.empty(); });
            if (stopping_ && active_.empty()) return;
            // Pick the most recently posted batch; nested batches finish
            // sooner that way and unblock their parents.
            for (auto it = active_.rbegin(); it != active_.rend(); ++it) {
                if ((*it)->next.load(std::memory_order_relaxed) < (*it)->count) {
                    batch = *it;
                    break;
                }
            }
            if (!batch) {
                active_.erase(
                    std::remove_if(active_.begin(), active_.end(),
                                   [](const std::shared_ptr<Batch>& b) {
                                       return b->next.load(std::memory_order_relaxed) >= b->count;
                                   }),
                    active_.end());
                continue;
            }
        }
        drain(*batch);
    }
}

void ThreadPool::parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    if (threads_.empty() || count == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    auto batch = std::make_shared<Batch>();
    batch->count = count;
    batch->fn = &fn;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        active_.push_back(batch);
    }
    wake_.notify_all();
    drain(*batch);
    // The caller ran out of indices to claim; wait for stragglers.
    {
        std::unique_lock<std::mutex> lock(batch->done_mutex);
        batch->done_cv.wait(lock, [&] {
            return batch->done.load(std::memory_order_acquire) == batch->count;
        });
    }
    {
        std::lock_guard<std::mutex> lock(mutex_);
        active_.erase(std::remove(active_.begin(), active_.end(), batch), active_.end());
    }
}

ThreadPool& global_pool() {
    static ThreadPool pool(std::thread::hardware_concurrency() > 0
                               ? std::thread::hardware_concurrency()
                               : 2);
    return pool;
}

}  // namespace cutq
