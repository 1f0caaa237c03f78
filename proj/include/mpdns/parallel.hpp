// Copyright (c) 2026 The mpdns developers
// SPDX-License-Identifier: Apache-2.0

#ifndef MPDNS_PARALLEL_HPP
#define MPDNS_PARALLEL_HPP

#include <functional>
#include <vector>

namespace mpdns {

/// Worker cap for internal parallelism, from MPDNS_THREADS (default: hardware
/// concurrency). Read once per process.
int max_threads();

/// Runs independent tasks on up to max_threads() (or `thread_cap`) workers.
/// Tasks must write to disjoint outputs; results are bitwise independent of
/// the number of workers, so outputs stay deterministic under any cap.
void parallel_run(std::vector<std::function<void()>>& tasks, int thread_cap = 0);

}  // namespace mpdns

#endif
