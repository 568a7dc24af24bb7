// Copyright 2026 The cohsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace cohsim {

// Worker cap: COHSIM_THREADS if set (>= 1), otherwise hardware concurrency.
int thread_budget();

// Runs fn(i) for i in [0, n) across up to thread_budget() threads.  Work is
// partitioned by index, so writes to index-addressed slots make the result
// independent of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace cohsim
