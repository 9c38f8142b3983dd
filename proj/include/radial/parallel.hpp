// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The radial-mra Authors

#pragma once

#include <cstddef>
#include <functional>

namespace radial {

/// Worker cap for library loops. Defaults to RADIAL_MRA_THREADS when set,
/// otherwise the hardware concurrency.
int thread_count();
void set_thread_count(int n);

/// Runs body(i) for i in [0, n). Each index is visited exactly once and
/// writes only its own output slot, so results do not depend on the thread
/// count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace radial
