#pragma once

#include <cstddef>
#include <functional>

namespace nazgsa {

/// Worker count: NAZGSA_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t default_thread_count();

/// Overrides the worker count for subsequent parallel calls in this process
/// (0 restores the default).
void set_thread_count(std::size_t threads);

/// Calls body(i) for every i in [0, count). Work items are claimed
/// dynamically, so body must write only to slot i of any shared output.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace nazgsa
