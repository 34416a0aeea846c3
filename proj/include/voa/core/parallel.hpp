#pragma once

#include <cstddef>
#include <functional>

namespace voa {

/// Worker cap: VOA_LAB_THREADS when set and positive, otherwise the hardware
/// concurrency (at least one).
unsigned thread_cap();

/// Runs body(i) for i in [0, n) on up to thread_cap() threads. The body must
/// only write to state owned by index i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace voa
