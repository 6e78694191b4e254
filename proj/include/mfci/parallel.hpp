#pragma once

#include <cstddef>
#include <functional>

namespace mfci {

// Worker count from MFCI_THREADS (default 1).
int thread_count();
// Runs fn(i) for i in [0, n). Each index owns its output slot, so results do
// not depend on the number of threads.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

}  // namespace mfci
