#pragma once

#include <cstddef>
#include <functional>

namespace sievelab {

// Worker cap shared by all modules. 0 = hardware concurrency.
// Resolution order: set_thread_cap() (CLI --threads) > SIEVELAB_THREADS env.
void set_thread_cap(unsigned n);
unsigned thread_cap();

// Static range split across workers. Bodies must not touch shared mutable
// state; every call site here writes to disjoint slots.
void parallel_for(size_t begin, size_t end, const std::function<void(size_t)>& body);

}  // namespace sievelab
