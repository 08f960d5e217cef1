#include "sievelab/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace sievelab {

static std::atomic<unsigned> g_cap{0};

void set_thread_cap(unsigned n) { g_cap.store(n); }

unsigned thread_cap() {
  unsigned n = g_cap.load();
  if (n == 0) {
    if (const char* env = std::getenv("SIEVELAB_THREADS")) {
      long v = std::strtol(env, nullptr, 10);
      if (v > 0) n = static_cast<unsigned>(v);
    }
  }
  if (n == 0) n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  return n;
}

void parallel_for(size_t begin, size_t end, const std::function<void(size_t)>& body) {
  if (end <= begin) return;
  size_t total = end - begin;
  unsigned workers = thread_cap();
  if (workers <= 1 || total < 2) {
    for (size_t i = begin; i < end; ++i) body(i);
    return;
  }
  if (workers > total) workers = static_cast<unsigned>(total);
  std::atomic<size_t> next{begin};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= end) break;
        body(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace sievelab
