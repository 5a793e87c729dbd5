#include "halfweight/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace halfweight {

namespace {
std::atomic<unsigned> g_thread_cap{0};
}

void set_thread_cap(unsigned cap) { g_thread_cap.store(cap); }

unsigned effective_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  unsigned cap = g_thread_cap.load();
  if (cap == 0) return hw;
  return cap < hw ? cap : hw;
}

void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
  std::size_t total = end > begin ? end - begin : 0;
  unsigned nt = effective_threads();
  if (total == 0) return;
  if (nt <= 1 || total < 2 * nt) {
    fn(begin, end);
    return;
  }
  std::vector<std::thread> workers;
  std::size_t chunk = (total + nt - 1) / nt;
  for (unsigned i = 0; i < nt; ++i) {
    std::size_t lo = begin + i * chunk;
    if (lo >= end) break;
    std::size_t hi = lo + chunk < end ? lo + chunk : end;
    workers.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& w : workers) w.join();
}

}  // namespace halfweight
