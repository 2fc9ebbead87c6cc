#include "nalg/parallel.hpp"

namespace nalg {

namespace {
std::atomic<std::size_t> g_workers{0};
}

void set_max_workers(std::size_t n) { g_workers = n; }

std::size_t max_workers() {
  std::size_t n = g_workers.load();
  if (n != 0) return n;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace nalg
