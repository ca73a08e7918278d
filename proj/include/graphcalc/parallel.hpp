#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace graphcalc {

/// Worker count from GRAPHCALC_THREADS (0 or unset = hardware concurrency).
inline unsigned worker_count() {
  unsigned n = 0;
  if (const char* env = std::getenv("GRAPHCALC_THREADS")) {
    try {
      n = static_cast<unsigned>(std::stoul(env));
    } catch (...) {
      n = 0;
    }
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

/// Runs body(worker, worker_total) on min(worker_count(), jobs) threads.
template <typename Body>
void run_workers(unsigned jobs, Body&& body) {
  const unsigned total = std::max(1u, std::min(worker_count(), jobs));
  if (total == 1) {
    body(0u, 1u);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(total);
  for (unsigned w = 0; w < total; ++w) {
    pool.emplace_back([&body, w, total] { body(w, total); });
  }
}

}  // namespace graphcalc
