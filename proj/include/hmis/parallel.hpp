#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace hmis {

/// 0 means "all hardware threads".
inline std::size_t resolve_threads(std::size_t requested) {
  if (requested != 0) return requested;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Runs body(begin, end) over [0, n) split into contiguous chunks. Callers
/// write only to per-index or per-chunk slots, so results never depend on
/// the thread count.
template <class Body>
void parallel_for(std::size_t n, std::size_t threads, Body&& body) {
  const std::size_t t = std::min(resolve_threads(threads), std::max<std::size_t>(1, n));
  if (t <= 1 || n < 2) {
    body(std::size_t{0}, n);
    return;
  }
  const std::size_t chunk = (n + t - 1) / t;
  std::vector<std::jthread> workers;
  workers.reserve(t);
  for (std::size_t begin = 0; begin < n; begin += chunk) {
    const std::size_t end = std::min(n, begin + chunk);
    workers.emplace_back([&body, begin, end] { body(begin, end); });
  }
}

}  // namespace hmis
