#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "sgcf/chip_firing.hpp"

namespace sgcf::detail {

void require_dimension(const ChipFiringPair& p, const Configuration& c);
void require_valid(const ChipFiringPair& p, const Configuration& c, const char* op);

/// r_scale * ML^{-1} c.
IntVector scaled_R(const ChipFiringPair& p, const Configuration& c);

/// Stabilizes the scaled R-space point in place, accumulating site firings
/// into `fired` (which must have the pair's dimension).
void stabilize_scaled(const ChipFiringPair& p, IntVector& x, IntVector& fired,
                      const EngineOptions& opts);

/// Union of all nonzero 0/1 vectors chi with x - K chi >= 0, as a bit mask
/// over sites (0 when no such chi exists). K is n x n.
std::uint64_t maximal_legal_set(const IntVector& x, const IntMatrix& k, const EngineOptions& opts);

/// Runs fn(i) for i in [0, count) on up to `jobs` threads; the first
/// exception thrown by any worker is rethrown.
template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  const std::size_t n = std::min<std::size_t>(jobs, count);
  threads.reserve(n);
  for (std::size_t t = 0; t < n; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace sgcf::detail
