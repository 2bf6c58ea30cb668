#pragma once

#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace blockpoly {

// Thread count resolution: BLOCKPOLY_THREADS overrides the requested value.
inline int resolve_threads(int requested) {
  if (const char* env = std::getenv("BLOCKPOLY_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<int>(v);
  }
  return requested >= 1 ? requested : 1;
}

// Runs fn(begin, end) over [0, n) split into contiguous chunks, one per worker.
// Chunk boundaries depend only on (n, threads), so chunked reductions that
// combine partial results in chunk order are reproducible.
inline void parallel_chunks(std::size_t n, int threads,
                            const std::function<void(std::size_t, std::size_t, int)>& fn) {
  if (n == 0) return;
  int workers = threads < 1 ? 1 : threads;
  if (static_cast<std::size_t>(workers) > n) workers = static_cast<int>(n);
  if (workers == 1) {
    fn(0, n, 0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    std::size_t lo = static_cast<std::size_t>(w) * chunk;
    std::size_t hi = lo + chunk < n ? lo + chunk : n;
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi, w] { fn(lo, hi, w); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace blockpoly
