#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace nearring {

/// 0 means all available cores.
inline unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls fn(chunk, begin, end) on `chunks` contiguous disjoint ranges covering
/// [0, count), using up to `threads` workers. Chunk boundaries depend only on
/// `count` and `chunks`, never on the worker count.
template <class Fn>
void parallel_chunks(std::size_t count, std::size_t chunks, unsigned threads, Fn&& fn) {
  chunks = std::max<std::size_t>(1, std::min(chunks, count));
  auto bounds = [&](std::size_t c) { return count * c / chunks; };
  const unsigned workers = std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(chunks));
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) fn(c, bounds(c), bounds(c + 1));
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t c = w; c < chunks; c += workers) fn(c, bounds(c), bounds(c + 1));
    });
  }
}

}  // namespace nearring
