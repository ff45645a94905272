#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace hypexp {

/// Splits [0, n) into `workers` contiguous chunks and runs fn(begin, end, chunk)
/// on each. Chunk boundaries depend only on (n, workers), so callers that
/// merge per-chunk results in chunk order get worker-count independent output
/// as long as the per-element work is pure.
template <class Fn>
void parallel_chunks(std::size_t n, unsigned workers, Fn&& fn) {
  workers = std::max(1u, workers);
  if (workers == 1 || n < 2) {
    fn(std::size_t{0}, n, 0u);
    return;
  }
  const std::size_t chunks = std::min<std::size_t>(workers, n);
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> threads;
    threads.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
      const std::size_t begin = n * c / chunks;
      const std::size_t end = n * (c + 1) / chunks;
      threads.emplace_back([&, begin, end, c] {
        try {
          fn(begin, end, static_cast<unsigned>(c));
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

/// Number of chunks parallel_chunks will use for the given sizes.
inline std::size_t chunk_count(std::size_t n, unsigned workers) {
  workers = std::max(1u, workers);
  if (workers == 1 || n < 2) return 1;
  return std::min<std::size_t>(workers, n);
}

}  // namespace hypexp
