#pragma once

#include <cstddef>
#include <future>
#include <vector>

namespace sunit::detail {

/// Runs fn(chunk_index, begin, end) over [0, n) split into contiguous chunks,
/// one per worker. Callers merge per-chunk results in chunk order, which keeps
/// every consumer deterministic regardless of the worker count.
template <typename Fn>
void run_chunked(size_t n, unsigned jobs, Fn&& fn) {
  if (n == 0) return;
  size_t workers = jobs == 0 ? 1 : jobs;
  if (workers > n) workers = n;
  if (workers == 1) {
    fn(size_t{0}, size_t{0}, n);
    return;
  }
  std::vector<std::future<void>> futures;
  futures.reserve(workers);
  const size_t base = n / workers;
  const size_t extra = n % workers;
  size_t begin = 0;
  for (size_t c = 0; c < workers; ++c) {
    const size_t end = begin + base + (c < extra ? 1 : 0);
    futures.push_back(
        std::async(std::launch::async, [&fn, c, begin, end] { fn(c, begin, end); }));
    begin = end;
  }
  for (auto& f : futures) f.get();
}

}  // namespace sunit::detail
