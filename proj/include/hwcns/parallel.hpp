#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace hwcns {

/// Worker count from HWCNS_WORKERS, defaulting to 1.
int default_worker_count();

/// Runs body(i) for i in [begin, end) on `workers` threads using fixed
/// contiguous chunks. Each index is processed exactly once, so results are
/// independent of the worker count as long as body(i) writes only to
/// storage owned by i. The exception of the lowest failing chunk is rethrown.
template <class F>
void parallel_for(int begin, int end, int workers, F&& body) {
  const int count = end - begin;
  if (count <= 0) return;
  workers = std::clamp(workers, 1, count);
  if (workers == 1) {
    for (int i = begin; i < end; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  auto run_chunk = [&](int w) {
    const int lo = begin + static_cast<int>(static_cast<long long>(count) * w / workers);
    const int hi = begin + static_cast<int>(static_cast<long long>(count) * (w + 1) / workers);
    try {
      for (int i = lo; i < hi; ++i) body(i);
    } catch (...) {
      errors[static_cast<std::size_t>(w)] = std::current_exception();
    }
  };
  {
    std::vector<std::jthread> threads;
    threads.reserve(static_cast<std::size_t>(workers - 1));
    for (int w = 1; w < workers; ++w) threads.emplace_back(run_chunk, w);
    run_chunk(0);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace hwcns
