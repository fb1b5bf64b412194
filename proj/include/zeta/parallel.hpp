#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace rzeta {

/// Caps the number of worker threads used by library batch operations.
/// 0 selects std::thread::hardware_concurrency().
void set_worker_count(unsigned n);
unsigned worker_count();

namespace detail {
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);
}

/// Evaluates f(0..n-1) on up to worker_count() threads and returns results in
/// index order. Nested calls from inside a worker run serially, so the work
/// split (and every result) is independent of the worker count. If several
/// items throw, the exception of the lowest index is rethrown.
template <class F>
auto parallel_map(std::size_t n, F&& f) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  std::vector<R> out(n);
  detail::parallel_for(n, [&](std::size_t i) { out[i] = f(i); });
  return out;
}

}  // namespace rzeta
