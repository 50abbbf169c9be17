#pragma once

#include <exception>
#include <vector>

#include <omp.h>

namespace rzlab::detail {

// Runs f(0..n-1), in parallel when asked. An exception thrown by any index is
// rethrown after the loop; the lowest index wins, so failures are reported
// the same way whatever the thread count.
template <class F>
void for_each_index(int n, bool parallel, int threads, F&& f) {
  std::vector<std::exception_ptr> errs(static_cast<std::size_t>(n));
  const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt) if (parallel && n > 1)
  for (int i = 0; i < n; ++i) {
    try {
      f(i);
    } catch (...) {
      errs[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

}  // namespace rzlab::detail
