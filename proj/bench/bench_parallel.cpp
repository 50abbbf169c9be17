// Serial reference against the OpenMP kernels: zero scan and omega table.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "rzlab/phase.hpp"
#include "rzlab/zerolab.hpp"

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace rzlab;
  const double T = argc > 1 ? std::atof(argv[1]) : 200.0;
  std::printf("threads available: %d\n", omp_get_max_threads());

  const auto [lo, hi] = zerolab::default_sigma_range(0.0, T);
  std::vector<zerolab::ZeroRecord> a, b;
  const double ts = seconds([&] { a = zerolab::scan_zeros_serial(0.0, T, lo, hi); });
  const double tp = seconds([&] { b = zerolab::scan_zeros(0.0, T, lo, hi); });
  std::printf("scan (0, %g]: serial %.3f s, parallel %.3f s, speedup %.2f, %zu zeros, %s\n", T, ts,
              tp, ts / tp, a.size(), a == b ? "identical" : "DIFFERENT");

  double ws = 0.0, wp = 0.0;
  const double os = seconds([&] { ws = phase::OmegaTable(0.0, T, 1.0, false)(T).real(); });
  const double op = seconds([&] { wp = phase::OmegaTable(0.0, T, 1.0, true)(T).real(); });
  std::printf("omega(%g): serial %.3f s, parallel %.3f s, speedup %.2f, %s\n", T, os, op, os / op,
              ws == wp ? "identical" : "DIFFERENT");
  return a == b && ws == wp ? 0 : 1;
}
