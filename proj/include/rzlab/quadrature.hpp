#pragma once

// Globally adaptive 7/15-point Gauss-Kronrod quadrature, templated on the
// integrand's value type (double or std::complex<double>).

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <queue>
#include <span>
#include <tuple>
#include <type_traits>
#include <vector>

#include "rzlab/core.hpp"
#include "rzlab/summation.hpp"

namespace rzlab::quad {

namespace detail {

// Kronrod abscissae on [0,1]; odd indices are the embedded Gauss nodes.
inline constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(std::complex<double> z) { return std::abs(z); }

template <class T>
struct Segment {
  double a, b;
  T value;
  double err;
  double scale;  // integral of |f|, for the roundoff floor
  bool operator<(const Segment& o) const { return err < o.err; }
};

template <class T, class F>
Segment<T> gk15(F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const T fc = f(c);
  T kron = fc * wgk[7];
  T gauss = fc * wg[3];
  double absk = magnitude(fc) * wgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * xgk[j];
    const T f1 = f(c - dx);
    const T f2 = f(c + dx);
    kron += (f1 + f2) * wgk[j];
    absk += (magnitude(f1) + magnitude(f2)) * wgk[j];
    if (j % 2 == 1) gauss += (f1 + f2) * wg[j / 2];
  }
  Segment<T> s{a, b, kron * h, magnitude((kron - gauss) * h),
               absk * std::abs(h)};
  // QUADPACK-style sharpening of the raw Gauss/Kronrod difference.
  if (s.err > 0.0) {
    const double r = std::pow(200.0 * s.err / std::max(s.scale, 1e-300), 1.5);
    s.err = std::min(s.err, s.scale * std::min(1.0, r));
  }
  s.err = std::max(s.err, 50.0 * eps * s.scale);
  return s;
}

}  // namespace detail

template <class T>
struct Result {
  T value{};
  double abs_err = 0.0;
  long evaluations = 0;
  int intervals = 0;
  bool converged = false;
};

struct Options {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_intervals = 2000;
};

// Integrates f over the union of [breaks[i], breaks[i+1]]; splitting at the
// supplied breakpoints lets callers pin nodes near known features.
template <class T, class F>
Result<T> integrate(F&& f, std::span<const double> breaks, Options opt = {}) {
  Result<T> out;
  if (breaks.size() < 2) return out;
  std::priority_queue<detail::Segment<T>> heap;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (breaks[i + 1] == breaks[i]) continue;
    heap.push(detail::gk15<T>(f, breaks[i], breaks[i + 1]));
    out.evaluations += 15;
  }
  auto totals = [&heap]() {
    auto copy = heap;
    double err = 0.0;
    T val{};
    while (!copy.empty()) {
      err += copy.top().err;
      val += copy.top().value;
      copy.pop();
    }
    return std::pair{val, err};
  };
  double total_err = 0.0;
  T total{};
  std::tie(total, total_err) = totals();
  while (!heap.empty() &&
         total_err > std::max(opt.abs_tol, opt.rel_tol * detail::magnitude(total)) &&
         static_cast<int>(heap.size()) < opt.max_intervals) {
    auto worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid == worst.a || mid == worst.b) break;
    heap.pop();
    auto left = detail::gk15<T>(f, worst.a, mid);
    auto right = detail::gk15<T>(f, mid, worst.b);
    out.evaluations += 30;
    total_err += left.err + right.err - worst.err;
    total += left.value + right.value - worst.value;
    heap.push(left);
    heap.push(right);
    if (heap.size() % 64 == 0) std::tie(total, total_err) = totals();
  }
  // Final sum in a fixed order (by left endpoint) so results do not depend
  // on heap internals.
  std::vector<detail::Segment<T>> segs;
  segs.reserve(heap.size());
  while (!heap.empty()) {
    segs.push_back(heap.top());
    heap.pop();
  }
  std::sort(segs.begin(), segs.end(),
            [](const auto& x, const auto& y) { return x.a < y.a; });
  CompensatedSum re, im, err;
  for (const auto& s : segs) {
    if constexpr (std::is_same_v<T, double>) {
      re += s.value;
    } else {
      re += s.value.real();
      im += s.value.imag();
    }
    err += s.err;
  }
  if constexpr (std::is_same_v<T, double>)
    out.value = re.value();
  else
    out.value = T(re.value(), im.value());
  out.abs_err = err.value();
  out.intervals = static_cast<int>(segs.size());
  out.converged =
      out.abs_err <= std::max(opt.abs_tol, opt.rel_tol * detail::magnitude(out.value));
  return out;
}

template <class T, class F>
Result<T> integrate(F&& f, double a, double b, Options opt = {}) {
  const std::array<double, 2> br{a, b};
  return integrate<T>(std::forward<F>(f), std::span<const double>(br), opt);
}

}  // namespace rzlab::quad
