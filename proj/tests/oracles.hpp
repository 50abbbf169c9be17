#pragma once
// Reference computations used only by the tests. None of them calls the
// library routine it is checking.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double pi = 3.14159265358979323846;

// Stirling series for log Gamma, valid for Re z >= 30 (no shifting).
inline cplx log_gamma_stirling(cplx z) {
  static const double b[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6};
  cplx s = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2 * pi);
  cplx p = 1.0 / z;
  for (int k = 1; k <= 7; ++k) {
    s += b[k - 1] / (2.0 * k * (2.0 * k - 1)) * p;
    p /= z * z;
  }
  return s;
}

// log Gamma(s) from log Gamma(s + n) by the recurrence, n steps down.
inline cplx log_gamma_by_recurrence(cplx s, int n) {
  cplx v = log_gamma_stirling(s + static_cast<double>(n));
  for (int k = 0; k < n; ++k) v -= std::log(s + static_cast<double>(k));
  return v;
}

// phi(x) = 1 + 2 sum (-1)^n e^{-pi n^2 x}, plain summation of `terms` terms.
inline double phi_brute(double x, int terms) {
  double s = 1.0;
  for (int n = 1; n <= terms; ++n) s += 2.0 * ((n % 2) ? -1.0 : 1.0) * std::exp(-pi * n * n * x);
  return s;
}

// Product form prod (1 - q^{2n}) (1 - q^{2n-1})^2 with q = e^{-pi x}.
inline double phi_product(double x) {
  const double q = std::exp(-pi * x);
  double p = 1.0;
  for (int n = 1; n < 2000; ++n) {
    const double a = std::pow(q, 2 * n), c = std::pow(q, 2 * n - 1);
    p *= (1.0 - a) * (1.0 - c) * (1.0 - c);
    if (c < 1e-18) break;
  }
  return p;
}

inline double simpson(double (*f)(double), double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int k = 1; k < n; ++k) s += f(a + k * h) * ((k % 2) ? 4.0 : 2.0);
  return s * h / 3.0;
}

inline std::string fixture_path() {
  const char* p = std::getenv("RZLAB_FIXTURE");
  if (!p || !*p) throw std::runtime_error("RZLAB_FIXTURE is not set");
  return p;
}

}  // namespace oracle
