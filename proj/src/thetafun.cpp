#include "rzlab/thetafun.hpp"

#include <cmath>
#include <vector>

#include "rzlab/summation.hpp"

namespace rzlab::thetafun {

namespace {

constexpr double tail_floor = 1e-20;

void check_domain(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError(std::string(what) + ": requires finite x > 0");
}

// Sums a list of same-sign magnitudes from the smallest upward.
double sum_reversed(const std::vector<double>& v) {
  CompensatedSum s;
  for (auto it = v.rbegin(); it != v.rend(); ++it) s += *it;
  return s.value();
}

struct Partial {
  double value;
  int terms;
};

Partial phi_direct_impl(double x) {
  // 1 + 2 sum (-1)^n e^{-pi n^2 x}; the alternating tail is bounded by its
  // first omitted term.
  std::vector<double> terms;
  for (int n = 1;; ++n) {
    const double e = std::exp(-pi * n * n * x);
    if (e < tail_floor) break;
    terms.push_back((n % 2 ? -2.0 : 2.0) * e);
    if (n > 100000) throw PrecisionError("phi_direct: series did not truncate");
  }
  return {1.0 + sum_reversed(terms), static_cast<int>(terms.size()) + 1};
}

Partial phi_transformed_impl(double x) {
  std::vector<double> terms;
  for (int n = 0;; ++n) {
    const double k = n + 0.5;
    const double e = std::exp(-pi * k * k / x);
    // Consecutive terms shrink by at least e^{-2 pi / x}, so the tail past the
    // first term under the floor is bounded by a geometric series.
    if (n > 0 && e < tail_floor * terms.front()) break;
    if (e == 0.0) break;
    terms.push_back(e);
    if (n > 100000) throw PrecisionError("phi_transformed: series did not truncate");
  }
  return {2.0 / std::sqrt(x) * sum_reversed(terms), static_cast<int>(terms.size())};
}

Partial phi_prime_direct_impl(double x) {
  // 2 pi e^{-pi x} - 2 pi sum_{n>=1} {(2n)^2 e^{-pi (2n)^2 x} - (2n+1)^2 e^{-pi (2n+1)^2 x}}
  const double lead = 2.0 * pi * std::exp(-pi * x);
  std::vector<double> rest;
  for (int n = 1;; ++n) {
    const double a = 2.0 * n;
    const double b = 2.0 * n + 1.0;
    const double ta = a * a * std::exp(-pi * a * a * x);
    const double tb = b * b * std::exp(-pi * b * b * x);
    if (ta < tail_floor * lead || ta == 0.0) break;
    rest.push_back(2.0 * pi * (ta - tb));
    if (n > 100000) throw PrecisionError("phi_prime_direct: series did not truncate");
  }
  return {lead - sum_reversed(rest), static_cast<int>(rest.size()) + 1};
}

Partial phi_prime_transformed_impl(double x) {
  // (pi/2) x^{-5/2} e^{-pi/4x}
  //   - sum_{n>=1} {x^{-3/2} e^{-pi (n-1/2)^2/x} - 2 pi (n+1/2)^2 x^{-5/2} e^{-pi (n+1/2)^2/x}}
  const double x32 = std::pow(x, -1.5);
  const double x52 = x32 / x;
  const double lead = 0.5 * pi * x52 * std::exp(-pi / (4.0 * x));
  std::vector<double> rest;
  for (int n = 1;; ++n) {
    const double km = n - 0.5;
    const double kp = n + 0.5;
    const double a = x32 * std::exp(-pi * km * km / x);
    const double b = 2.0 * pi * kp * kp * x52 * std::exp(-pi * kp * kp / x);
    if (a < tail_floor * lead || a == 0.0) break;
    rest.push_back(a - b);
    if (n > 100000) throw PrecisionError("phi_prime_transformed: series did not truncate");
  }
  return {lead - sum_reversed(rest), static_cast<int>(rest.size()) + 1};
}

}  // namespace

double phi_direct(double x) {
  check_domain(x, "phi_direct");
  return phi_direct_impl(x).value;
}

double phi_transformed(double x) {
  check_domain(x, "phi_transformed");
  return phi_transformed_impl(x).value;
}

double phi_prime_direct(double x) {
  check_domain(x, "phi_prime_direct");
  return phi_prime_direct_impl(x).value;
}

double phi_prime_transformed(double x) {
  check_domain(x, "phi_prime_transformed");
  return phi_prime_transformed_impl(x).value;
}

PhiEval phi(double x) {
  check_domain(x, "phi");
  PhiEval out;
  out.x = x;
  if (x >= 1.0) {
    const auto p = phi_direct_impl(x);
    const auto d = phi_prime_direct_impl(x);
    out.phi = p.value;
    out.phi_prime = d.value;
    out.series_used = Series::direct;
    out.terms = std::max(p.terms, d.terms);
  } else {
    const auto p = phi_transformed_impl(x);
    const auto d = phi_prime_transformed_impl(x);
    out.phi = p.value;
    out.phi_prime = d.value;
    out.series_used = Series::transformed;
    out.terms = std::max(p.terms, d.terms);
  }
  return out;
}

double phi_prime(double x) {
  check_domain(x, "phi_prime");
  return x >= 1.0 ? phi_prime_direct_impl(x).value
                  : phi_prime_transformed_impl(x).value;
}

ThetaEval theta3(ComplexPoint tau_p) {
  const cplx tau = tau_p;
  const double y = tau.imag();
  if (!(y > 0.0)) throw DomainError("theta3: requires Im tau > 0");
  const double needed = std::sqrt(45.0 / (pi * y)) + 2.0;
  if (needed > 1e7) throw PrecisionError("theta3: Im tau too small for the direct series");

  CompensatedComplexSum val, der;
  int n = 1;
  double tail = 0.0;
  for (;; ++n) {
    const double nn = static_cast<double>(n) * n;
    const double mag = std::exp(-pi * nn * y);
    if (nn * mag < 1e-19 || mag == 0.0) {
      tail = 2.0 * nn * pi * mag / (1.0 - std::exp(-pi * y));
      break;
    }
    const cplx e = std::exp(cplx(0.0, pi * nn) * tau);
    val += 2.0 * e;
    der += cplx(0.0, 2.0 * pi * nn) * e;
  }
  ThetaEval out;
  out.value = 1.0 + val.value();
  out.derivative = der.value();
  out.terms = n;
  out.abs_err = tail + 4.0 * eps * (1.0 + std::abs(out.value));
  return out;
}

Prop2Report check_prop2_grid(std::span<const double> x_grid, double slack) {
  Prop2Report rep;
  for (double x : x_grid) {
    check_domain(x, "check_prop2_grid");
    ++rep.points;
    const double d = phi_prime(x);
    const double m1 = d;
    const double m2 = 2.0 * pi * std::exp(-pi * x) - d;
    rep.worst_nonneg = std::min(rep.worst_nonneg, m1);
    rep.worst_exp_bound = std::min(rep.worst_exp_bound, m2);
    if (m1 < -slack) rep.violations.push_back({x, 1, m1});
    if (m2 < -slack) rep.violations.push_back({x, 2, m2});
    if (x < 1.0) {
      const double m3 = 0.5 * pi * std::pow(x, -2.5) * std::exp(-pi / (4.0 * x)) - d;
      rep.worst_small_x_bound = std::min(rep.worst_small_x_bound, m3);
      if (m3 < -slack) rep.violations.push_back({x, 3, m3});
    }
  }
  return rep;
}

std::string to_string(Series s) {
  return s == Series::direct ? "direct" : "transformed";
}

}  // namespace rzlab::thetafun
