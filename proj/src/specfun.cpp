#include "rzlab/specfun.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "rzlab/summation.hpp"

namespace rzlab::specfun {

namespace {

// B_2k for k = 1..12.
constexpr std::array<double, 12> bernoulli_2k = {
    1.0 / 6.0,          -1.0 / 30.0,          1.0 / 42.0,        -1.0 / 30.0,
    5.0 / 66.0,         -691.0 / 2730.0,      7.0 / 6.0,         -3617.0 / 510.0,
    43867.0 / 798.0,    -174611.0 / 330.0,    854513.0 / 138.0,  -236364091.0 / 2730.0};

// Minimum modulus at which the asymptotic series is summed.
constexpr double stirling_radius = 18.0;

bool is_nonpositive_integer(cplx s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

// Smallest shift m >= 0 with Re(s+m) >= 0 and |s+m| >= stirling_radius.
int stirling_shift(cplx s) {
  int m = 0;
  if (s.real() < 0.0) m = static_cast<int>(std::ceil(-s.real()));
  while (std::abs(s + static_cast<double>(m)) < stirling_radius) ++m;
  return m;
}

struct SeriesTail {
  cplx sum;
  double last;  // magnitude of the first omitted term
};

// Sum_k B_2k / (2k (2k-1) z^(2k-1)).
SeriesTail stirling_correction(cplx z) {
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx pw = inv;
  CompensatedComplexSum sum;
  double last = 0.0;
  for (std::size_t k = 1; k <= bernoulli_2k.size(); ++k) {
    const double kk = static_cast<double>(k);
    const cplx term = bernoulli_2k[k - 1] / (2.0 * kk * (2.0 * kk - 1.0)) * pw;
    last = std::abs(term);
    if (last < 1e-18 * std::abs(z)) break;
    sum += term;
    pw *= inv2;
  }
  return {sum.value(), last};
}

// Sum_k B_2k / (2k z^(2k)).
SeriesTail digamma_correction(cplx z) {
  const cplx inv2 = 1.0 / (z * z);
  cplx pw = inv2;
  CompensatedComplexSum sum;
  double last = 0.0;
  for (std::size_t k = 1; k <= bernoulli_2k.size(); ++k) {
    const double kk = static_cast<double>(k);
    const cplx term = bernoulli_2k[k - 1] / (2.0 * kk) * pw;
    last = std::abs(term);
    if (last < 1e-19) break;
    sum += term;
    pw *= inv2;
  }
  return {sum.value(), last};
}

}  // namespace

EvalResult log_gamma(ComplexPoint sp) {
  const cplx s = sp;
  if (is_nonpositive_integer(s))
    throw PoleError("log_gamma: pole at s = " + std::to_string(s.real()));

  const int m = stirling_shift(s);
  const cplx z = s + static_cast<double>(m);
  const cplx logz = std::log(z);
  const auto corr = stirling_correction(z);

  CompensatedSum re, im;
  const cplx main = (z - 0.5) * logz;
  re += main.real();
  im += main.imag();
  re -= z.real();
  im -= z.imag();
  re += 0.5 * std::log(2.0 * pi);
  re += corr.sum.real();
  im += corr.sum.imag();

  double shift_mag = 0.0;
  for (int k = 0; k < m; ++k) {
    const cplx w = s + static_cast<double>(k);
    const double lr = std::log(std::abs(w));
    re -= lr;
    im -= std::arg(w);
    shift_mag += std::abs(lr) + std::abs(std::arg(w));
  }

  const double rounding =
      4.0 * eps * (std::abs(main) + std::abs(z) + shift_mag + 1.0);
  return {cplx(re.value(), im.value()), corr.last + rounding, Method::stirling};
}

EvalResult digamma(ComplexPoint sp) {
  const cplx s = sp;
  if (is_nonpositive_integer(s))
    throw PoleError("digamma: pole at s = " + std::to_string(s.real()));

  const int m = stirling_shift(s);
  const cplx z = s + static_cast<double>(m);
  const auto corr = digamma_correction(z);

  CompensatedComplexSum acc;
  const cplx logz = std::log(z);
  acc += logz;
  acc -= 0.5 / z;
  acc -= corr.sum;
  double shift_mag = 0.0;
  for (int k = m - 1; k >= 0; --k) {
    const cplx w = 1.0 / (s + static_cast<double>(k));
    acc -= w;
    shift_mag += std::abs(w);
  }
  const double rounding = 4.0 * eps * (std::abs(logz) + shift_mag + 1.0);
  return {acc.value(), corr.last + rounding, Method::stirling};
}

EvalResult riemann_siegel_theta(double t) {
  require_finite(t, "riemann_siegel_theta");
  if (t == 0.0) return {0.0, 0.0, Method::stirling};
  if (t < 0.0) {
    auto r = riemann_siegel_theta(-t);
    r.value = -r.value;
    return r;
  }
  const cplx z(0.25, 0.5 * t);
  if (std::abs(z) < stirling_radius) {
    const auto lg = log_gamma(ComplexPoint(z));
    const double val = lg.value.imag() - 0.5 * t * std::log(pi);
    return {val, lg.abs_err + 2.0 * eps * std::abs(t), Method::stirling};
  }
  // Im of (z - 1/2) log z - z with z = 1/4 + i t/2, written so that the
  // large t log t pieces combine inside a single logarithm.
  const double modz = std::hypot(0.25, 0.5 * t);
  const double argz = std::atan2(0.5 * t, 0.25);
  const auto corr = stirling_correction(z);
  CompensatedSum acc;
  acc += 0.5 * t * std::log(modz / pi);
  acc -= 0.25 * argz;
  acc -= 0.5 * t;
  acc += corr.sum.imag();
  const double rounding = 4.0 * eps * (0.5 * t * std::abs(std::log(modz / pi)) + t);
  return {acc.value(), corr.last + rounding, Method::asymptotic};
}

double riemann_siegel_theta_prime(double t) {
  require_finite(t, "riemann_siegel_theta_prime");
  const auto psi = digamma(ComplexPoint(0.25, 0.5 * std::abs(t)));
  return 0.5 * psi.value.real() - 0.5 * std::log(pi);
}

int zeta_oracle_default_depth(double t) {
  return static_cast<int>(std::ceil(1.6 * std::abs(t))) + 60;
}

namespace {

// Binomially weighted partial sum of the eta series at depth n, divided by
// (1 - 2^(1-s)). Term k carries weight P(Bin(n, 1/2) >= k).
std::pair<cplx, double> eta_zeta(double t, int n) {
  const cplx s(0.5, t);
  std::vector<double> tail(static_cast<std::size_t>(n) + 2, 0.0);
  const double lgn = std::lgamma(n + 1.0) - n * std::log(2.0);
  CompensatedSum run;
  for (int k = n; k >= 1; --k) {
    const double lp = lgn - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
    run += std::exp(lp);
    tail[static_cast<std::size_t>(k)] = std::min(1.0, run.value());
  }
  CompensatedComplexSum eta;
  double mag = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double w = tail[static_cast<std::size_t>(k)];
    if (w == 0.0) break;
    const double lk = std::log(static_cast<double>(k));
    const cplx term = std::exp(-s * lk) * w;
    if (k % 2 == 1)
      eta += term;
    else
      eta -= term;
    mag += std::abs(term) * (1.0 + std::abs(t) * lk);
  }
  const cplx denom = 1.0 - std::exp((1.0 - s) * std::log(2.0));
  return {eta.value() / denom, 4.0 * eps * mag / std::abs(denom)};
}

}  // namespace

EvalResult zeta_line_oracle(double t, int depth, double target) {
  require_finite(t, "zeta_line_oracle");
  if (std::abs(t) > 5000.0) throw DomainError("zeta_line_oracle: |t| > 5000");
  const int n = depth > 0 ? depth : zeta_oracle_default_depth(t);
  const auto [z1, r1] = eta_zeta(t, n);
  const auto [z2, r2] = eta_zeta(t, 2 * n);
  const double err = std::abs(z1 - z2) + r1 + r2;
  if (!(err <= target))
    throw PrecisionError("zeta_line_oracle: acceleration residual " +
                         std::to_string(err) + " exceeds target at t = " +
                         std::to_string(t));
  return {z2, err, Method::eta_euler};
}

}  // namespace rzlab::specfun
