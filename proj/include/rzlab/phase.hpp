#pragma once

#include <string>
#include <vector>

#include "rzlab/core.hpp"

namespace rzlab::zerolab {
class ZeroStore;
}

namespace rzlab::phase {

// Stand-in for the unspecified O-constants of the omega, u and d estimates.
constexpr double o_constant = 10.0;
constexpr double near_zero = 1e-9;

struct PhaseSample {
  double t = 0.0;
  double omega = 0.0;
  double u = 0.0;
  double d = 0.0;
  double theta = 0.0;
  double residual = 0.0;
};

/// omega'(t) = -Re R'/R(1/2 + it). Throws NearZeroError if |R| < 1e-9 there.
double omega_prime(double t);

/// omega(0) = -arg R(1/2), principal value.
EvalResult omega_zero();

/// omega(t) = omega(0) + int_0^t omega'(x) dx, |t| <= 1000.
EvalResult omega(double t);

// omega on a grid of knots: each knot-to-knot integral is independent (and
// computed in parallel), then a serial prefix sum fixes the values.
class OmegaTable {
 public:
  // Knots at multiples of `spacing` covering [min(t_lo, 0), max(t_hi, 0)].
  OmegaTable(double t_lo, double t_hi, double spacing = 1.0, bool parallel = true);

  // omega(t) from the nearest knot towards zero plus a short integral.
  EvalResult operator()(double t) const;
  const std::vector<double>& knots() const { return knots_; }
  const std::vector<double>& values() const { return values_; }
  double lo() const { return knots_.front(); }
  double hi() const { return knots_.back(); }

 private:
  std::vector<double> knots_;
  std::vector<double> values_;
  std::vector<double> errors_;
};

/// The t in [t_min, t_max] with cos(theta(t) - omega(t)) = 0, refined to 1e-9.
/// Each is checked against |Z(t)| <= 1e-5.
std::vector<double> zeta_line_zeros(double t_min, double t_max);

// A store sum plus the estimate of what lies beyond the store. `value`
// already includes `tail`; `tail_err` bounds the error of the whole.
struct StoreSum {
  double value = 0.0;
  double tail = 0.0;
  double tail_err = 0.0;
  int terms = 0;
};

/// Height the upper store must reach before u(t) is trusted.
double u_margin(double t);

/// u(t): sum over stored zeros with gamma > 0 of
/// arctan(gamma/(beta-1/2)) - arctan((gamma-t)/(beta-1/2)).
StoreSum u_of_t(double t, const zerolab::ZeroStore& store);

/// d(t): sum over stored zeros with gamma <= 0 of
/// arctan((t-gamma)/b) + arctan(gamma/b) - t b/(b^2+gamma^2), b = beta - 1/2,
/// plus the continuation of the fourth-quadrant chain beyond the store.
StoreSum d_of_t(double t, const zerolab::ZeroStore& store);

/// a = -2 R'(0) - gamma_E/2.
EvalResult compute_a();

/// 2 + R'(1/2)/R(1/2) + psi(1/4)/2, which equals a + sum (1/rho - 1/(rho-1/2)).
EvalResult remark_identity();

/// R'/R(s) from the product over stored zeros:
/// a - psi(1 + s/2)/2 + sum (1/(s-rho) + 1/rho).
cplx logderiv_product(cplx s, const zerolab::ZeroStore& store);

struct ConstantsReport {
  cplx a;
  cplx identity_value;
  double partial_sum_right = 0.0;  // sum over stored gamma > 0 of b/(b^2+gamma^2)
  double last_summand = 0.0;
  int right_terms = 0;
  double right_tail_bound = 0.0;
  double B_estimate = 0.0;
  double B_truncation_error = 0.0;
  // Slope fit of the decomposition residual with B = 0.
  double B_regression = 0.0;
  double B_regression_spread = 0.0;
  // a + sum over the stored zeros of (1/rho - 1/(rho - 1/2)) and a bound on
  // the missing terms; should match identity_value.
  cplx mixed_sum;
  double mixed_tail_bound = 0.0;
};

/// B = -log(pi)/2 + sum_{n>=1} b_n/(b_n^2+gamma_n^2) + Re(identity value).
ConstantsReport estimate_B(const zerolab::ZeroStore& store, bool regression = true);

/// Residual of omega(t) = theta + u + d - B t + arctan 2t + omega(0).
std::vector<PhaseSample> decomposition_check(const std::vector<double>& t_grid,
                                             const zerolab::ZeroStore& store, double B);

/// Truncation error of u(t) + d(t) as used by decomposition_check.
double decomposition_tolerance(double t, const zerolab::ZeroStore& store);

/// CSV with header t,omega,u,d,theta,residual and 17 significant digits.
std::string to_csv(const std::vector<PhaseSample>& rows);

struct LemmaReport {
  int K = 0;
  double right_sum = 0.0;       // sum_{n=1..K} |Re 1/rho_n|
  double right_tail_bound = 0.0;
  double left_sum = 0.0;        // sum_{n=-1..-K} beta_n/(beta_n^2+gamma_n^2)
  double log_ratio = 0.0;       // left_sum / ((1/8) log K)
};

LemmaReport lemma_partial_sums(const zerolab::ZeroStore& store, int K);

// Ratios expected to stay near 1 if the zeros split in the predicted proportions.
struct ScenarioRow {
  double T = 0.0;
  double r_right = 0.0;  // theta / (6 pi N_r)
  double r_left = 0.0;   // theta / (3 pi N_l)
  double r_omega = 0.0;  // 3 omega / theta
};

ScenarioRow scenario(double T, double omega_T, const zerolab::ZeroStore& store);

}  // namespace rzlab::phase
