#pragma once

#include <span>
#include <string>
#include <vector>

#include "rzlab/core.hpp"

namespace rzlab::thetafun {

enum class Series { direct, transformed };

struct PhiEval {
  double x = 0.0;
  double phi = 0.0;
  double phi_prime = 0.0;
  Series series_used = Series::direct;
  int terms = 0;
};

// phi(x) = 1 + 2 sum (-1)^n exp(-pi n^2 x) = (2/sqrt x) sum exp(-pi (n+1/2)^2 / x),
// i.e. theta_4(0, ix). The direct series is used for x >= 1, the transformed
// one below. Both throw DomainError for x <= 0.
PhiEval phi(double x);
double phi_prime(double x);

// Fixed-branch evaluations, exposed for cross-checking the two series.
double phi_direct(double x);
double phi_transformed(double x);
double phi_prime_direct(double x);
double phi_prime_transformed(double x);

struct ThetaEval {
  cplx value;       // theta_3(0, tau)
  cplx derivative;  // d/dtau theta_3(0, tau)
  double abs_err = 0.0;
  int terms = 0;
};

/// theta_3(0, tau) = 1 + 2 sum exp(pi i n^2 tau) for Im tau > 0.
ThetaEval theta3(ComplexPoint tau);

struct Prop2Violation {
  double x;
  int inequality;  // 1: phi' >= 0, 2: phi' <= 2 pi e^{-pi x}, 3: small-x bound
  double margin;
};

struct Prop2Report {
  std::size_t points = 0;
  // Smallest (bound - value) margin seen for each inequality; +inf if the
  // inequality was not exercised.
  double worst_nonneg = inf;
  double worst_exp_bound = inf;
  double worst_small_x_bound = inf;
  std::vector<Prop2Violation> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks the three phi' inequalities over the grid, with `slack` tolerance.
/// Violations are reported, never thrown.
Prop2Report check_prop2_grid(std::span<const double> x_grid, double slack = 1e-12);

std::string to_string(Series s);

}  // namespace rzlab::thetafun
