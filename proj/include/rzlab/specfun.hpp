#pragma once

#include "rzlab/core.hpp"

namespace rzlab::specfun {

/// Euler's constant gamma.
inline constexpr double euler_gamma() { return 0.57721566490153286060651209008240243; }

/// Principal branch of log Gamma(s), continuous on the plane cut along the
/// non-positive reals. Throws PoleError at s = 0, -1, -2, ...
EvalResult log_gamma(ComplexPoint s);

/// Psi(s) = Gamma'(s)/Gamma(s). Throws PoleError at non-positive integers.
EvalResult digamma(ComplexPoint s);

/// Riemann-Siegel theta: Im log Gamma(1/4 + i t/2) - (t/2) log pi, with
/// theta(0) = 0. Odd in t by construction.
EvalResult riemann_siegel_theta(double t);

/// theta'(t) = Re psi(1/4 + i t/2) / 2 - log(pi) / 2.
double riemann_siegel_theta_prime(double t);

/// zeta(1/2 + i t) from the alternating eta series under binomial (Euler)
/// weighting. depth = 0 picks the depth from |t|. abs_err compares the
/// result against the same sum at twice the depth. Throws PrecisionError when
/// that disagreement exceeds `target`.
EvalResult zeta_line_oracle(double t, int depth = 0, double target = 1e-9);

/// Depth used by zeta_line_oracle when depth = 0.
int zeta_oracle_default_depth(double t);

}  // namespace rzlab::specfun
