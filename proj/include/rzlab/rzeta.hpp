#pragma once

#include <optional>

#include "rzlab/core.hpp"

namespace rzlab::rzeta {

// Integration line x = crossing + u e^{5 pi i/4}, u in [-half_width, half_width],
// trapezoid step `step`. Moving the line from (0,1) to (N, N+1) picks up the
// residues sum_{n<=N} n^{-s}.
struct QuadratureSpec {
  double crossing = 0.5;
  int shift_level = 0;
  double half_width = 8.0;
  double step = 0.04;

  // Validating constructor: crossing at distance >= 0.05 from N and N+1,
  // step <= half_width, both positive. Throws ContourError.
  static QuadratureSpec make(int shift_level, double crossing, double half_width,
                             double step);
  // Shift level N, crossing N + 1/2, default width and step.
  static QuadratureSpec at_level(int shift_level);
};

struct EvalOptions {
  // Accepted step-halving disagreement, relative to max(1, |R|).
  double tol = 1e-11;
  // Without halving the coarse sum is returned as is and abs_err only covers
  // rounding and truncation. Used where a few digits suffice (winding counts).
  bool step_halving = true;
};

// Shift level used by the automatic mode: the line is moved next to the
// saddle point of x^{-s} e^{pi i x^2}.
int auto_shift_level(ComplexPoint s);

struct RPair {
  EvalResult value;       // R(s)
  EvalResult derivative;  // R'(s)
  int shift_level = 0;
  int nodes = 0;
};

/// R(s) and R'(s) from a single pass over the contour. With no spec, the
/// shift level, integration window and step are chosen automatically.
RPair eval_r_pair(ComplexPoint s, const std::optional<QuadratureSpec>& spec = std::nullopt,
                  EvalOptions opt = {});

EvalResult eval_r(ComplexPoint s, const std::optional<QuadratureSpec>& spec = std::nullopt,
                  EvalOptions opt = {});
EvalResult eval_r_prime(ComplexPoint s,
                        const std::optional<QuadratureSpec>& spec = std::nullopt,
                        EvalOptions opt = {});

/// R(s) on the unshifted contour through (0,1) (shift level 0).
EvalResult eval_r_direct(ComplexPoint s, EvalOptions opt = {});

/// F(s) = -e^{-pi i s/4} int_0^inf (-1+ix)^{s/2} phi'(x) dx.
EvalResult eval_F_theta(ComplexPoint s);

/// F(s) = s pi^{-s/2} Gamma(s/2) R(s) from the contour evaluator.
EvalResult eval_F_from_r(ComplexPoint s);

struct Envelope {
  double f_t = 1.0;
  double g_sigma = 1.0;
  double bound() const { return f_t * g_sigma; }
};

/// Growth envelope |F(s)| <= f(t) g(sigma).
Envelope bound_envelope(ComplexPoint s);

/// Z(t) = 2 Re{e^{i theta(t)} R(1/2 + it)}, |t| <= 2000.
EvalResult z_function(double t);

}  // namespace rzlab::rzeta
