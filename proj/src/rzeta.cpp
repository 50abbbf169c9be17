#include "rzlab/rzeta.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <vector>

#include "rzlab/quadrature.hpp"
#include "rzlab/specfun.hpp"
#include "rzlab/summation.hpp"
#include "rzlab/thetafun.hpp"

namespace rzlab::rzeta {

namespace {

// Direction of the integration line, e^{5 pi i / 4}.
const cplx omega_dir = std::polar(1.0, 1.25 * pi);

// Integrand terms are dropped once they fall this far (natural log) below
// the largest one on the line.
constexpr double log_cutoff = 44.0;
constexpr double max_half_width = 60.0;

// log(e^{pi i x} - e^{-pi i x}) up to a multiple of 2 pi i, without
// overflowing for large |Im x|.
cplx log_denominator(cplx x) {
  const cplx pix(-pi * x.imag(), pi * x.real());  // pi i x
  if (x.imag() > 0.0) {
    // -e^{-pi i x} (1 - e^{2 pi i x})
    return -pix + cplx(0.0, pi) + std::log(1.0 - std::exp(2.0 * pix));
  }
  // e^{pi i x} (1 - e^{-2 pi i x})
  return pix + std::log(1.0 - std::exp(-2.0 * pix));
}

struct Node {
  cplx f;        // integrand * direction
  cplx fp;       // same with the extra -log x factor
  double log_mag;
  double cond;   // magnitude of the exponent, for the rounding estimate
};

Node integrand(cplx s, double crossing, double u) {
  const cplx x = crossing + u * omega_dir;
  const cplx lx = std::log(x);
  const cplx expo = -s * lx + cplx(0.0, pi) * x * x - log_denominator(x);
  Node n;
  n.log_mag = expo.real();
  n.f = std::exp(expo) * omega_dir;
  n.fp = -lx * n.f;
  n.cond = std::abs(s * lx) + pi * std::norm(x) + 8.0;
  return n;
}

cplx saddle_point(cplx s) {
  // x^2 = s / (2 pi i); take the root whose slope-one line crosses the real
  // axis furthest right.
  const cplx r = std::sqrt(s / cplx(0.0, 2.0 * pi));
  const double c1 = r.real() - r.imag();
  const double c2 = -r.real() + r.imag();
  return c1 >= c2 ? r : -r;
}

double default_step(cplx s, cplx x0) {
  const double osc = std::abs(s) / std::max(std::abs(x0), 0.5);
  return 2.0 * pi * 0.3 / (40.0 + 0.3 * osc);
}

struct SumTerm {
  cplx value;
  cplx deriv;
  double rounding;
  double mass;  // sum of |n^{-s}|
};

SumTerm residue_sum(cplx s, int n_max) {
  CompensatedComplexSum v, d;
  double rounding = 0.0;
  double mass = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    const double ln = std::log(static_cast<double>(n));
    const cplx term = std::exp(-s * ln);
    v += term;
    d -= ln * term;
    rounding += std::abs(term) * (std::abs(s) * ln + 2.0) * (1.0 + ln);
    mass += std::abs(term);
  }
  return {v.value(), d.value(), 4.0 * eps * rounding, mass};
}

struct Trapezoid {
  cplx coarse, coarse_d;  // step h
  cplx fine, fine_d;      // step h/2
  double rounding = 0.0;    // for R
  double rounding_d = 0.0;  // for R'
  double mass = 0.0;        // h sum |f|, the size of the largest partial sums
  double edge = 0.0;        // largest |f| at the window ends, relative scale
  int nodes = 0;
};

// Trapezoid sums over the uniform grid u0 + k h, k in [k_lo, k_hi], plus the
// midpoints for the halved step.
Trapezoid trapezoid(cplx s, double crossing, double u0, double h, int k_lo, int k_hi,
                    const std::vector<Node>* cached, bool halve) {
  CompensatedComplexSum c, cd, m, md;
  double rounding = 0.0, rounding_d = 0.0, mass = 0.0;
  Trapezoid out;
  for (int k = k_lo; k <= k_hi; ++k) {
    const Node n = cached ? (*cached)[static_cast<std::size_t>(k - k_lo)]
                          : integrand(s, crossing, u0 + k * h);
    c += n.f;
    cd += n.fp;
    rounding += std::abs(n.f) * n.cond;
    rounding_d += std::abs(n.fp) * n.cond;
    mass += std::abs(n.f);
    if (k == k_lo || k == k_hi) out.edge = std::max(out.edge, std::abs(n.f));
  }
  for (int k = k_lo; halve && k < k_hi; ++k) {
    const Node n = integrand(s, crossing, u0 + (k + 0.5) * h);
    m += n.f;
    md += n.fp;
    rounding += std::abs(n.f) * n.cond;
    rounding_d += std::abs(n.fp) * n.cond;
  }
  out.coarse = h * c.value();
  out.coarse_d = h * cd.value();
  out.fine = halve ? 0.5 * out.coarse + 0.5 * h * m.value() : out.coarse;
  out.fine_d = halve ? 0.5 * out.coarse_d + 0.5 * h * md.value() : out.coarse_d;
  const double w = halve ? 0.5 * h : h;
  out.rounding = 4.0 * eps * w * rounding;
  out.rounding_d = 4.0 * eps * w * rounding_d;
  out.mass = h * mass;
  out.edge *= h;
  out.nodes = halve ? 2 * (k_hi - k_lo) + 1 : k_hi - k_lo + 1;
  return out;
}

RPair finish(cplx s, int level, const Trapezoid& tr, EvalOptions opt) {
  const SumTerm sum = residue_sum(s, level);
  RPair out;
  out.shift_level = level;
  out.nodes = tr.nodes;
  const cplx r = sum.value + tr.fine;
  const cplx dr = sum.deriv + tr.fine_d;
  const double err_r = std::abs(tr.fine - tr.coarse) + tr.rounding + sum.rounding + tr.edge;
  const double err_d = std::abs(tr.fine_d - tr.coarse_d) + tr.rounding_d + sum.rounding + tr.edge;
  out.value = {r, err_r, Method::contour_trapezoid};
  out.derivative = {dr, err_d, Method::contour_trapezoid};
  // Rounding is reported but not held against the tolerance: it is set by
  // the size of the integrand on the line, not by the step.
  const double disc = std::abs(tr.fine - tr.coarse) + tr.edge;
  // Relative to the larger of |R| and the size of the terms summed: where they
  // cancel, the attainable absolute accuracy is set by the terms.
  const double scale = std::max({1.0, std::abs(r), tr.mass + sum.mass});
  if (!std::isfinite(r.real()) || !std::isfinite(r.imag()) || !std::isfinite(tr.mass)) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "eval_r: R overflows the double range at s = (%.17g, %.17g)",
                  s.real(), s.imag());
    throw DomainError(buf);
  }
  if (!std::isfinite(err_r) || (opt.step_halving && !(disc <= opt.tol * scale)))
  {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "eval_r: discretisation error %.3e exceeds tolerance at s = (%.17g, %.17g)", disc,
                  s.real(), s.imag());
    throw PrecisionError(buf);
  }
  return out;
}

RPair eval_explicit(cplx s, const QuadratureSpec& q, EvalOptions opt) {
  const int k = static_cast<int>(std::ceil(q.half_width / q.step - 1e-9));
  const Trapezoid tr = trapezoid(s, q.crossing, 0.0, q.step, -k, k, nullptr, opt.step_halving);
  return finish(s, q.shift_level, tr, opt);
}

// Walks outward from u0 until the integrand has dropped log_cutoff below its
// running maximum; returns the node count on that side.
int march(cplx s, double crossing, double u0, double h, int dir, double reach, double& peak,
          std::vector<Node>& out) {
  int k = 0;
  int below = 0;
  for (;;) {
    k += 1;
    const double u = u0 + dir * k * h;
    if (std::abs(u - u0) > max_half_width)
      throw PrecisionError("eval_r: integrand does not decay within the window");
    const Node n = integrand(s, crossing, u);
    out.push_back(n);
    peak = std::max(peak, n.log_mag);
    if (n.log_mag < peak - log_cutoff && std::abs(u - u0) > reach) {
      if (++below >= 3) break;
    } else {
      below = 0;
    }
  }
  return k;
}

RPair eval_auto(cplx s, int level, EvalOptions opt) {
  const double crossing = level + 0.5;
  const cplx x0 = saddle_point(s);
  // Position on the line closest to the saddle point, kept modest.
  const double u0 = std::clamp(-std::sqrt(2.0) * x0.imag(), -20.0, 20.0);
  // The other root of x^2 = s/(2 pi i) projects to -u0. When the integrand
  // there is not negligible, the window must reach it.
  double reach_l = 1.5, reach_r = 1.5;
  {
    const double peak0 = integrand(s, crossing, u0).log_mag;
    if (integrand(s, crossing, -u0).log_mag > peak0 - log_cutoff) {
      if (u0 > 0.0) reach_l = std::max(reach_l, 2.0 * u0 + 1.5);
      else reach_r = std::max(reach_r, -2.0 * u0 + 1.5);
    }
  }
  double h = default_step(s, x0);
  for (int attempt = 0; attempt < 4; ++attempt, h *= 0.5) {
    const Node centre = integrand(s, crossing, u0);
    double peak = centre.log_mag;
    std::vector<Node> left, right;
    const int kl = march(s, crossing, u0, h, -1, reach_l, peak, left);
    const int kr = march(s, crossing, u0, h, +1, reach_r, peak, right);
    std::vector<Node> nodes;
    nodes.reserve(left.size() + right.size() + 1);
    for (auto it = left.rbegin(); it != left.rend(); ++it) nodes.push_back(*it);
    nodes.push_back(centre);
    nodes.insert(nodes.end(), right.begin(), right.end());
    const Trapezoid tr = trapezoid(s, crossing, u0, h, -kl, kr, &nodes, opt.step_halving);
    try {
      return finish(s, level, tr, opt);
    } catch (const PrecisionError&) {
      if (attempt == 3 || !opt.step_halving) throw;
    }
  }
  throw PrecisionError("eval_r: unreachable");
}

}  // namespace

QuadratureSpec QuadratureSpec::make(int shift_level, double crossing, double half_width,
                                    double step) {
  if (shift_level < 0) throw ContourError("QuadratureSpec: negative shift level");
  if (!(crossing >= shift_level + 0.05 && crossing <= shift_level + 0.95))
    throw ContourError("QuadratureSpec: crossing must lie in (N+0.05, N+0.95)");
  if (!(half_width > 0.0) || !(step > 0.0) || step > half_width)
    throw ContourError("QuadratureSpec: need 0 < step <= half_width");
  QuadratureSpec q;
  q.shift_level = shift_level;
  q.crossing = crossing;
  q.half_width = half_width;
  q.step = step;
  return q;
}

QuadratureSpec QuadratureSpec::at_level(int shift_level) {
  return make(shift_level, shift_level + 0.5, 8.0, 0.04);
}

int auto_shift_level(ComplexPoint sp) {
  const cplx x0 = saddle_point(sp);
  const double c0 = x0.real() - x0.imag();
  return c0 < 1.0 ? 0 : static_cast<int>(std::floor(c0));
}

RPair eval_r_pair(ComplexPoint s, const std::optional<QuadratureSpec>& spec,
                  EvalOptions opt) {
  if (spec) {
    // Re-validate: the fields are public.
    const auto q = QuadratureSpec::make(spec->shift_level, spec->crossing,
                                        spec->half_width, spec->step);
    return eval_explicit(s, q, opt);
  }
  return eval_auto(s, auto_shift_level(s), opt);
}

EvalResult eval_r(ComplexPoint s, const std::optional<QuadratureSpec>& spec,
                  EvalOptions opt) {
  return eval_r_pair(s, spec, opt).value;
}

EvalResult eval_r_prime(ComplexPoint s, const std::optional<QuadratureSpec>& spec,
                        EvalOptions opt) {
  return eval_r_pair(s, spec, opt).derivative;
}

EvalResult eval_r_direct(ComplexPoint s, EvalOptions opt) {
  return eval_auto(s, 0, opt).value;
}

EvalResult eval_F_theta(ComplexPoint sp) {
  const cplx s = sp;
  if (s == cplx(0.0, 0.0)) throw DomainError("eval_F_theta: s = 0");
  const cplx half = 0.5 * s;
  auto f = [half](double x) -> cplx {
    const double d = thetafun::phi_prime(x);
    if (d == 0.0) return 0.0;
    return std::exp(half * std::log(cplx(-1.0, x))) * d;
  };
  const double far = 30.0 + std::abs(s.real());
  const std::array<double, 11> br{0.0, 0.05, 0.12, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, far};
  quad::Options qo;
  qo.abs_tol = 1e-300;
  qo.rel_tol = 1e-15;
  qo.max_intervals = 4000;
  const auto res = quad::integrate<cplx>(f, std::span<const double>(br), qo);
  const cplx pref = -std::exp(cplx(0.0, -0.25 * pi) * s);
  const cplx val = pref * res.value;
  // Rounding in the prefactor and in (-1+ix)^{s/2} for moderate |s|.
  const double rounding = 8.0 * eps * std::abs(val) * (1.0 + std::abs(s));
  const double err = std::abs(pref) * res.abs_err + rounding;
  if (!(err <= 1e-11 * std::max(1.0, std::abs(val))))
    throw PrecisionError("eval_F_theta: quadrature did not reach tolerance");
  return {val, err, Method::theta_integral};
}

EvalResult eval_F_from_r(ComplexPoint sp) {
  const cplx s = sp;
  if (s == cplx(0.0, 0.0)) throw DomainError("eval_F_from_r: s = 0");
  const auto lg = specfun::log_gamma(ComplexPoint(0.5 * s));
  const auto r = eval_r(sp);
  const cplx logpref = std::log(s) - 0.5 * s * std::log(pi) + lg.value;
  const cplx pref = std::exp(logpref);
  const cplx val = pref * r.value;
  const double err = std::abs(pref) * r.abs_err +
                     std::abs(val) * (lg.abs_err + 4.0 * eps * (std::abs(logpref) + 1.0));
  return {val, err, Method::contour_trapezoid};
}

Envelope bound_envelope(ComplexPoint s) {
  Envelope e;
  e.f_t = s.im >= 0.0 ? 1.0 : std::exp(pi * std::abs(s.im) / 4.0);
  e.g_sigma = s.re <= 0.0 ? 1.0
                          : 3.0 * std::pow(2.0, s.re / 4.0) * std::tgamma(1.0 + s.re / 2.0);
  return e;
}

EvalResult z_function(double t) {
  require_finite(t, "z_function");
  if (std::abs(t) > 2000.0) throw DomainError("z_function: |t| > 2000");
  // Z is even. For t < 0, R(1/2+it) grows like e^{pi|t|/4} and the real part
  // is a cancellation, so evaluate at |t|.
  const double at = std::abs(t);
  const auto th = specfun::riemann_siegel_theta(at);
  const auto r = eval_r(ComplexPoint(0.5, at));
  const cplx rot = std::polar(1.0, th.value.real()) * r.value;
  const double val = 2.0 * rot.real();
  const double err = 2.0 * (r.abs_err + std::abs(r.value) * th.abs_err);
  return {val, err, Method::contour_trapezoid};
}

}  // namespace rzlab::rzeta
