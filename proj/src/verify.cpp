#include "rzlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>

#include "rzlab/phase.hpp"
#include "rzlab/quadrature.hpp"
#include "rzlab/rzeta.hpp"
#include "rzlab/specfun.hpp"
#include "rzlab/thetafun.hpp"
#include "rzlab/zerolab.hpp"

namespace rzlab::verify {

namespace {

using zerolab::ZeroStore;

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

struct Outcome {
  bool pass;
  std::string detail;
};

// Runs body, timing it; an exception fails the check with its message.
Check timed(std::string id, std::string name, double limit_s,
            const std::function<Outcome()>& body) {
  Check c{std::move(id), std::move(name), false, "", 0.0};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const Outcome o = body();
    c.pass = o.pass;
    c.detail = o.detail;
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = std::string("error: ") + e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0.0 && c.seconds > limit_s) {
    c.pass = false;
    c.detail += fmt(" [over time limit %.0f s]", limit_s);
  }
  return c;
}

std::vector<cplx> equivalence_grid() {
  std::vector<cplx> g;
  for (double s : {-3.5, -1.5, 0.5, 2.5, 4.0})
    for (double t : {-20.0, -10.0, 0.0, 10.0, 20.0}) g.emplace_back(s, t);
  return g;
}

// Sign changes of the oracle Z(t) = Re(e^{i theta} zeta(1/2+it)) on (a, b),
// bisected to 1e-10.
std::vector<double> oracle_z_zeros(double a, double b) {
  auto z = [](double t) {
    const double th = specfun::riemann_siegel_theta(t).real();
    return std::real(std::exp(cplx(0.0, th)) * specfun::zeta_line_oracle(t).value);
  };
  std::vector<double> out;
  const double h = 0.02;
  double x0 = a + 1e-9, z0 = z(x0);
  for (double x1 = a + h; x1 <= b + 1e-12; x1 += h) {
    const double xe = std::min(x1, b - 1e-9);
    const double z1 = z(xe);
    if ((z0 < 0.0) != (z1 < 0.0)) {
      double lo = x0, hi = xe, zl = z0;
      while (hi - lo > 1e-10) {
        const double m = 0.5 * (lo + hi), zm = z(m);
        if ((zm < 0.0) == (zl < 0.0)) {
          lo = m;
          zl = zm;
        } else {
          hi = m;
        }
      }
      out.push_back(0.5 * (lo + hi));
    }
    x0 = xe;
    z0 = z1;
  }
  return out;
}

double o_bound(double T, bool sqrt_factor) {
  return phase::o_constant * (sqrt_factor ? std::sqrt(T) : 1.0) * std::log(T);
}

// ---- specfun --------------------------------------------------------------

std::vector<Check> specfun_checks() {
  std::vector<Check> out;
  out.push_back(timed("specfun.log_gamma", "log Gamma(1) = 0, log Gamma(1/2) = log(pi)/2", 0, [] {
    const double e1 = std::abs(specfun::log_gamma(ComplexPoint(1.0, 0.0)).value);
    const double e2 = std::abs(specfun::log_gamma(ComplexPoint(0.5, 0.0)).value - 0.5 * std::log(pi));
    return Outcome{e1 <= 1e-13 && e2 <= 1e-13, fmt("errors %.1e, %.1e", e1, e2)};
  }));
  out.push_back(timed("specfun.digamma", "psi(1) = -gamma_E, psi(1/2) = -gamma_E - 2 log 2", 0, [] {
    const double g = specfun::euler_gamma();
    const double e1 = std::abs(specfun::digamma(ComplexPoint(1.0, 0.0)).value + g);
    const double e2 =
        std::abs(specfun::digamma(ComplexPoint(0.5, 0.0)).value + g + 2.0 * std::log(2.0));
    return Outcome{e1 <= 1e-12 && e2 <= 1e-12, fmt("errors %.1e, %.1e", e1, e2)};
  }));
  out.push_back(timed("specfun.theta", "theta(100) against the integral of theta'", 0, [] {
    auto f = [](double x) { return specfun::riemann_siegel_theta_prime(x); };
    const auto q = quad::integrate<double>(f, 0.0, 100.0, quad::Options{1e-12, 1e-13, 2000});
    const double e = std::abs(q.value - specfun::riemann_siegel_theta(100.0).real());
    return Outcome{e <= 1e-8, fmt("|difference| %.2e", e)};
  }));
  out.push_back(timed("specfun.zeta_oracle", "zeta(1/2) and the first zero from the eta series", 0, [] {
    const double e0 = std::abs(specfun::zeta_line_oracle(0.0).value + 1.4603545088095868);
    const double z1 = std::abs(specfun::zeta_line_oracle(14.134725141734694).value);
    return Outcome{e0 <= 1e-9 && z1 <= 1e-6, fmt("zeta(1/2) error %.1e, |zeta(rho_1)| %.1e", e0, z1)};
  }));
  return out;
}

// ---- thetafun -------------------------------------------------------------

std::vector<Check> theta_checks() {
  std::vector<Check> out;
  out.push_back(timed("theta.dual_series", "direct and transformed phi agree on [0.05, 20]", 0, [] {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const double x = 0.05 + (20.0 - 0.05) * k / 99.0;
      worst = std::max(worst, std::abs(thetafun::phi_direct(x) - thetafun::phi_transformed(x)));
    }
    return Outcome{worst <= 1e-13, fmt("max difference %.1e", worst)};
  }));
  out.push_back(timed("theta.theta3", "theta_3(0, -1 + ix) = phi(x)", 0, [] {
    double worst = 0.0;
    for (double x : {0.3, 1.0, 2.5}) {
      const auto t = thetafun::theta3(ComplexPoint(-1.0, x));
      worst = std::max(worst, std::abs(t.value - thetafun::phi(x).phi));
    }
    return Outcome{worst <= 1e-14, fmt("max difference %.1e", worst)};
  }));
  out.push_back(timed("theta.phi_prime_bounds", "phi' inequalities on {0.1, ..., 5.0}", 0, [] {
    std::vector<double> grid;
    for (int k = 1; k <= 50; ++k) grid.push_back(0.1 * k);
    const auto r = thetafun::check_prop2_grid(grid);
    return Outcome{r.ok(), fmt("%zu violations", r.violations.size())};
  }));
  return out;
}

// ---- rzeta ----------------------------------------------------------------

Check r_zero() {
  return timed("rzeta.r0", "R(0) = -1/2", 1.0, [] {
    const double e = std::abs(rzeta::eval_r(ComplexPoint(0.0, 0.0)).value + 0.5);
    return Outcome{e <= 1e-10, fmt("|R(0) + 1/2| = %.1e (tol 1e-10)", e)};
  });
}

Check constant_a() {
  return timed("rzeta.a", "a = -2 R'(0) - gamma_E/2", 5.0, [] {
    const cplx ref(0.64087373271637604, 0.55990021329435156);
    const cplx a = phase::compute_a().value;
    const double e = std::abs(a - ref);
    return Outcome{e <= 1e-9, fmt("a = %.17g,%.17g  |error| %.1e (tol 1e-9)", a.real(), a.imag(), e)};
  });
}

Check identity() {
  return timed("rzeta.identity", "2 + R'/R(1/2) + psi(1/4)/2", 5.0, [] {
    const cplx ref(0.6373866805736784379, 0.5524349167416397674);
    const cplx v = phase::remark_identity().value;
    const double e = std::abs(v - ref);
    return Outcome{e <= 1e-9, fmt("value %.17g,%.17g  |error| %.1e (tol 1e-9)", v.real(), v.imag(), e)};
  });
}

Check omega_zero_check() {
  return timed("phase.omega0", "omega(0) = -arg R(1/2)", 0, [] {
    const double w = phase::omega_zero().real();
    const double e = std::abs(w - 2.86349);
    return Outcome{e <= 5e-5, fmt("omega(0) = %.10f  |error| %.1e (tol 5e-5)", w, e)};
  });
}

Check equivalence() {
  return timed("rzeta.equivalence", "theta-integral F(s) = s pi^{-s/2} Gamma(s/2) R(s) on 25 points", 60.0, [] {
    double worst = 0.0;
    cplx at;
    for (cplx s : equivalence_grid()) {
      const double e = std::abs(rzeta::eval_F_theta(s).value - rzeta::eval_F_from_r(s).value);
      if (e > worst) {
        worst = e;
        at = s;
      }
    }
    return Outcome{worst <= 1e-8, fmt("max difference %.2e at %g%+gi (tol 1e-8)", worst, at.real(), at.imag())};
  });
}

Check envelope() {
  return timed("rzeta.envelope", "|F(s)| <= f(t) g(sigma) on the same grid", 60.0, [] {
    int bad = 0;
    double worst = inf;
    for (cplx s : equivalence_grid()) {
      const double f = std::abs(rzeta::eval_F_theta(s).value);
      const double b = rzeta::bound_envelope(s).bound();
      worst = std::min(worst, b / f);
      if (f > b * (1.0 + 1e-10)) ++bad;
    }
    return Outcome{bad == 0, fmt("%d violations, smallest bound/|F| = %.3f", bad, worst)};
  });
}

Check phi_prime_bounds() {
  return timed("theta.phi_prime_grid", "phi' inequalities, 100 points in [0.05, 5]", 0, [] {
    std::vector<double> grid;
    for (int k = 0; k < 100; ++k) grid.push_back(0.05 + (5.0 - 0.05) * k / 99.0);
    const auto r = thetafun::check_prop2_grid(grid, 1e-12);
    return Outcome{r.ok(), fmt("%zu violations; worst margins %.2e, %.2e, %.2e", r.violations.size(),
                               r.worst_nonneg, r.worst_exp_bound, r.worst_small_x_bound)};
  });
}

Check shift_invariance() {
  return timed("rzeta.shift", "R(1/2+it) with shift levels N and N+1", 30.0, [] {
    double worst = 0.0;
    for (double t : {10.0, 50.0, 200.0}) {
      const int n = static_cast<int>(std::floor(std::sqrt(t / (2.0 * pi))));
      const ComplexPoint s(0.5, t);
      const auto a = rzeta::eval_r(s, rzeta::QuadratureSpec::at_level(n));
      const auto b = rzeta::eval_r(s, rzeta::QuadratureSpec::at_level(n + 1));
      worst = std::max(worst, std::abs(a.value - b.value));
    }
    return Outcome{worst <= 1e-9, fmt("max difference %.2e (tol 1e-9)", worst)};
  });
}

Check z_consistency() {
  return timed("rzeta.z", "Z(t) from R against the eta-series zeta", 60.0, [] {
    double worst = 0.0;
    for (double t : {10.0, 25.0, 50.0, 100.0, 250.0}) {
      const double th = specfun::riemann_siegel_theta(t).real();
      const cplx ref = std::exp(cplx(0.0, th)) * specfun::zeta_line_oracle(t).value;
      worst = std::max(worst, std::abs(rzeta::z_function(t).real() - ref));
    }
    return Outcome{worst <= 1e-6, fmt("max difference %.2e (tol 1e-6)", worst)};
  });
}

std::vector<Check> rzeta_checks() {
  std::vector<Check> out{r_zero(), constant_a(), identity(), equivalence(), envelope(),
                         shift_invariance(), z_consistency()};
  out.push_back(timed("rzeta.arg_half", "arg R(1/2) = -2.86349", 0, [] {
    const double a = std::arg(rzeta::eval_r(ComplexPoint(0.5, 0.0)).value);
    return Outcome{std::abs(a + 2.86349) <= 5e-5, fmt("arg R(1/2) = %.8f", a)};
  }));
  out.push_back(timed("rzeta.right_half", "|R(2 + 110i) - 1| < 1", 0, [] {
    const double d = std::abs(rzeta::eval_r(ComplexPoint(2.0, 110.0)).value - 1.0);
    return Outcome{d < 1.0, fmt("|R - 1| = %.4f", d)};
  }));
  out.push_back(timed("rzeta.trivial", "|R(-2)|, |R(-4)| <= 1e-8", 0, [] {
    const double a = std::abs(rzeta::eval_r(ComplexPoint(-2.0, 0.0)).value);
    const double b = std::abs(rzeta::eval_r(ComplexPoint(-4.0, 0.0)).value);
    return Outcome{a <= 1e-8 && b <= 1e-8, fmt("%.1e, %.1e", a, b)};
  }));
  return out;
}

// ---- zerolab --------------------------------------------------------------

Check census(const ZeroStore&) {
  return timed("zeros.census", "N(400) against theta/2pi - sqrt(400/2pi)/2", 1800.0, [] {
    const double T = 400.0;
    const auto [lo, hi] = zerolab::default_sigma_range(0.0, T);
    zerolab::ScanReport rep;
    const auto zeros = zerolab::scan_zeros(0.0, T, lo, hi, {}, &rep);
    ZeroStore st;
    st.add(zeros);
    st.add_coverage({rep.region, rep.count});
    const auto c = zerolab::sided_counts(T, st, true);
    int strip = 0;
    for (const auto& z : zeros)
      if (z.beta >= -1.0 && z.beta <= 3.0) strip += z.multiplicity;
    const bool partition = c.N_r + c.N_l == c.N;
    return Outcome{std::abs(c.residual_eq6) <= 3.0 && partition,
                   fmt("sigma in [%.2f, %g]: N = %g (N_r %g, N_l %g), main term %.4f, residual "
                       "%+.4f (tol 3); winding %d; [-1, 3] strip alone holds %d",
                       lo, hi, c.N, c.N_r, c.N_l, c.main_term, c.residual_eq6, c.winding, strip)};
  });
}

std::vector<Check> zeros_checks(const ZeroStore& store) {
  std::vector<Check> out;
  out.push_back(timed("zeros.right_free", "winding of [2, 4] x [110, 120] is 0", 0, [] {
    const auto w = zerolab::winding(zerolab::Rectangle::make(2.0, 4.0, 110.0, 120.0));
    return Outcome{w.count == 0, fmt("winding %d (raw %.6f)", w.count, w.raw)};
  }));
  out.push_back(timed("zeros.trivial_box", "winding of [-3, -1] x [-1, 1] is 1", 0, [] {
    const auto w = zerolab::winding(zerolab::Rectangle::make(-3.0, -1.0, -1.0, 1.0));
    return Outcome{w.count == 1, fmt("winding %d (raw %.6f)", w.count, w.raw)};
  }));
  out.push_back(timed("zeros.refine_trivial", "Newton from -2.1 + 0.05i reaches -2", 0, [] {
    const auto z = zerolab::refine_zero(ComplexPoint(-2.1, 0.05));
    const double e = std::abs(z.rho() - cplx(-2.0, 0.0));
    return Outcome{e <= 1e-8, fmt("|rho + 2| = %.1e", e)};
  }));
  out.push_back(census(store));
  out.push_back(timed("zeros.completeness", "store agrees with winding counts up to 50, 100, 200, 400", 0, [&store] {
    std::string d;
    bool ok = true;
    for (double T : {50.0, 100.0, 200.0, 400.0}) {
      const auto c = zerolab::sided_counts(T, store, true);
      d += fmt("T=%g: %g zeros, winding %d; ", T, c.N, c.winding);
      ok = ok && c.winding >= 0;
    }
    return Outcome{ok, d};
  }));
  out.push_back(timed("zeros.negative_side", "stored zeros with gamma < 0 have beta > 0", 0, [&store] {
    int bad = 0;
    for (const auto& z : store.lower())
      if (z.beta <= 0.0) ++bad;
    return Outcome{bad == 0, fmt("%zu zeros below the real axis, %d with beta <= 0",
                                 store.lower().size(), bad)};
  }));
  return out;
}

// ---- phase ----------------------------------------------------------------

Check omega_count(const ZeroStore& store) {
  return timed("phase.omega_count", "|omega(T) - 2 pi N_r(T)| <= 10 log T", 0, [&store] {
    const phase::OmegaTable table(0.0, 400.0);
    std::string d;
    bool ok = true;
    for (double T : {100.0, 200.0, 400.0}) {
      const double w = table(T).real();
      const auto c = zerolab::sided_counts(T, store, false);
      const double diff = std::abs(w - 2.0 * pi * c.N_r);
      ok = ok && diff <= o_bound(T, false);
      d += fmt("T=%g: omega %.4f, 2 pi N_r %.4f, |diff| %.3f (tol %.1f); ", T, w,
               2.0 * pi * c.N_r, diff, o_bound(T, false));
    }
    return Outcome{ok, d};
  });
}

Check u_count(const ZeroStore& store) {
  return timed("phase.u_count", "|u(T) - pi(N_r - N_l)| <= 10 sqrt(T) log T", 0, [&store] {
    std::string d;
    bool ok = true;
    for (double T : {100.0, 200.0, 400.0}) {
      const double u = phase::u_of_t(T, store).value;
      const auto c = zerolab::sided_counts(T, store, false);
      const double diff = std::abs(u - pi * (c.N_r - c.N_l));
      ok = ok && diff <= o_bound(T, true);
      d += fmt("T=%g: u %.4f, pi(N_r-N_l) %.4f, |diff| %.3f (tol %.0f); ", T, u,
               pi * (c.N_r - c.N_l), diff, o_bound(T, true));
    }
    return Outcome{ok, d};
  });
}

Check decomposition(const ZeroStore& store) {
  return timed("phase.decomposition", "decomposition residual, d(T) against B T - theta/2, and B", 0, [&store] {
    const auto rep = phase::estimate_B(store, true);
    const std::vector<double> grid{100.0, 200.0, 400.0};
    const auto rows = phase::decomposition_check(grid, store, rep.B_estimate);
    bool ok = std::abs(rep.B_estimate - 0.05592) <= 0.02 + rep.B_truncation_error;
    std::string d = fmt("B = %.6f +- %.1e (regression %.6f); ", rep.B_estimate,
                        rep.B_truncation_error, rep.B_regression);
    for (const auto& r : rows) {
      const auto dd = phase::d_of_t(r.t, store);
      const double tol = phase::decomposition_tolerance(r.t, store);
      const double e11 = std::abs(r.d - rep.B_estimate * r.t + 0.5 * r.theta);
      const double tol11 = o_bound(r.t, true) + dd.tail_err;
      ok = ok && std::abs(r.residual) <= tol && e11 <= tol11;
      d += fmt("T=%g: residual %+.4f (tol %.3f), |d - BT + theta/2| %.2f (tol %.0f); ", r.t,
               r.residual, tol, e11, tol11);
    }
    return Outcome{ok, d};
  });
}

Check left_sums(const ZeroStore& store) {
  return timed("phase.left_sums", "negative-side partial sums grow like (1/8) log K", 0, [&store] {
    const auto a = phase::lemma_partial_sums(store, 10);
    const auto b = phase::lemma_partial_sums(store, 20);
    const auto c = phase::lemma_partial_sums(store, 40);
    const double need = 0.5 * 0.125 * (std::log(40.0) - std::log(10.0));
    const bool ok = a.left_sum < b.left_sum && b.left_sum < c.left_sum &&
                    c.left_sum - a.left_sum >= need;
    return Outcome{ok, fmt("K=10: %.6f, K=20: %.6f, K=40: %.6f; growth %.4f (need %.4f)",
                           a.left_sum, b.left_sum, c.left_sum, c.left_sum - a.left_sum, need)};
  });
}

Check line_zeros() {
  return timed("phase.line_zeros", "cos(theta - omega) = 0 on (0, 50) against the oracle Z", 120.0, [] {
    const auto mine = phase::zeta_line_zeros(0.0, 50.0);
    const auto ref = oracle_z_zeros(0.0, 50.0);
    bool ok = mine.size() == 10 && ref.size() == 10;
    double worst = 0.0;
    for (std::size_t k = 0; ok && k < mine.size(); ++k)
      worst = std::max(worst, std::abs(mine[k] - ref[k]));
    ok = ok && worst <= 1e-6;
    return Outcome{ok, fmt("%zu points (oracle %zu), max deviation %.1e (tol 1e-6)", mine.size(),
                           ref.size(), worst)};
  });
}

std::vector<Check> phase_checks(const ZeroStore& store) {
  std::vector<Check> out{omega_zero_check(), omega_count(store), u_count(store), decomposition(store), left_sums(store),
                         line_zeros()};
  out.push_back(timed("phase.derivative", "finite difference of omega at t = 20", 0, [] {
    const phase::OmegaTable table(0.0, 21.0);
    const double h = 1e-4;
    const double fd = (table(20.0 + h).real() - table(20.0 - h).real()) / (2.0 * h);
    const double e = std::abs(fd - phase::omega_prime(20.0));
    return Outcome{e <= 1e-5, fmt("|difference| %.1e", e)};
  }));
  out.push_back(timed("phase.half_theta", "|omega - theta/2 - u| <= 10 sqrt(t) log t at 50, 100, 200", 0, [&store] {
    const auto rows = phase::decomposition_check({50.0, 100.0, 200.0}, store, 0.0);
    std::string d;
    bool ok = true;
    for (const auto& r : rows) {
      const double e = std::abs(r.omega - 0.5 * r.theta - r.u);
      ok = ok && e <= o_bound(r.t, true);
      d += fmt("t=%g: %.3f; ", r.t, e);
    }
    return Outcome{ok, d};
  }));
  out.push_back(timed("phase.product", "a + sum (1/rho - 1/(rho-1/2)) over stored zeros", 0, [&store] {
    const auto rep = phase::estimate_B(store, false);
    const double e = std::abs(rep.mixed_sum - rep.identity_value);
    return Outcome{e <= rep.mixed_tail_bound,
                   fmt("|difference| %.2e, tail bound %.2e", e, rep.mixed_tail_bound)};
  }));
  return out;
}

}  // namespace

Suite suite_from_string(std::string_view text) {
  for (Suite s : {Suite::specfun, Suite::theta, Suite::rzeta, Suite::zeros, Suite::phase, Suite::all})
    if (text == to_string(s)) return s;
  throw DomainError("unknown suite '" + std::string(text) + "'");
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::specfun: return "specfun";
    case Suite::theta: return "theta";
    case Suite::rzeta: return "rzeta";
    case Suite::zeros: return "zeros";
    case Suite::phase: return "phase";
    case Suite::all: return "all";
  }
  return "?";
}

bool needs_store(Suite s) { return s == Suite::zeros || s == Suite::phase || s == Suite::all; }

ZeroStore prepare_store(const std::filesystem::path& path) {
  ZeroStore st = path.empty() ? ZeroStore{} : ZeroStore::load(path);
  bool changed = false;
  auto scan = [&](double a, double b, double range_lo, double range_hi) {
    const auto [lo, hi] = zerolab::default_sigma_range(range_lo, range_hi);
    zerolab::ScanReport rep;
    st.add(zerolab::scan_zeros(a, b, lo, hi, {}, &rep));
    st.add_coverage({rep.region, rep.count});
    changed = true;
  };
  if (st.covered_above() < store_top) scan(st.covered_above(), store_top, 0.0, store_top);
  if (st.covered_below() > store_bottom) scan(store_bottom, st.covered_below(), store_bottom, 0.0);
  if (changed && !path.empty()) st.save(path);
  return st;
}

std::vector<Check> run_suite(Suite suite, const ZeroStore& store) {
  switch (suite) {
    case Suite::specfun: return specfun_checks();
    case Suite::theta: return theta_checks();
    case Suite::rzeta: return rzeta_checks();
    case Suite::zeros: return zeros_checks(store);
    case Suite::phase: return phase_checks(store);
    case Suite::all: {
      std::vector<Check> out;
      for (Suite s : {Suite::specfun, Suite::theta, Suite::rzeta, Suite::zeros, Suite::phase}) {
        auto part = run_suite(s, store);
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }
  }
  return {};
}

std::vector<Check> acceptance(const ZeroStore& store) {
  std::vector<Check> out{r_zero(),         constant_a(),   identity(),     omega_zero_check(),
                         equivalence(),    envelope(),     phi_prime_bounds(),
                         shift_invariance(), z_consistency(), census(store), omega_count(store),
                         u_count(store),      decomposition(store),    left_sums(store),   line_zeros()};
  for (std::size_t k = 0; k < out.size(); ++k) out[k].id = std::to_string(k + 1);
  return out;
}

std::string scenario_table(const ZeroStore& store) {
  std::string out = "T, theta/(6 pi N_r), theta/(3 pi N_l), 3 omega/theta\n";
  const phase::OmegaTable table(0.0, 400.0);
  for (double T : {100.0, 200.0, 400.0}) {
    const auto r = phase::scenario(T, table(T).real(), store);
    out += fmt("%g, %.4f, %.4f, %.4f\n", T, r.r_right, r.r_left, r.r_omega);
  }
  return out;
}

std::string format(const Check& c) {
  return std::string(c.pass ? "PASS " : "FAIL ") + fmt("%-20s ", c.id.c_str()) + c.name + ": " +
         c.detail + fmt(" (%.2f s)", c.seconds);
}

}  // namespace rzlab::verify
