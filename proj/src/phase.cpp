#include "rzlab/phase.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "rzlab/parallel.hpp"
#include "rzlab/quadrature.hpp"
#include "rzlab/rzeta.hpp"
#include "rzlab/specfun.hpp"
#include "rzlab/store.hpp"
#include "rzlab/summation.hpp"

namespace rzlab::phase {

namespace {

using zerolab::ZeroRecord;
using zerolab::ZeroStore;

constexpr double max_abs_t = 1000.0;

std::string fmt(const char* f, double a) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

void check_range(double t, const char* what) {
  require_finite(t, what);
  if (std::abs(t) > max_abs_t) throw DomainError(std::string(what) + ": |t| > 1000");
}

quad::Result<double> integrate_prime(double a, double b) {
  const quad::Options opt{1e-11, 1e-12, 400};
  auto f = [](double x) { return omega_prime(x); };
  auto r = quad::integrate<double>(f, a, b, opt);
  if (!r.converged)
    throw PrecisionError(fmt("omega: quadrature did not converge near t = %.6g", a));
  return r;
}

// Fourth-quadrant zeros continue as beta ~ 4 pi^2 m / log^2 m,
// gamma ~ -4 pi m / log m (m = |index|). The leading terms are off by 15%
// at m ~ 160, so each denominator gets a correction c0 + c1 log log m,
// fitted by least squares to a run of stored zeros.
struct ChainFit {
  double g0 = 0.0, g1 = 0.0;  // 4 pi m / |gamma| = L + g0 + g1 log L
  double b0 = 0.0, b1 = 0.0;  // sqrt(4 pi^2 m / beta) = L + b0 + b1 log L

  static ChainFit fit(const std::vector<ZeroRecord>& low, std::size_t first, std::size_t last) {
    double n = 0, sx = 0, sxx = 0, sg = 0, sxg = 0, sb = 0, sxb = 0;
    for (std::size_t m = std::max<std::size_t>(first, 3); m < last; ++m) {
      const double L = std::log(static_cast<double>(m)), x = std::log(L);
      const double yg = 4.0 * pi * m / std::abs(low[m].gamma) - L;
      const double yb = std::sqrt(4.0 * pi * pi * m / low[m].beta) - L;
      n += 1;
      sx += x;
      sxx += x * x;
      sg += yg;
      sxg += x * yg;
      sb += yb;
      sxb += x * yb;
    }
    ChainFit f;
    const double det = n * sxx - sx * sx;
    f.g1 = (n * sxg - sx * sg) / det;
    f.g0 = (sg - f.g1 * sx) / n;
    f.b1 = (n * sxb - sx * sb) / det;
    f.b0 = (sb - f.b1 * sx) / n;
    return f;
  }
  cplx rho(double m) const {
    const double L = std::log(m), x = std::log(L);
    const double db = L + b0 + b1 * x;
    return {4.0 * pi * pi * m / (db * db), -4.0 * pi * m / (L + g0 + g1 * x)};
  }
};

// Sum over m >= m0 of f(rho(m)): explicit terms first, then an integral in
// log m, then a bound on what lies beyond m = 1e12.
template <class F>
std::pair<double, double> chain_sum(const ChainFit& fit, long m0, F&& f) {
  constexpr long explicit_terms = 4000;
  constexpr double m_end = 1e12;
  CompensatedSum s;
  const long m1 = m0 + explicit_terms;
  for (long m = m0; m < m1; ++m) s += f(fit.rho(static_cast<double>(m)));
  auto g = [&](double y) {
    const double m = std::exp(y);
    return f(fit.rho(m)) * m;
  };
  // Euler-Maclaurin: sum_{m>=m1} ~ int_{m1}^inf + f(m1)/2.
  const auto r = quad::integrate<double>(g, std::log(static_cast<double>(m1)), std::log(m_end),
                                         quad::Options{1e-14, 1e-10, 400});
  s += r.value + 0.5 * f(fit.rho(static_cast<double>(m1)));
  const double beyond = 2.0 * m_end * std::abs(f(fit.rho(m_end)));
  return {s.value(), beyond + r.abs_err};
}

double d_term(double b, double g, double t) {
  const double D = b * b + g * g;
  const double den = D - t * g;
  if (den > 0.0) {
    // atan((t-g)/b) + atan(g/b) = atan(t b / (D - t g)); written this way the
    // cancellation against t b / D is harmless for |g| >> t.
    const double z1 = t * b / den;
    const double diff = t * b * (t * g) / (den * D);
    return (std::atan(z1) - z1) + diff;
  }
  return std::atan((t - g) / b) + std::atan(g / b) - t * b / D;
}

double u_term(double b, double g, double t) {
  return std::atan(g / b) - std::atan((g - t) / b);
}

// int_T^inf (2 / gamma^2) dN(gamma) with the main-term density.
double upper_tail_2_over_gamma2(double T) {
  return (std::log(T / (2.0 * pi)) + 1.0) / (2.0 * pi * T);
}

// Extra bound for the sparse left-drifting zeros (|beta - 1/2| ~ alpha sqrt(gamma))
// beyond height T, from their observed density in the store.
double left_family_tail(const ZeroStore& store, double T) {
  int count = 0;
  double alpha = 0.0;
  for (const auto& z : store.upper()) {
    if (z.beta < -1.0) {
      ++count;
      alpha = std::max(alpha, std::abs(z.beta - 0.5) / std::sqrt(z.gamma));
    }
  }
  if (count == 0) return 0.0;
  return (count / T) * 2.0 * alpha / std::sqrt(T);
}

const std::vector<ZeroRecord>& require_lower(const ZeroStore& store, std::size_t min_count,
                                             const char* what) {
  const auto& low = store.lower();
  if (low.size() < min_count || store.covered_below() >= 0.0)
    throw IncompleteStoreError(std::string(what) + ": store holds too few zeros with gamma <= 0");
  return low;
}

struct Fits {
  ChainFit last, inner;
  long m0;
};

// Two fits over different runs of the stored chain; their disagreement is
// the model error of the continuation.
Fits chain_fits(const std::vector<ZeroRecord>& low) {
  const std::size_t k = low.size();
  return {ChainFit::fit(low, k / 2, k), ChainFit::fit(low, k / 4, (3 * k) / 4),
          static_cast<long>(k)};
}

}  // namespace

double omega_prime(double t) {
  require_finite(t, "omega_prime");
  const auto p = rzeta::eval_r_pair(ComplexPoint(0.5, t));
  const cplx r = p.value.value;
  if (std::abs(r) < near_zero)
    throw NearZeroError(fmt("omega: |R(1/2 + it)| < 1e-9 at t = %.12g", t), t);
  return -std::real(p.derivative.value / r);
}

EvalResult omega_zero() {
  const auto r = rzeta::eval_r(ComplexPoint(0.5, 0.0));
  return {-std::arg(r.value), r.abs_err / std::abs(r.value), Method::contour_trapezoid};
}

OmegaTable::OmegaTable(double t_lo, double t_hi, double spacing, bool parallel) {
  check_range(t_lo, "omega");
  check_range(t_hi, "omega");
  if (!(spacing > 0.0)) throw DomainError("omega: knot spacing must be positive");
  const double lo = std::min(t_lo, 0.0), hi = std::max(t_hi, 0.0);
  const long nl = static_cast<long>(std::ceil(-lo / spacing - 1e-12));
  const long nh = static_cast<long>(std::ceil(hi / spacing - 1e-12));
  for (long k = -nl; k <= nh; ++k) knots_.push_back(static_cast<double>(k) * spacing);
  if (nl > 0) knots_.front() = lo;
  if (nh > 0) knots_.back() = hi;

  const int segs = static_cast<int>(knots_.size()) - 1;
  std::vector<double> piece(static_cast<std::size_t>(std::max(segs, 0)));
  std::vector<double> perr(piece.size());
  detail::for_each_index(segs, parallel, 0, [&](int k) {
    const auto r = integrate_prime(knots_[static_cast<std::size_t>(k)],
                                   knots_[static_cast<std::size_t>(k) + 1]);
    piece[static_cast<std::size_t>(k)] = r.value;
    perr[static_cast<std::size_t>(k)] = r.abs_err;
  });

  const auto w0 = omega_zero();
  const std::size_t z = static_cast<std::size_t>(nl);
  values_.assign(knots_.size(), 0.0);
  errors_.assign(knots_.size(), 0.0);
  values_[z] = w0.real();
  errors_[z] = w0.abs_err;
  for (std::size_t k = z + 1; k < knots_.size(); ++k) {
    values_[k] = values_[k - 1] + piece[k - 1];
    errors_[k] = errors_[k - 1] + perr[k - 1];
  }
  for (std::size_t k = z; k-- > 0;) {
    values_[k] = values_[k + 1] - piece[k];
    errors_[k] = errors_[k + 1] + perr[k];
  }
}

EvalResult OmegaTable::operator()(double t) const {
  require_finite(t, "omega");
  if (t < lo() - 1e-12 || t > hi() + 1e-12)
    throw DomainError(fmt("omega: t = %.6g outside the tabulated range", t));
  auto it = std::lower_bound(knots_.begin(), knots_.end(), t);
  std::size_t k = static_cast<std::size_t>(it - knots_.begin());
  if (k == knots_.size() || (k > 0 && t - knots_[k - 1] < knots_[k] - t)) --k;
  if (knots_[k] == t) return {values_[k], errors_[k], Method::contour_trapezoid};
  const auto r = integrate_prime(knots_[k], t);
  return {values_[k] + r.value, errors_[k] + r.abs_err, Method::contour_trapezoid};
}

EvalResult omega(double t) {
  check_range(t, "omega");
  if (t == 0.0) return omega_zero();
  return OmegaTable(t, t, 1.0)(t);
}

std::vector<double> zeta_line_zeros(double t_min, double t_max) {
  require_finite(t_min, "zeta_line_zeros");
  require_finite(t_max, "zeta_line_zeros");
  if (!(t_min < t_max)) return {};
  const OmegaTable table(t_min, t_max, 0.25);
  auto phi = [&](double t) {
    return specfun::riemann_siegel_theta(t).real() - table(t).real();
  };
  auto phi_prime = [](double t) {
    return specfun::riemann_siegel_theta_prime(t) - omega_prime(t);
  };
  // Crossing index: phi in [pi/2 + k pi, pi/2 + (k+1) pi).
  auto level = [](double p) { return std::floor((p - 0.5 * pi) / pi); };

  std::vector<std::pair<double, double>> pts;  // (t, phi)
  pts.emplace_back(t_min, phi(t_min));
  for (std::size_t k = 0; k < table.knots().size(); ++k) {
    const double t = table.knots()[k];
    if (t > t_min && t < t_max)
      pts.emplace_back(t, specfun::riemann_siegel_theta(t).real() - table.values()[k]);
  }
  pts.emplace_back(t_max, phi(t_max));

  std::vector<double> out;
  // Cells whose phase moves by more than pi/2 are split so each holds at
  // most one crossing.
  auto solve = [&](auto&& self, double a, double pa, double b, double pb) -> void {
    if (std::abs(pb - pa) > 0.5 * pi && b - a > 1e-6) {
      const double m = 0.5 * (a + b);
      const double pm = phi(m);
      self(self, a, pa, m, pm);
      self(self, m, pm, b, pb);
      return;
    }
    const double ka = level(pa), kb = level(pb);
    if (ka == kb) return;
    const double target = 0.5 * pi + pi * std::max(ka, kb);
    double lo = a, hi = b, glo = pa - target;
    double x = a + (b - a) * (target - pa) / (pb - pa);
    for (int it = 0; it < 100 && hi - lo > 1e-9; ++it) {
      const double g = phi(x) - target;
      if (g == 0.0) break;
      if ((g < 0.0) == (glo < 0.0)) {
        lo = x;
        glo = g;
      } else {
        hi = x;
      }
      const double step = g / phi_prime(x);
      const double nx = x - step;
      if (std::abs(step) < 1e-10 && nx >= lo && nx <= hi) {
        x = nx;
        break;
      }
      x = (nx > lo && nx < hi) ? nx : 0.5 * (lo + hi);
    }
    const auto z = rzeta::z_function(x);
    if (std::abs(z.real()) > 1e-5)
      throw PrecisionError(fmt("zeta_line_zeros: |Z| > 1e-5 at refined point t = %.12g", x));
    out.push_back(x);
  };
  for (std::size_t k = 0; k + 1 < pts.size(); ++k)
    solve(solve, pts[k].first, pts[k].second, pts[k + 1].first, pts[k + 1].second);
  return out;
}

double u_margin(double t) {
  return std::max(t, 0.0) + 50.0 * std::max(1.0, std::log(std::abs(t)));
}

StoreSum u_of_t(double t, const ZeroStore& store) {
  require_finite(t, "u_of_t");
  StoreSum out;
  if (t == 0.0) return out;
  const double Tc = store.covered_above();
  if (Tc < u_margin(t))
    throw IncompleteStoreError(fmt("u_of_t: store must cover (0, %.6g]", u_margin(t)) +
                               fmt(" but reaches %.6g", Tc));
  CompensatedSum s;
  double b_density = 0.0, absb_density = 0.0;
  for (const auto& z : store.upper()) {
    if (z.side == zerolab::Side::line) continue;  // counted half left, half right
    const double b = z.beta - 0.5;
    s += z.multiplicity * u_term(b, z.gamma, t);
    ++out.terms;
    if (z.gamma >= 0.5 * Tc) {
      b_density += z.multiplicity * b;
      absb_density += z.multiplicity * std::abs(b);
    }
  }
  // Beyond Tc each zero adds about b t / (gamma (gamma - t)).
  const double w = std::log(Tc / (Tc - t));
  b_density /= 0.5 * Tc;
  absb_density /= 0.5 * Tc;
  out.tail = b_density * w;
  out.tail_err = std::max(absb_density * std::abs(w), std::abs(out.tail));
  out.value = s.value() + out.tail;
  return out;
}

StoreSum d_of_t(double t, const ZeroStore& store) {
  require_finite(t, "d_of_t");
  StoreSum out;
  if (t == 0.0) return out;
  const auto& low = require_lower(store, 16, "d_of_t");
  CompensatedSum s;
  for (const auto& z : low) {
    const double b = z.beta - 0.5;
    if (b == 0.0) continue;
    s += z.multiplicity * d_term(b, z.gamma, t);
    ++out.terms;
  }
  const auto fits = chain_fits(low);
  auto f = [t](cplx rho) { return d_term(rho.real() - 0.5, rho.imag(), t); };
  const auto [a, ea] = chain_sum(fits.last, fits.m0, f);
  const auto [b, eb] = chain_sum(fits.inner, fits.m0, f);
  out.tail = a;
  out.tail_err = std::abs(a - b) + ea + eb;
  out.value = s.value() + out.tail;
  return out;
}

EvalResult compute_a() {
  const auto d = rzeta::eval_r_prime(ComplexPoint(0.0, 0.0));
  return {-2.0 * d.value - 0.5 * specfun::euler_gamma(), 2.0 * d.abs_err,
          Method::contour_trapezoid};
}

EvalResult remark_identity() {
  const auto p = rzeta::eval_r_pair(ComplexPoint(0.5, 0.0));
  const cplx r = p.value.value, d = p.derivative.value;
  const auto psi = specfun::digamma(ComplexPoint(0.25, 0.0));
  const cplx q = d / r;
  const double err = std::abs(q) * (p.value.abs_err / std::abs(r) + p.derivative.abs_err / std::abs(d)) +
                     0.5 * psi.abs_err;
  return {2.0 + q + 0.5 * psi.value, err, Method::contour_trapezoid};
}

cplx logderiv_product(cplx s, const ZeroStore& store) {
  const cplx a = compute_a().value;
  const auto psi = specfun::digamma(ComplexPoint(1.0 + 0.5 * s));
  CompensatedComplexSum sum;
  sum += a - 0.5 * psi.value;
  for (const auto& z : store.all())
    sum += static_cast<double>(z.multiplicity) * (1.0 / (s - z.rho()) + 1.0 / z.rho());
  return sum.value();
}

ConstantsReport estimate_B(const ZeroStore& store, bool regression) {
  if (store.upper().empty()) throw IncompleteStoreError("estimate_B: no zeros with gamma > 0");
  const auto& low = require_lower(store, 16, "estimate_B");
  ConstantsReport rep;
  const auto a = compute_a();
  const auto id = remark_identity();
  rep.a = a.value;
  rep.identity_value = id.value;

  const double Tc = store.covered_above();
  CompensatedSum right;
  for (const auto& z : store.upper()) {
    const double b = z.beta - 0.5;
    rep.last_summand = z.multiplicity * b / (b * b + z.gamma * z.gamma);
    right += rep.last_summand;
    ++rep.right_terms;
  }
  rep.partial_sum_right = right.value();
  rep.right_tail_bound = upper_tail_2_over_gamma2(Tc) + left_family_tail(store, Tc);
  rep.B_estimate = -0.5 * std::log(pi) + rep.partial_sum_right + id.value.real();
  rep.B_truncation_error = rep.right_tail_bound + id.abs_err;

  // a + sum (1/rho - 1/(rho - 1/2)), each term -1/2 / (rho (rho - 1/2)).
  CompensatedComplexSum mixed;
  mixed += a.value;
  for (const auto& z : store.all())
    mixed += static_cast<double>(z.multiplicity) * (1.0 / z.rho() - 1.0 / (z.rho() - 0.5));
  rep.mixed_sum = mixed.value();
  const auto fits = chain_fits(low);
  auto g = [](cplx rho) { return 0.5 / (std::abs(rho) * std::abs(rho - 0.5)); };
  const auto [lt, lerr] = chain_sum(fits.last, fits.m0, g);
  rep.mixed_tail_bound = 0.25 * upper_tail_2_over_gamma2(Tc) + 2.0 * lt + lerr + a.abs_err;

  if (regression) {
    // Largest height where u and d are both backed by the store.
    double T = std::min(std::abs(store.covered_below()), max_abs_t);
    while (T > 0.0 && u_margin(T) > Tc) T -= 1.0;
    T = 10.0 * std::floor(T / 10.0);
    if (T < 40.0) throw IncompleteStoreError("estimate_B: store too short for the regression");
    std::vector<double> grid;
    for (int k = 0; k <= 10; ++k) grid.push_back(0.5 * T + 0.05 * T * k);
    const auto rows = decomposition_check(grid, store, 0.0);
    double st = 0, sr = 0, stt = 0, str = 0;
    for (const auto& r : rows) {
      st += r.t;
      sr += r.residual;
      stt += r.t * r.t;
      str += r.t * r.residual;
    }
    const double n = static_cast<double>(rows.size());
    const double slope = (n * str - st * sr) / (n * stt - st * st);
    rep.B_regression = -slope;
    rep.B_regression_spread =
        std::abs(rows.back().residual / rows.back().t - rows.front().residual / rows.front().t);
  }
  return rep;
}

std::vector<PhaseSample> decomposition_check(const std::vector<double>& t_grid,
                                             const ZeroStore& store, double B) {
  std::vector<PhaseSample> out;
  if (t_grid.empty()) return out;
  const auto [mn, mx] = std::minmax_element(t_grid.begin(), t_grid.end());
  const OmegaTable table(*mn, *mx, 1.0);
  const double w0 = table(0.0).real();
  for (double t : t_grid) {
    PhaseSample p;
    p.t = t;
    p.omega = table(t).real();
    p.u = u_of_t(t, store).value;
    p.d = d_of_t(t, store).value;
    p.theta = specfun::riemann_siegel_theta(t).real();
    p.residual = p.omega - (p.theta + p.u + p.d - B * t + std::atan(2.0 * t) + w0);
    out.push_back(p);
  }
  return out;
}

double decomposition_tolerance(double t, const ZeroStore& store) {
  if (t == 0.0) return 1e-9;
  return u_of_t(t, store).tail_err + d_of_t(t, store).tail_err + 1e-6;
}

std::string to_csv(const std::vector<PhaseSample>& rows) {
  std::string out = "t,omega,u,d,theta,residual\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.t, r.omega, r.u,
                  r.d, r.theta, r.residual);
    out += buf;
  }
  return out;
}

LemmaReport lemma_partial_sums(const ZeroStore& store, int K) {
  if (K < 0) throw DomainError("lemma_partial_sums: K must be >= 0");
  LemmaReport rep;
  rep.K = K;
  if (K == 0) return rep;
  const auto& up = store.upper();
  const auto& low = store.lower();
  if (up.size() < static_cast<std::size_t>(K) || low.size() < static_cast<std::size_t>(K) + 1)
    throw IncompleteStoreError(fmt("lemma_partial_sums: store holds fewer than K = %.0f zeros "
                                   "on a side",
                                   static_cast<double>(K)));
  CompensatedSum r, l, tail;
  for (int n = 0; n < K; ++n) {
    const auto& z = up[static_cast<std::size_t>(n)];
    r += z.multiplicity * std::abs(z.beta) / std::norm(z.rho());
  }
  for (std::size_t n = static_cast<std::size_t>(K); n < up.size(); ++n)
    tail += up[n].multiplicity * 2.0 / (up[n].gamma * up[n].gamma);
  tail += upper_tail_2_over_gamma2(store.covered_above());
  // Indices -1 .. -K.
  for (int n = 1; n <= K; ++n) {
    const auto& z = low[static_cast<std::size_t>(n)];
    l += z.multiplicity * z.beta / std::norm(z.rho());
  }
  rep.right_sum = r.value();
  rep.right_tail_bound = tail.value();
  rep.left_sum = l.value();
  rep.log_ratio = K > 1 ? rep.left_sum / (0.125 * std::log(static_cast<double>(K))) : 0.0;
  return rep;
}

ScenarioRow scenario(double T, double omega_T, const ZeroStore& store) {
  const auto c = zerolab::sided_counts(T, store, false);
  const double th = specfun::riemann_siegel_theta(T).real();
  return {T, th / (6.0 * pi * c.N_r), th / (3.0 * pi * c.N_l), 3.0 * omega_T / th};
}

}  // namespace rzlab::phase
