#include "rzlab/zerolab.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <exception>
#include <optional>

#include "rzlab/parallel.hpp"
#include "rzlab/rzeta.hpp"
#include "rzlab/specfun.hpp"
#include "rzlab/store.hpp"

namespace rzlab::zerolab {

namespace {

constexpr double max_step_arg = pi / 3.0;
constexpr double boundary_ratio = 1e-6;  // |R/R'| below this: zero on the edge
constexpr int max_shift_attempts = 6;

const rzeta::EvalOptions fast{1e-6, false};

// |R| <= 1e-8, relaxed to 1e-8 |R'| where |R'| > 1: far left of the
// critical line R is a sum of large terms and |R| cannot get below their
// rounding level, while the zero itself is still fixed to 1e-8 / |R'|.
bool residual_ok(const rzeta::RPair& p) {
  return std::abs(p.value.value) <= max_residual * std::max(1.0, std::abs(p.derivative.value));
}

struct Sample {
  cplx s, r, q;  // point, R, R'/R
};

Sample sample(cplx s) {
  const auto p = rzeta::eval_r_pair(s, std::nullopt, fast);
  const cplx r = p.value.value;
  const cplx d = p.derivative.value;
  if (std::abs(r) < boundary_ratio * std::abs(d) || r == cplx(0.0, 0.0))
    throw BoundaryZeroError("zero of R within 1e-6 of a contour", s);
  return {s, r, d / r};
}

std::string fmt(const char* f, double a, double b) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

// Shift sequence +d, -d, +2d, -2d, ...
double shift_amount(int attempt) {
  const int k = (attempt + 1) / 2;
  return (attempt % 2 ? 1.0 : -1.0) * k * edge_shift;
}

// Winding of a box from its four edge walks (bottom and right forward, top
// and left reversed).
struct BoxWalks {
  Rectangle rect;
  EdgeWalk bottom, right, top, left;  // bottom/top: sigma_min -> sigma_max; left/right: t_min -> t_max

  double raw() const { return (bottom.darg + right.darg - top.darg - left.darg) / (2.0 * pi); }
  int evaluations() const {
    return bottom.evaluations + right.evaluations + top.evaluations + left.evaluations;
  }

  // (1/2 pi i) oint (s - c)^m R'/R ds for m = 1..k, scaled by 1/scale^m.
  std::vector<cplx> power_sums(int k, cplx c, double scale) const {
    std::vector<cplx> p(static_cast<std::size_t>(k), 0.0);
    auto acc = [&](const EdgeWalk& w, double sign) {
      for (std::size_t j = 0; j < w.mid.size(); ++j) {
        const cplx z = (w.mid[j] - c) / scale;
        cplx zm = 1.0;
        for (int m = 0; m < k; ++m) {
          zm *= z;
          p[static_cast<std::size_t>(m)] += sign * zm * w.dlog[j];
        }
      }
    };
    acc(bottom, 1.0);
    acc(right, 1.0);
    acc(top, -1.0);
    acc(left, -1.0);
    for (auto& v : p) v /= cplx(0.0, 2.0 * pi);
    return p;
  }
};

int rounded_count(double raw, const Rectangle& r) {
  const double n = std::round(raw);
  if (std::abs(raw - n) > 0.25)
    throw PrecisionError(fmt("winding count %.6f not near an integer at t_min = %.6g", raw, r.t_min));
  return static_cast<int>(n);
}

BoxWalks walk_box(const Rectangle& r) {
  BoxWalks b;
  b.rect = r;
  b.bottom = walk_edge({r.sigma_min, r.t_min}, {r.sigma_max, r.t_min});
  b.right = walk_edge({r.sigma_max, r.t_min}, {r.sigma_max, r.t_max});
  b.top = walk_edge({r.sigma_min, r.t_max}, {r.sigma_max, r.t_max});
  b.left = walk_edge({r.sigma_min, r.t_min}, {r.sigma_min, r.t_max});
  return b;
}

// Box walks with the edge-shift retry: the edge that met a zero is moved,
// inward first, then outward, by growing multiples of edge_shift.
BoxWalks walk_box_shifted(const Rectangle& r0) {
  Rectangle r = r0;
  std::array<int, 4> tries{};  // bottom, right, top, left
  for (;;) {
    try {
      return walk_box(r);
    } catch (const BoundaryZeroError& e) {
      const cplx z = e.where();
      const std::array<double, 4> dist{std::abs(z.imag() - r.t_min), std::abs(z.real() - r.sigma_max),
                                       std::abs(z.imag() - r.t_max), std::abs(z.real() - r.sigma_min)};
      const auto side = static_cast<std::size_t>(
          std::min_element(dist.begin(), dist.end()) - dist.begin());
      const int k = ++tries[side];
      if (k > max_shift_attempts) throw;
      // Offset from the original edge: +d, -d, +2d, ... with + meaning inward.
      const double d = shift_amount(k);
      switch (side) {
        case 0: r.t_min = r0.t_min + d; break;
        case 1: r.sigma_max = r0.sigma_max - d; break;
        case 2: r.t_max = r0.t_max - d; break;
        default: r.sigma_min = r0.sigma_min + d; break;
      }
      r = Rectangle::make(r.sigma_min, r.sigma_max, r.t_min, r.t_max);
    }
  }
}

// Roots of z^k - e1 z^{k-1} + e2 z^{k-2} - ... from power sums (Newton's
// identities, then Durand-Kerner).
std::vector<cplx> roots_from_power_sums(const std::vector<cplx>& p) {
  const int k = static_cast<int>(p.size());
  std::vector<cplx> e(static_cast<std::size_t>(k) + 1, 0.0);
  e[0] = 1.0;
  for (int m = 1; m <= k; ++m) {
    cplx acc = 0.0;
    for (int i = 1; i <= m; ++i) {
      const double sgn = (i % 2) ? 1.0 : -1.0;
      acc += sgn * e[static_cast<std::size_t>(m - i)] * p[static_cast<std::size_t>(i - 1)];
    }
    e[static_cast<std::size_t>(m)] = acc / static_cast<double>(m);
  }
  // Monic coefficients c[j] of z^{k-j}.
  std::vector<cplx> c(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) c[static_cast<std::size_t>(j)] = ((j % 2) ? -1.0 : 1.0) * e[static_cast<std::size_t>(j)];
  auto poly = [&](cplx z) {
    cplx v = 0.0;
    for (const cplx& cj : c) v = v * z + cj;
    return v;
  };
  std::vector<cplx> z(static_cast<std::size_t>(k));
  const cplx base(0.4, 0.9);
  for (int i = 0; i < k; ++i) z[static_cast<std::size_t>(i)] = std::pow(base, i);
  for (int it = 0; it < 200; ++it) {
    double change = 0.0;
    for (int i = 0; i < k; ++i) {
      cplx den = 1.0;
      for (int j = 0; j < k; ++j)
        if (j != i) den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      if (den == cplx(0.0, 0.0)) den = 1e-12;
      const cplx dz = poly(z[static_cast<std::size_t>(i)]) / den;
      z[static_cast<std::size_t>(i)] -= dz;
      change = std::max(change, std::abs(dz));
    }
    if (change < 1e-14) break;
  }
  return z;
}

// Newton iteration that gives up once it wanders out of `box` (enlarged).
std::optional<ZeroRecord> newton_in(cplx seed, const Rectangle& box) {
  const double w = box.sigma_max - box.sigma_min;
  const double h = box.t_max - box.t_min;
  const Rectangle wide{box.sigma_min - 0.5 * w, box.sigma_max + 0.5 * w, box.t_min - 0.5 * h,
                       box.t_max + 0.5 * h};
  cplx s = seed;
  for (int it = 0; it < 50; ++it) {
    if (!wide.contains(s)) return std::nullopt;
    const auto p = rzeta::eval_r_pair(s);
    const cplx d = p.derivative.value;
    if (d == cplx(0.0, 0.0)) return std::nullopt;
    const cplx step = p.value.value / d;
    s -= step;
    if (std::abs(step) <= 1e-10) {
      const auto r = rzeta::eval_r_pair(s);
      if (!residual_ok(r)) return std::nullopt;
      ZeroRecord z;
      z.beta = s.real();
      z.gamma = s.imag();
      z.resid = std::abs(r.value.value);
      z.side = classify(z.beta);
      z.method = Method::newton;
      return z;
    }
  }
  return std::nullopt;
}

struct Isolated {
  std::vector<ZeroRecord> zeros;
  std::vector<Cluster> clusters;
  long evaluations = 0;
};

void isolate(const BoxWalks& b, int count, int depth, Isolated& out) {
  if (count == 0) return;
  const Rectangle& r = b.rect;
  const double w = r.sigma_max - r.sigma_min;
  const double h = r.t_max - r.t_min;
  if (count <= 4) {
    const cplx c = r.centre();
    const double scale = 0.5 * std::hypot(w, h);
    const auto seeds = roots_from_power_sums(b.power_sums(count, c, scale));
    std::vector<ZeroRecord> found;
    for (const cplx& z : seeds) {
      const cplx seed = c + scale * z;
      if (!std::isfinite(seed.real()) || !std::isfinite(seed.imag())) continue;
      auto zr = newton_in(seed, r);
      if (!zr || !r.contains(zr->rho())) continue;
      bool dup = false;
      for (const auto& f : found) dup = dup || std::abs(f.rho() - zr->rho()) < 1e-7;
      if (!dup) found.push_back(*zr);
    }
    if (static_cast<int>(found.size()) == count) {
      out.zeros.insert(out.zeros.end(), found.begin(), found.end());
      return;
    }
  }
  if (std::max(w, h) < 1e-4 || depth > 60) {
    out.clusters.push_back({r, count});
    ZeroRecord z;
    z.beta = r.centre().real();
    z.gamma = r.centre().imag();
    z.multiplicity = count;
    z.side = classify(z.beta);
    z.resid = std::abs(rzeta::eval_r(ComplexPoint(r.centre())).value);
    z.method = Method::cluster;
    out.zeros.push_back(z);
    return;
  }
  // Bisect the longer side; shift the cut if it meets a zero.
  for (int attempt = 0;; ++attempt) {
    const double frac = 0.5 + (attempt == 0 ? 0.0 : 0.01 * shift_amount(attempt) / edge_shift);
    Rectangle lo = r, hi = r;
    if (w >= h) {
      const double cut = r.sigma_min + frac * w;
      lo.sigma_max = cut;
      hi.sigma_min = cut;
    } else {
      const double cut = r.t_min + frac * h;
      lo.t_max = cut;
      hi.t_min = cut;
    }
    try {
      // The outer edges were clear when the parent was walked, so only the
      // cut can hit a zero; walking both children keeps the code simple.
      const BoxWalks bl = walk_box(lo);
      const BoxWalks bh = walk_box(hi);
      out.evaluations += bl.evaluations() + bh.evaluations();
      const int nl = rounded_count(bl.raw(), lo);
      const int nh = rounded_count(bh.raw(), hi);
      if (nl + nh != count)
        throw PrecisionError(fmt("winding counts do not add up in a box at t = %.6g (sigma %.6g)",
                                 r.t_min, r.sigma_min));
      isolate(bl, nl, depth + 1, out);
      isolate(bh, nh, depth + 1, out);
      return;
    } catch (const BoundaryZeroError&) {
      if (attempt >= max_shift_attempts) throw;
    }
  }
}

std::vector<ZeroRecord> scan_impl(double t_min, double t_max, double sigma_min,
                                  double sigma_max, const ScanOptions& opt,
                                  ScanReport* report) {
  if (report) *report = ScanReport{};
  if (t_min == t_max) return {};
  if (!(t_min < t_max) || !(sigma_min < sigma_max))
    throw ContourError("scan_zeros: empty or inverted region");
  if (t_max - t_min > 2000.0) throw DomainError("scan_zeros: t_max - t_min > 2000");
  if (!(opt.window > 0.0)) throw ContourError("scan_zeros: window must be positive");

  const int m = std::max(1, static_cast<int>(std::ceil((t_max - t_min) / opt.window - 1e-9)));
  for (int vattempt = 0;; ++vattempt) {
    const double dv = vattempt == 0 ? 0.0 : std::abs(shift_amount(vattempt * 2 - 1));
    const double smin = sigma_min - dv;
    const double smax = sigma_max + dv;
    try {
      // Horizontal edges, each moved on its own if it meets a zero.
      std::vector<double> t(static_cast<std::size_t>(m) + 1);
      std::vector<EdgeWalk> hor(static_cast<std::size_t>(m) + 1);
      detail::for_each_index(m + 1, opt.parallel, opt.threads, [&](int k) {
        const double t0 = t_min + (t_max - t_min) * k / m;
        for (int attempt = 0;; ++attempt) {
          const double tk = t0 + (attempt == 0 ? 0.0 : shift_amount(attempt));
          try {
            hor[static_cast<std::size_t>(k)] = walk_edge({smin, tk}, {smax, tk});
            t[static_cast<std::size_t>(k)] = tk;
            return;
          } catch (const BoundaryZeroError&) {
            if (attempt >= max_shift_attempts) throw;
          }
        }
      });
      std::vector<Isolated> iso(static_cast<std::size_t>(m));
      std::vector<int> counts(static_cast<std::size_t>(m));
      detail::for_each_index(m, opt.parallel, opt.threads, [&](int k) {
        const auto uk = static_cast<std::size_t>(k);
        BoxWalks b;
        b.rect = Rectangle::make(smin, smax, t[uk], t[uk + 1]);
        b.bottom = hor[uk];
        b.top = hor[uk + 1];
        b.left = walk_edge({smin, t[uk]}, {smin, t[uk + 1]});
        b.right = walk_edge({smax, t[uk]}, {smax, t[uk + 1]});
        counts[uk] = rounded_count(b.raw(), b.rect);
        iso[uk].evaluations += b.left.evaluations + b.right.evaluations;
        isolate(b, counts[uk], 0, iso[uk]);
      });
      std::vector<ZeroRecord> out;
      ScanReport rep;
      rep.region = Rectangle::make(smin, smax, t.front(), t.back());
      for (const auto& h : hor) rep.evaluations += h.evaluations;
      for (int k = 0; k < m; ++k) {
        const auto& is = iso[static_cast<std::size_t>(k)];
        out.insert(out.end(), is.zeros.begin(), is.zeros.end());
        rep.clusters.insert(rep.clusters.end(), is.clusters.begin(), is.clusters.end());
        rep.evaluations += is.evaluations;
        rep.count += counts[static_cast<std::size_t>(k)];
        rep.window_counts.push_back(counts[static_cast<std::size_t>(k)]);
      }
      std::sort(out.begin(), out.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
        return a.gamma < b.gamma || (a.gamma == b.gamma && a.beta < b.beta);
      });
      if (report) *report = rep;
      return out;
    } catch (const BoundaryZeroError& e) {
      // A vertical edge met a zero: widen the strip and start over.
      if (vattempt >= max_shift_attempts) throw;
      const double s = e.where().real();
      if (std::abs(s - smin) > 1e-9 && std::abs(s - smax) > 1e-9) throw;
    }
  }
}

}  // namespace

Rectangle Rectangle::make(double sigma_min, double sigma_max, double t_min, double t_max) {
  for (double v : {sigma_min, sigma_max, t_min, t_max}) require_finite(v, "Rectangle");
  if (!(sigma_min < sigma_max) || !(t_min < t_max))
    throw ContourError("Rectangle: need sigma_min < sigma_max and t_min < t_max");
  return {sigma_min, sigma_max, t_min, t_max};
}

bool Rectangle::contains(cplx s, double slack) const {
  return s.real() >= sigma_min - slack && s.real() <= sigma_max + slack &&
         s.imag() >= t_min - slack && s.imag() <= t_max + slack;
}

Side classify(double beta) {
  if (beta - 0.5 > tie_tol) return Side::right;
  if (beta - 0.5 < -tie_tol) return Side::left;
  return Side::line;
}

std::string to_string(Side side) {
  switch (side) {
    case Side::right: return "right";
    case Side::left: return "left";
    case Side::line: return "line";
  }
  return "line";
}

Side side_from_string(std::string_view text) {
  if (text == "right") return Side::right;
  if (text == "left") return Side::left;
  if (text == "line") return Side::line;
  throw DomainError("unknown side '" + std::string(text) + "'");
}

EdgeWalk walk_edge(cplx a, cplx b) {
  EdgeWalk w;
  const cplx dir = b - a;
  const double len = std::abs(dir);
  if (len == 0.0) return w;
  Sample cur = sample(a);
  w.evaluations = 1;
  double tau = 0.0;
  double total = 0.0;
  while (tau < 1.0) {
    double step = std::min(1.0 - tau, std::min(1.0, 0.4 / std::max(std::abs(cur.q), 1e-3)) / len);
    for (;;) {
      const double tau1 = std::min(1.0, tau + step);
      const cplx s1 = tau1 >= 1.0 ? b : a + tau1 * dir;
      const Sample nxt = sample(s1);
      ++w.evaluations;
      const cplx dl = std::log(nxt.r / cur.r);
      const cplx pred = 0.5 * (cur.q + nxt.q) * (s1 - cur.s);
      if (std::abs(dl.imag()) <= max_step_arg && std::abs(dl.imag() - pred.imag()) <= 0.5 &&
          std::abs(dl.real() - pred.real()) <= 0.5) {
        w.mid.push_back(0.5 * (cur.s + s1));
        w.dlog.push_back(dl);
        total += dl.imag();
        cur = nxt;
        tau = tau1;
        break;
      }
      step *= 0.5;
      if (step * len < 1e-9)
        throw BoundaryZeroError("walk_edge: step collapsed near a zero", cur.s);
    }
  }
  w.darg = total;
  return w;
}

WindingResult winding(const Rectangle& rect) {
  const BoxWalks b = walk_box_shifted(rect);
  WindingResult w;
  w.raw = b.raw();
  w.rect = b.rect;
  w.evaluations = b.evaluations();
  w.count = rounded_count(w.raw, b.rect);
  return w;
}

double winding_count(const Rectangle& rect) { return winding(rect).count; }

std::vector<ZeroRecord> scan_zeros(double t_min, double t_max, double sigma_min,
                                   double sigma_max, const ScanOptions& opt,
                                   ScanReport* report) {
  return scan_impl(t_min, t_max, sigma_min, sigma_max, opt, report);
}

std::vector<ZeroRecord> scan_zeros_serial(double t_min, double t_max, double sigma_min,
                                          double sigma_max, ScanReport* report) {
  ScanOptions opt;
  opt.parallel = false;
  return scan_impl(t_min, t_max, sigma_min, sigma_max, opt, report);
}

std::pair<double, double> default_sigma_range(double t_min, double t_max) {
  if (t_min >= 0.0) {
    // Above the real axis most zeros lie in [-1, 1], but a sparse sequence
    // drifts left, roughly like -0.45 sqrt(t).
    return {-(2.0 + 0.6 * std::sqrt(std::max(t_max, 0.0))), 4.0};
  }
  // The fourth-quadrant zeros sit near sigma ~ 0.7 |t| (and sigma ~ 11 at the
  // real axis); leave room on the right.
  return {-1.0, 0.8 * std::abs(t_min) + 25.0};
}

ZeroRecord refine_zero(ComplexPoint seed_p) {
  cplx s = seed_p;
  double last = inf;
  for (int it = 0; it < 50; ++it) {
    const auto p = rzeta::eval_r_pair(s);
    const cplx d = p.derivative.value;
    if (d == cplx(0.0, 0.0)) break;
    const cplx step = p.value.value / d;
    s -= step;
    last = std::abs(step);
    if (last <= 1e-10) break;
  }
  const auto r = rzeta::eval_r_pair(s);
  if (!(last <= 1e-10) || !residual_ok(r))
    throw PrecisionError(fmt("refine_zero: no convergence near (%.10g, %.10g)", s.real(), s.imag()));
  // Simplicity: exactly one zero in a small box around the result.
  const double hw = 1e-4;
  const auto w = winding(Rectangle::make(s.real() - hw, s.real() + hw, s.imag() - hw, s.imag() + hw));
  if (w.count != 1)
    throw ContourError(fmt("refine_zero: winding %.0f around (%.10g, ...) - cluster", static_cast<double>(w.count),
                           s.real()));
  ZeroRecord z;
  z.beta = s.real();
  z.gamma = s.imag();
  z.resid = std::abs(r.value.value);
  z.side = classify(z.beta);
  z.method = Method::newton;
  return z;
}

CountReport sided_counts(double T, const ZeroStore& store, bool verify) {
  require_finite(T, "sided_counts");
  if (!(T > 0.0)) throw DomainError("sided_counts: T must be positive");
  CountReport rep;
  rep.T = T;
  if (store.covered_above() < T)
    throw IncompleteStoreError(fmt("store covers (0, %.6g] but T = %.6g", store.covered_above(), T));
  for (const auto& z : store.upper()) {
    if (z.gamma > T + tie_tol) break;
    double wgt = z.multiplicity;
    if (std::abs(z.gamma - T) <= tie_tol) {
      wgt *= 0.5;
      ++rep.ambiguous;
    }
    if (z.side == Side::right) {
      rep.N_r += wgt;
    } else if (z.side == Side::left) {
      rep.N_l += wgt;
    } else {
      rep.N_r += 0.5 * wgt;
      rep.N_l += 0.5 * wgt;
      ++rep.ambiguous;
    }
  }
  rep.N = rep.N_r + rep.N_l;
  const double th = specfun::riemann_siegel_theta(T).value.real();
  rep.main_term = th / (2.0 * pi) - 0.5 * std::sqrt(T / (2.0 * pi));
  rep.residual_eq6 = rep.N - rep.main_term;
  if (!verify) return rep;

  const auto [lo0, hi0] = default_sigma_range(0.0, T);
  for (const auto& [lo, hi] : {std::pair{lo0, hi0}, std::pair{lo0 - 10.0, hi0 + 2.0}}) {
    const WindingResult w = winding(Rectangle::make(lo, hi, 0.0, T));
    int stored = 0;
    for (const auto& z : store.upper())
      if (w.rect.contains(z.rho())) stored += z.multiplicity;
    rep.winding = w.count;
    rep.checked = w.rect;
    if (stored == w.count) return rep;
  }
  throw IncompleteStoreError(fmt("store holds a different number of zeros than the winding "
                                 "count %.0f up to T = %.6g",
                                 static_cast<double>(rep.winding), T));
}

}  // namespace rzlab::zerolab
