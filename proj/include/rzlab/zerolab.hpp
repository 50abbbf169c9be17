#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rzlab/core.hpp"

namespace rzlab::zerolab {

// Distance from the critical line (and from the height T) below which a zero
// is counted with weight 1/2.
constexpr double tie_tol = 1e-6;
// Edge shift applied when a rectangle edge passes too close to a zero.
constexpr double edge_shift = 1e-3;
constexpr double max_residual = 1e-8;

struct Rectangle {
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  double t_min = 0.0;
  double t_max = 0.0;

  // Throws ContourError unless sigma_min < sigma_max and t_min < t_max.
  static Rectangle make(double sigma_min, double sigma_max, double t_min, double t_max);
  bool contains(cplx s, double slack = 0.0) const;
  cplx centre() const { return {0.5 * (sigma_min + sigma_max), 0.5 * (t_min + t_max)}; }
  bool operator==(const Rectangle&) const = default;
};

enum class Side { right, left, line };
Side classify(double beta);
std::string to_string(Side side);
Side side_from_string(std::string_view text);

struct ZeroRecord {
  double beta = 0.0;
  double gamma = 0.0;
  int multiplicity = 1;
  Side side = Side::line;
  double resid = 0.0;
  long index = 0;
  Method method = Method::newton;

  cplx rho() const { return {beta, gamma}; }
  bool operator==(const ZeroRecord&) const = default;
};

// Change of arg R(s) along the segment a -> b, with the data needed for the
// contour moments (1/2 pi i) oint s^m R'/R ds.
struct EdgeWalk {
  double darg = 0.0;
  std::vector<cplx> mid;   // segment midpoints
  std::vector<cplx> dlog;  // log R(s_{k+1}) - log R(s_k)
  int evaluations = 0;
};

/// Adaptive walk along a -> b keeping each step's arg change below pi/3 and
/// consistent with the R'/R prediction. Throws BoundaryZeroError if the
/// segment passes within about 1e-6 of a zero.
EdgeWalk walk_edge(cplx a, cplx b);

struct WindingResult {
  int count = 0;
  double raw = 0.0;   // total arg change / 2 pi
  Rectangle rect;     // rectangle actually used, after any edge shifts
  int evaluations = 0;
};

/// Argument-principle count of zeros of R inside `rect`. Edges that pass too
/// close to a zero are moved by edge_shift and the count is redone.
WindingResult winding(const Rectangle& rect);
double winding_count(const Rectangle& rect);

struct ScanOptions {
  double window = 2.0;  // height of the t-windows the region is cut into
  bool parallel = true;
  int threads = 0;      // 0: OpenMP default
};

struct Cluster {
  Rectangle box;
  int count = 0;
};

struct ScanReport {
  Rectangle region;          // after edge shifts
  int count = 0;             // winding count of the whole region
  std::vector<int> window_counts;
  std::vector<Cluster> clusters;
  long evaluations = 0;
};

/// Every zero of R in [sigma_min, sigma_max] x [t_min, t_max], isolated by
/// bisection of winding-count boxes and refined by Newton's method. Sorted by
/// gamma; indices are left at 0 (the store assigns them).
std::vector<ZeroRecord> scan_zeros(double t_min, double t_max, double sigma_min,
                                   double sigma_max, const ScanOptions& opt = {},
                                   ScanReport* report = nullptr);

/// Single-threaded reference path of scan_zeros.
std::vector<ZeroRecord> scan_zeros_serial(double t_min, double t_max, double sigma_min,
                                          double sigma_max, ScanReport* report = nullptr);

/// Default sigma range for a scan: [-(2 + 0.6 sqrt(t_max)), 4] above the real
/// axis, and a strip wide enough for the fourth-quadrant zeros below it.
std::pair<double, double> default_sigma_range(double t_min, double t_max);

/// Newton refinement from `seed`: at most 50 iterations, final step <= 1e-10
/// and |R| <= 1e-8 max(1, |R'|). Simplicity is checked by a winding count around the
/// result. Throws PrecisionError on non-convergence and ContourError (with
/// the multiplicity in the message) for a multiple zero.
ZeroRecord refine_zero(ComplexPoint seed);

class ZeroStore;

struct CountReport {
  double T = 0.0;
  double N = 0.0;
  double N_r = 0.0;
  double N_l = 0.0;
  double main_term = 0.0;
  double residual_eq6 = 0.0;
  int winding = -1;          // completeness check, -1 if skipped
  Rectangle checked;
  int ambiguous = 0;         // records weighted 1/2
};

/// Sided counts up to height T with the half weights for line and boundary
/// zeros. Unless `verify` is false, the store is checked against the winding
/// count of default_sigma_range(0, T) x (0, T], widened once on mismatch.
CountReport sided_counts(double T, const ZeroStore& store, bool verify = true);

}  // namespace rzlab::zerolab
