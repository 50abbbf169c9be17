#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "oracles.hpp"
#include "rzlab/rzeta.hpp"
#include "rzlab/store.hpp"
#include "rzlab/zerolab.hpp"

using namespace rzlab;
using namespace rzlab::zerolab;

namespace {

// Argument principle by dense uniform sampling of arg R on the boundary.
double sampled_winding(const Rectangle& r, int per_edge) {
  const cplx c[] = {{r.sigma_min, r.t_min}, {r.sigma_max, r.t_min}, {r.sigma_max, r.t_max},
                    {r.sigma_min, r.t_max}};
  double total = 0.0;
  cplx prev = rzeta::eval_r(c[0]).value;
  for (int e = 0; e < 4; ++e)
    for (int k = 1; k <= per_edge; ++k) {
      const cplx s = c[e] + (c[(e + 1) % 4] - c[e]) * (double(k) / per_edge);
      const cplx cur = rzeta::eval_r(s).value;
      total += std::arg(cur / prev);
      prev = cur;
    }
  return total / (2 * pi);
}

// Coarse-to-fine grid search for the minimum of |R|.
cplx grid_minimum(cplx lo, cplx hi, int levels) {
  cplx best{};
  for (int l = 0; l < levels; ++l) {
    double bv = inf;
    for (int i = 0; i <= 10; ++i)
      for (int j = 0; j <= 10; ++j) {
        const cplx s(lo.real() + (hi.real() - lo.real()) * i / 10.0,
                     lo.imag() + (hi.imag() - lo.imag()) * j / 10.0);
        const double v = std::abs(rzeta::eval_r(s).value);
        if (v < bv) bv = v, best = s;
      }
    const cplx half = (hi - lo) / 5.0;
    lo = best - half / 2.0;
    hi = best + half / 2.0;
  }
  return best;
}

}  // namespace

TEST_SUITE("zerolab") {

TEST_CASE("rectangles") {
  CHECK_THROWS_AS(Rectangle::make(1, 1, 0, 1), ContourError);
  CHECK_THROWS_AS(Rectangle::make(0, 1, 2, 1), ContourError);
  const auto r = Rectangle::make(-1, 3, 10, 20);
  CHECK(r.contains({0, 15}));
  CHECK_FALSE(r.contains({4, 15}));
  CHECK(r.contains({3.05, 15}, 0.1));
}

TEST_CASE("sides") {
  CHECK(classify(0.7) == Side::right);
  CHECK(classify(-1.0) == Side::left);
  CHECK(classify(0.5) == Side::line);
  CHECK(classify(0.5 + 0.5 * tie_tol) == Side::line);
  for (Side s : {Side::left, Side::right, Side::line}) CHECK(side_from_string(to_string(s)) == s);
}

TEST_CASE("no zeros far to the right") {
  CHECK(winding_count(Rectangle::make(2, 4, 110, 120)) == 0);
}

TEST_CASE("the trivial zero at -2") {
  CHECK(winding_count(Rectangle::make(-3, -1, -1, 1)) == 1);
  const auto z = refine_zero({-2.1, 0.05});
  CHECK(std::abs(z.beta + 2.0) < 1e-8);
  CHECK(std::abs(z.gamma) < 1e-8);
  CHECK(z.resid <= max_residual);
}

TEST_CASE("winding agrees with dense sampling and with the scan") {
  const auto r = Rectangle::make(-1, 3, 10, 20);
  const int w = winding_count(r);
  CHECK(std::abs(sampled_winding(r, 400) - w) < 1e-6);
  const auto z = scan_zeros(10, 20, -1, 3);
  CHECK(static_cast<int>(z.size()) == w);
}

TEST_CASE("winding is additive") {
  const int whole = winding_count(Rectangle::make(-4, 4, 20, 40));
  const int lo = winding_count(Rectangle::make(-4, 4, 20, 31.3));
  const int hi = winding_count(Rectangle::make(-4, 4, 31.3, 40));
  const int left = winding_count(Rectangle::make(-4, 0.77, 20, 40));
  const int right = winding_count(Rectangle::make(0.77, 4, 20, 40));
  CHECK(lo + hi == whole);
  CHECK(left + right == whole);
  CHECK(whole >= 1);
}

TEST_CASE("empty scan region") {
  CHECK(scan_zeros(50, 50, -1, 3).empty());
}

TEST_CASE("first zero above the real axis against a grid search") {
  const auto [lo, hi] = default_sigma_range(0, 25);
  ScanReport rep;
  const auto z = scan_zeros(0.5, 25, lo, hi, {}, &rep);
  REQUIRE_FALSE(z.empty());
  CHECK(rep.clusters.empty());
  CHECK(rep.count == static_cast<int>(z.size()));
  const auto first = z.front();
  const cplx g = grid_minimum({first.beta - 0.7, first.gamma - 0.7}, {first.beta + 0.7, first.gamma + 0.7}, 12);
  CHECK(std::abs(g.real() - first.beta) < 1e-6);
  CHECK(std::abs(g.imag() - first.gamma) < 1e-6);
}

TEST_CASE("refined records satisfy the residual bound") {
  const auto z = scan_zeros(20, 40, -6, 4);
  REQUIRE_FALSE(z.empty());
  for (const auto& r : z) {
    CHECK(std::abs(rzeta::eval_r(r.rho()).value) <= 1e-8);
    CHECK(r.multiplicity == 1);
    CHECK(r.side == classify(r.beta));
    CHECK(r.gamma >= 20);
    CHECK(r.gamma <= 40);
  }
  for (std::size_t k = 1; k < z.size(); ++k) CHECK(z[k - 1].gamma <= z[k].gamma);
}

TEST_CASE("serial and parallel scans agree") {
  const auto a = scan_zeros(30, 60, -6.6, 4);
  const auto b = scan_zeros_serial(30, 60, -6.6, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] == b[k]);
}

TEST_CASE("sided counts on a short store") {
  ZeroStore store;
  const auto [lo, hi] = default_sigma_range(0, 60);
  ScanReport rep;
  store.add(scan_zeros(0, 60, lo, hi, {}, &rep));
  store.add_coverage({rep.region, rep.count});

  const auto c0 = sided_counts(10, store);
  CHECK(c0.N == 0);
  CHECK(c0.N_r == 0);
  CHECK(c0.N_l == 0);

  for (double T : {25.0, 40.0, 60.0}) {
    const auto c = sided_counts(T, store);
    CHECK(c.N_r + c.N_l == c.N);
    CHECK(c.winding == static_cast<int>(std::lround(c.N)));
  }
  CHECK_THROWS_AS(sided_counts(100, store), IncompleteStoreError);
}

TEST_CASE("counts need a scanned store") {
  CHECK_THROWS_AS(sided_counts(100, ZeroStore{}), IncompleteStoreError);
}

}  // TEST_SUITE
