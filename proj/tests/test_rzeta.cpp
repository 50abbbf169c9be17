#include <doctest.h>

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "rzlab/rzeta.hpp"
#include "rzlab/specfun.hpp"

using namespace rzlab;
using namespace rzlab::rzeta;

namespace {

// zeta(s) for Re s > 0, s != 1: partial sum to n plus Euler-Maclaurin tail.
cplx zeta_em(cplx s, int n = 200) {
  cplx sum = 0.0;
  for (int k = 1; k < n; ++k) sum += std::pow(static_cast<double>(k), -s);
  const double N = n;
  const cplx Ns = std::pow(N, -s);
  sum += Ns * N / (s - 1.0) + 0.5 * Ns;
  // Bernoulli corrections B2k/(2k)! s(s+1)...(s+2k-2) N^{-s-2k+1}
  static const double b[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66};
  cplx rising = s;
  double fact = 2.0;
  for (int k = 1; k <= 5; ++k) {
    sum += b[k - 1] / fact * rising * Ns / std::pow(N, 2.0 * k - 1);
    rising *= (s + (2.0 * k - 1)) * (s + 2.0 * k);
    fact *= (2.0 * k + 1) * (2.0 * k + 2);
  }
  return sum;
}

// chi(s) with zeta(s) = chi(s) zeta(1-s).
cplx chi(cplx s) {
  const cplx lg = oracle::log_gamma_by_recurrence((1.0 - s) / 2.0, 60) -
                  oracle::log_gamma_by_recurrence(s / 2.0, 60);
  return std::exp((s - 0.5) * std::log(pi) + lg);
}

}  // namespace

TEST_SUITE("rzeta") {

TEST_CASE("R(0) = -1/2") {
  const auto r = eval_r({0.0, 0.0});
  CHECK(std::abs(r.value - cplx(-0.5, 0.0)) < 1e-10);
  CHECK(r.abs_err < 1e-10);
}

TEST_CASE("arg R(1/2)") {
  CHECK(std::abs(std::arg(eval_r({0.5, 0.0}).value) + 2.86349) < 5e-5);
}

TEST_CASE("R is close to 1 far to the right") {
  CHECK(std::abs(eval_r({2.0, 110.0}).value - 1.0) < 1.0);
}

TEST_CASE("R against the zeta splitting") {
  // zeta(s) = R(s) + chi(s) conj(R(1 - conj s)).
  for (cplx s : {cplx(2.0, 10.0), cplx(1.5, 33.0), cplx(0.7, 3.0), cplx(3.0, -8.0)}) {
    CAPTURE(s);
    const cplx r1 = eval_r(s).value;
    const cplx r2 = eval_r(ComplexPoint(1.0 - std::conj(s))).value;
    const cplx z = zeta_em(s);
    CHECK(std::abs(r1 + chi(s) * std::conj(r2) - z) < 1e-9 * std::max(1.0, std::abs(z)));
  }
}

TEST_CASE("shift invariance") {
  const auto a = eval_r({0.5, 30.0}, QuadratureSpec::at_level(2));
  const auto b = eval_r({0.5, 30.0}, QuadratureSpec::at_level(3));
  CHECK(std::abs(a.value - b.value) < 1e-9);
  for (double t : {10.0, 50.0, 200.0}) {
    CAPTURE(t);
    const auto aut = eval_r({0.5, t});
    const int n = auto_shift_level({0.5, t});
    const auto other = eval_r({0.5, t}, QuadratureSpec::at_level(n + 1));
    CHECK(std::abs(aut.value - other.value) < 1e-9 * std::max(1.0, std::abs(aut.value)));
  }
}

TEST_CASE("direct and shifted contours agree where both converge") {
  for (cplx s : {cplx(0.0, 0.0), cplx(-1.0, 2.0), cplx(0.5, 5.0)}) {
    CAPTURE(s);
    CHECK(std::abs(eval_r_direct(s).value - eval_r(s).value) < 1e-9);
  }
}

TEST_CASE("R' against finite differences") {
  const cplx s(0.5, 20.0);
  const double h = 1e-5;
  const cplx fd = (eval_r(ComplexPoint(s + h)).value - eval_r(ComplexPoint(s - h)).value) / (2 * h);
  CHECK(std::abs(eval_r_prime(s).value - fd) < 1e-7);
  const auto p = eval_r_pair(s);
  CHECK(p.value.value == eval_r(s).value);
  CHECK(p.derivative.value == eval_r_prime(s).value);
}

TEST_CASE("the constant a") {
  const cplx a = -2.0 * eval_r_prime({0.0, 0.0}).value - specfun::euler_gamma() / 2;
  CHECK(std::abs(a - cplx(0.64087373271637604, 0.55990021329435156)) < 1e-9);
}

TEST_CASE("identity at s = 1/2") {
  const auto p = eval_r_pair({0.5, 0.0});
  const cplx v = 2.0 + p.derivative.value / p.value.value +
                 specfun::digamma({0.25, 0.0}).value / 2.0;
  CHECK(std::abs(v - cplx(0.6373866805736784, 0.5524349167416397)) < 1e-9);
}

TEST_CASE("theta integral and contour give the same F") {
  CHECK(std::abs(eval_F_theta({1.0, 0.0}).value - eval_F_from_r({1.0, 0.0}).value) < 1e-8);
  const cplx r1 = eval_r({1.0, 0.0}).value;
  CHECK(std::abs(eval_F_theta({1.0, 0.0}).value - r1) < 1e-8);  // pi^{-1/2} Gamma(1/2) = 1
  for (cplx s : {cplx(-2.0, 7.0), cplx(3.0, -12.0), cplx(0.5, 14.0)}) {
    CAPTURE(s);
    CHECK(std::abs(eval_F_theta(s).value - eval_F_from_r(s).value) < 1e-8);
  }
}

TEST_CASE("growth envelope") {
  CHECK(std::abs(eval_F_theta({-3.0, 5.0}).value) <= 1.0);
  CHECK(std::abs(eval_F_theta({4.0, 0.0}).value) <= 3.0 * 2.0 * 2.0);
  const auto e1 = bound_envelope({-1.0, -4.0});
  CHECK(e1.f_t == doctest::Approx(std::exp(pi)).epsilon(1e-14));
  CHECK(e1.g_sigma == 1.0);
  const auto e2 = bound_envelope({2.0, 1.0});
  CHECK(e2.f_t == 1.0);
  CHECK(e2.g_sigma == doctest::Approx(3.0 * std::sqrt(2.0)).epsilon(1e-14));
  const auto e0 = bound_envelope({0.0, 0.0});
  CHECK(e0.bound() == 1.0);
}

TEST_CASE("envelope holds on a grid") {
  for (double sg = -4.0; sg <= 4.0; sg += 2.0)
    for (double t = -20.0; t <= 20.0; t += 10.0) {
      if (sg == 0.0 && t == 0.0) continue;  // F(0) is defined by continuity only
      CAPTURE(sg);
      CAPTURE(t);
      CHECK(std::abs(eval_F_theta({sg, t}).value) <= bound_envelope({sg, t}).bound() * (1 + 1e-9));
    }
}

TEST_CASE("Z function") {
  const double z0 = z_function(0.0).real();
  CHECK(std::abs(z0 + 1.4603545088095868) < 1e-6);
  CHECK(std::abs(z_function(14.134725141734694).real()) < 1e-5);
  const double th = specfun::riemann_siegel_theta(100.0).real();
  const cplx ref = std::exp(cplx(0, th)) * specfun::zeta_line_oracle(100.0).value;
  CHECK(std::abs(z_function(100.0).real() - ref.real()) < 1e-6);
  CHECK(std::abs(ref.imag()) < 1e-6);
  CHECK(z_function(-37.5).real() == doctest::Approx(z_function(37.5).real()).epsilon(1e-12));
}

TEST_CASE("trivial zeros") {
  CHECK(std::abs(eval_r({-2.0, 0.0}).value) < 1e-8);
  CHECK(std::abs(eval_r({-4.0, 0.0}).value) < 1e-8);
}

TEST_CASE("invalid contour specifications") {
  CHECK_THROWS_AS(QuadratureSpec::make(-1, 0.5, 8.0, 0.04), ContourError);
  CHECK_THROWS_AS(QuadratureSpec::make(2, 2.01, 8.0, 0.04), ContourError);
  CHECK_THROWS_AS(QuadratureSpec::make(2, 2.5, 8.0, 0.0), ContourError);
  CHECK_THROWS_AS(QuadratureSpec::make(2, 2.5, 1.0, 2.0), ContourError);
  CHECK_NOTHROW(QuadratureSpec::make(2, 2.5, 8.0, 0.04));
}

TEST_CASE("non-finite input") {
  CHECK_THROWS_AS(eval_r(ComplexPoint(cplx(NAN, 0.0))), DomainError);
}

}  // TEST_SUITE
