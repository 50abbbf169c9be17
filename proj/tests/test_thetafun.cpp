#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "rzlab/thetafun.hpp"

using namespace rzlab;
using namespace rzlab::thetafun;

TEST_SUITE("thetafun") {

TEST_CASE("phi at large x keeps one term") {
  CHECK(std::abs(phi(30.0).phi - (1.0 - 2.0 * std::exp(-30.0 * pi))) < 1e-30);
}

TEST_CASE("both series agree") {
  CHECK(std::abs(phi_direct(1.0) - phi_transformed(1.0)) < 1e-14);
  CHECK(std::abs(phi_transformed(0.3) - oracle::phi_brute(0.3, 50)) < 1e-14);
  for (int k = 0; k < 100; ++k) {
    const double x = 0.05 * std::pow(400.0, k / 99.0);
    CAPTURE(x);
    CHECK(std::abs(phi_direct(x) - phi_transformed(x)) < 1e-13);
  }
}

TEST_CASE("phi against the product form") {
  for (double x : {0.05, 0.2, 0.7, 1.0, 3.0, 10.0}) {
    CAPTURE(x);
    CHECK(std::abs(phi(x).phi - oracle::phi_product(x)) < 1e-13);
  }
}

TEST_CASE("phi is increasing and stays in [0, 1)") {
  double prev = 0.0;
  for (double x = 0.002; x <= 10.0; x += 0.002) {
    const double v = phi(x).phi;
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("series choice and domain") {
  CHECK(phi(2.0).series_used == Series::direct);
  CHECK(phi(0.5).series_used == Series::transformed);
  CHECK_THROWS_AS(phi(0.0), DomainError);
  CHECK_THROWS_AS(phi(-1.0), DomainError);
  CHECK_THROWS_AS(phi_prime(0.0), DomainError);
}

TEST_CASE("phi' against finite differences") {
  const double h = 1e-6;
  for (double x : {0.1, 0.4, 1.0, 2.0, 5.0}) {
    CAPTURE(x);
    const double fd = (phi(x + h).phi - phi(x - h).phi) / (2 * h);
    CHECK(std::abs(phi_prime(x) - fd) < 1e-9);
    CHECK(std::abs(phi_prime_direct(x) - phi_prime_transformed(x)) < 1e-12);
  }
}

TEST_CASE("phi' inequalities at x = 0.5") {
  const double d = phi_prime(0.5);
  CHECK(d >= 0.0);
  CHECK(d <= 0.5 * pi * std::pow(0.5, -2.5) * std::exp(-pi / 2));
}

TEST_CASE("inequality grid") {
  std::vector<double> grid;
  for (int k = 1; k <= 50; ++k) grid.push_back(0.1 * k);
  const auto rep = check_prop2_grid(grid);
  CHECK(rep.ok());
  CHECK(rep.points == grid.size());
  CHECK(rep.worst_nonneg >= 0.0);

  const std::vector<double> ten{10.0};
  const auto r10 = check_prop2_grid(ten);
  CHECK(r10.ok());
  CHECK(2 * pi * std::exp(-10 * pi) - phi_prime(10.0) >= 0.0);
  CHECK(r10.worst_small_x_bound == inf);

  const auto empty = check_prop2_grid(std::vector<double>{});
  CHECK(empty.points == 0);
  CHECK(empty.violations.empty());
}

TEST_CASE("dense property sweep of the inequalities") {
  std::vector<double> grid;
  for (int k = 1; k <= 2000; ++k) grid.push_back(0.005 * k);
  CHECK(check_prop2_grid(grid).ok());
}

TEST_CASE("theta3 reduces to phi on Re tau = -1") {
  for (double x : {0.1, 0.5, 1.0, 2.5}) {
    const auto e = theta3({-1.0, x});
    CHECK(std::abs(e.value - cplx(phi(x).phi, 0.0)) < 1e-13);
  }
}

TEST_CASE("theta3 at the self-dual point") {
  // theta3(0, -1/tau) = sqrt(-i tau) theta3(0, tau); at tau = i both sides
  // coincide, and the closed form is pi^{1/4} / Gamma(3/4).
  const auto e = theta3({0.0, 1.0});
  const cplx tau(0.0, 1.0);
  const cplx dual = theta3(ComplexPoint(-1.0 / tau)).value / std::sqrt(-cplx(0, 1) * tau);
  CHECK(std::abs(e.value - dual) < 1e-14);
  CHECK(std::abs(e.value.real() - std::pow(pi, 0.25) / std::tgamma(0.75)) < 1e-14);
}

TEST_CASE("theta3 far up the half plane") {
  const cplx tau(0.3, 10.0);
  const cplx one_term = 1.0 + 2.0 * std::exp(cplx(0, pi) * tau);
  CHECK(std::abs(theta3(tau).value - one_term) < 1e-40);
}

TEST_CASE("theta3 derivative against finite differences") {
  const cplx tau(0.2, 0.8);
  const double h = 1e-6;
  const cplx fd = (theta3(tau + h).value - theta3(tau - h).value) / (2 * h);
  CHECK(std::abs(theta3(tau).derivative - fd) < 1e-8);
  CHECK_THROWS_AS(theta3({0.0, 0.0}), DomainError);
}

}  // TEST_SUITE
