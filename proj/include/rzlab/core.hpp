#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rzlab {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double eps = std::numeric_limits<double>::epsilon();
inline constexpr double inf = std::numeric_limits<double>::infinity();

// Error hierarchy. Every failure raised by the library derives from Error so
// the CLI can map them onto exit codes in one place.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class PrecisionError : public Error {
 public:
  using Error::Error;
};

class ContourError : public Error {
 public:
  using Error::Error;
};

class BoundaryZeroError : public Error {
 public:
  BoundaryZeroError(const std::string& what, cplx where)
      : Error(what), where_(where) {}
  cplx where() const { return where_; }

 private:
  cplx where_;
};

class NearZeroError : public Error {
 public:
  NearZeroError(const std::string& what, double t) : Error(what), t_(t) {}
  double t() const { return t_; }

 private:
  double t_;
};

class IncompleteStoreError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  FormatError(const std::string& what, long line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

/// A point sigma + i t of the complex plane. Both components are finite.
struct ComplexPoint {
  double re = 0.0;
  double im = 0.0;

  constexpr ComplexPoint() = default;
  ComplexPoint(double sigma, double t) : re(sigma), im(t) {
    if (!std::isfinite(sigma) || !std::isfinite(t))
      throw DomainError("ComplexPoint: non-finite component");
  }
  ComplexPoint(cplx z) : ComplexPoint(z.real(), z.imag()) {}  // NOLINT

  operator cplx() const { return {re, im}; }  // NOLINT
  friend bool operator==(const ComplexPoint&, const ComplexPoint&) = default;
};

enum class Method {
  stirling,
  asymptotic,
  eta_euler,
  theta_series,
  theta_transformed,
  contour_trapezoid,
  theta_integral,
  newton,
  cluster,
};

const char* to_string(Method m);

/// Value plus an a-posteriori absolute error estimate. abs_err is +inf only
/// when the evaluator declares failure.
struct EvalResult {
  cplx value{};
  double abs_err = 0.0;
  Method method = Method::stirling;

  double real() const { return value.real(); }
  double imag() const { return value.imag(); }
};

inline void require_finite(double x, const char* what) {
  if (!std::isfinite(x))
    throw DomainError(std::string(what) + ": non-finite argument");
}

}  // namespace rzlab
