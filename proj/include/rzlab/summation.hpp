#pragma once

#include <cmath>
#include <complex>

namespace rzlab {

// Neumaier variant of Kahan summation: the running compensation absorbs the
// low-order bits lost by each addition regardless of operand ordering.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double init) : sum_(init) {}

  CompensatedSum& operator+=(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
    return *this;
  }
  CompensatedSum& operator-=(double x) { return *this += -x; }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class CompensatedComplexSum {
 public:
  CompensatedComplexSum() = default;

  CompensatedComplexSum& operator+=(std::complex<double> z) {
    re_ += z.real();
    im_ += z.imag();
    return *this;
  }
  CompensatedComplexSum& operator-=(std::complex<double> z) { return *this += -z; }

  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace rzlab
