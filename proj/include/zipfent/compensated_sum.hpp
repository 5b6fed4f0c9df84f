#pragma once

#include <cmath>

namespace zipfent {

/// Neumaier's variant of Kahan summation.
///
/// Unlike plain Kahan, the correction also survives when an addend is larger
/// in magnitude than the running sum, so term ordering only affects the last
/// few ulps.
template <typename Real = double>
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(Real initial) : sum_(initial) {}

  CompensatedSum& operator+=(Real value) {
    const Real t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  CompensatedSum& operator-=(Real value) { return *this += -value; }

  [[nodiscard]] Real value() const { return sum_ + compensation_; }
  explicit operator Real() const { return value(); }

 private:
  Real sum_ = Real{0};
  Real compensation_ = Real{0};
};

}  // namespace zipfent
