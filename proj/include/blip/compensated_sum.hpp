#pragma once

#include <cmath>

namespace blip {

// Neumaier's variant of Kahan summation. Robust when an addend is larger
// in magnitude than the running sum.
class CompensatedSum {
 public:
  constexpr CompensatedSum() noexcept = default;

  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  // Fold another partial sum in, keeping both compensations.
  void merge(const CompensatedSum& other) noexcept {
    add(other.sum_);
    add(other.compensation_);
  }

  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace blip
