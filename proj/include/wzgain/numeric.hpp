#pragma once

#include <cmath>

namespace wzgain {

// Compensated (Neumaier) summation: keeps a running correction term so that
// long sums of terms spanning many orders of magnitude stay accurate to a
// few ulps of the true result.
class NeumaierSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace wzgain
