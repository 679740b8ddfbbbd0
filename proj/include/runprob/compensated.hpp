#pragma once

#include <cmath>

namespace runprob {

// Neumaier's variant of Kahan summation: also correct when the incoming term
// is larger in magnitude than the running sum, which is the common case for
// alternating series. Tracks sum(|term|) so callers can bound the error.
class CompensatedSum {
 public:
  void add(double term) {
    const double t = sum_ + term;
    if (std::fabs(sum_) >= std::fabs(term)) {
      compensation_ += (sum_ - t) + term;
    } else {
      compensation_ += (term - t) + sum_;
    }
    sum_ = t;
    magnitude_ += std::fabs(term);
  }

  double value() const { return sum_ + compensation_; }
  double magnitude() const { return magnitude_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
  double magnitude_ = 0.0;
};

}  // namespace runprob
