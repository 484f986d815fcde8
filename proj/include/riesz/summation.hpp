#ifndef RIESZ_SUMMATION_HPP
#define RIESZ_SUMMATION_HPP

#include <cmath>

namespace riesz {

/// Neumaier compensated accumulator. Order of `add` calls fixes the result.
template <typename Scalar = double>
class CompensatedSum {
 public:
  void add(Scalar v) {
    const Scalar t = sum_ + v;
    using std::abs;
    if (abs(sum_) >= abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  Scalar value() const { return sum_ + comp_; }

 private:
  Scalar sum_ = 0;
  Scalar comp_ = 0;
};

}  // namespace riesz

#endif  // RIESZ_SUMMATION_HPP
