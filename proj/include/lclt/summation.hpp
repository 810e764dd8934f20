// Copyright 2026 The lclt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LCLT_SUMMATION_HPP_
#define LCLT_SUMMATION_HPP_

#include <cmath>
#include <complex>

namespace lclt {

// Neumaier's variant of Kahan summation. The running compensation is kept
// separately and folded in only on read, so merging two partial sums in a
// fixed order is deterministic.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double v) : sum_(v) {}

  void add(double x) {
    const double t = sum_ + x;
    // Select instead of branching: the comparison is unpredictable early on.
    const bool keep = std::fabs(sum_) >= std::fabs(x);
    const double big = keep ? sum_ : x;
    const double small = keep ? x : sum_;
    comp_ += (big - t) + small;
    sum_ = t;
  }

  void merge(const CompensatedSum& other) {
    add(other.sum_);
    add(other.comp_);
  }

  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class ComplexCompensatedSum {
 public:
  void add(std::complex<double> z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  void merge(const ComplexCompensatedSum& other) {
    re_.merge(other.re_);
    im_.merge(other.im_);
  }
  ComplexCompensatedSum& operator+=(std::complex<double> z) {
    add(z);
    return *this;
  }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace lclt

#endif  // LCLT_SUMMATION_HPP_
