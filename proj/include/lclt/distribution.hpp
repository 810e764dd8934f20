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

// The Hermite expansion of the law of (log|L_j|, arg L_j): density,
// rectangle probabilities, Gaussian leading term and the truncated
// characteristic function, all driven by a CoeffTable.
//
// Units: density() takes raw values (u_j, v_j) = (log|L_j|, arg L_j).
// Rectangle endpoints are normalized, i.e. multiples of sqrt(pi psi_j).

#ifndef LCLT_DISTRIBUTION_HPP_
#define LCLT_DISTRIBUTION_HPP_

#include <string>
#include <vector>

#include "lclt/expansion.hpp"

namespace lclt {

struct Rectangle {
  // Real-part window [a_j, b_j], imaginary-part window [c_j, d_j].
  std::vector<double> a, b, c, d;

  int J() const { return static_cast<int>(a.size()); }
  // a <= b and c <= d (degenerate windows allowed), no NaN.
  void validate() const;
  bool contains(const double* re, const double* im) const;

  static Rectangle full(int J);
  // Same window in every component.
  static Rectangle cube(int J, double a, double b, double c, double d);
};

// "a,b,c,d" per component, components separated by ';'. "inf" allowed.
Rectangle parse_rectangle(const std::string& s);
std::string format_rectangle(const Rectangle& r);

double density(const CoeffTable& t, const std::vector<double>& u,
               const std::vector<double>& v);

double probability(const CoeffTable& t, const Rectangle& rect);

// Size of the two highest retained degrees' contribution to probability();
// a heuristic for the truncation error, reported next to every value.
double probability_tail_estimate(const CoeffTable& t, const Rectangle& rect);

double gaussian_leading(const Rectangle& rect);

// e^{Q_T(z)} sum (2 pi i)^{|k|+|l|} b_{k,l} x^k y^l for ||(x, y)|| <= delta2;
// throws ValidationError outside.
cplx char_function(const CoeffTable& t, const std::vector<double>& x,
                   const std::vector<double>& y);

// CSV, header `u,v,density`: a grid over component 0, other components at 0.
std::string density_grid_csv(const CoeffTable& t, double u_lo, double u_hi,
                             int nu, double v_lo, double v_hi, int nv);

struct ProbabilityRow {
  Rectangle rect;
  double expansion = 0.0;
  double gaussian = 0.0;
  double tail = 0.0;
};
// CSV, header `rect,expansion,gaussian,tail_bound`; rect quoted.
std::string probability_csv(const std::vector<ProbabilityRow>& rows);

// %.17g
std::string fmt17(double v);

}  // namespace lclt

#endif  // LCLT_DISTRIBUTION_HPP_
