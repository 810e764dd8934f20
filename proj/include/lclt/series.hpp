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

// Truncated power series in 2J variables. Slots 0..J-1 carry the exponent
// tuple k, slots J..2J-1 the tuple l; in the expansion engine these are
// (zbar, z) and later (x, y).
//
// Storage is dense over a shared monomial basis in graded order (total
// degree, then lexicographic). Absent monomials read as zero, so the
// interface behaves like a sparse map; dense storage gives O(1) product
// addressing and makes the accumulation order of every coefficient
// independent of the cutoff, which is what keeps truncation bit-exact.

#ifndef LCLT_SERIES_HPP_
#define LCLT_SERIES_HPP_

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace lclt {

using Exponents = std::vector<int>;  // length J

class MonomialBasis {
 public:
  // Shared, immutable; cached per (J, N).
  static std::shared_ptr<const MonomialBasis> get(int J, int N);

  MonomialBasis(int J, int N);

  int J() const { return J_; }
  int N() const { return N_; }
  std::size_t size() const { return degree_.size(); }

  int degree(std::size_t i) const { return degree_[i]; }
  // First index of degree d (d may be N + 1, giving size()).
  std::size_t degree_begin(int d) const { return begin_[static_cast<std::size_t>(d)]; }
  const int* exponents(std::size_t i) const {
    return &exps_[i * static_cast<std::size_t>(2 * J_)];
  }
  std::uint64_t code(std::size_t i) const { return code_[i]; }
  // Index of the monomial whose cube code is c, or -1 (degree above N).
  std::int32_t index_of_code(std::uint64_t c) const { return pos_[c]; }
  // -1 when outside the basis.
  std::int64_t index_of(const Exponents& k, const Exponents& l) const;

 private:
  int J_;
  int N_;
  std::vector<int> degree_;
  std::vector<std::size_t> begin_;
  std::vector<int> exps_;
  std::vector<std::uint64_t> code_;
  std::vector<std::int32_t> pos_;
};

class TruncatedSeries {
 public:
  using cplx = std::complex<double>;

  TruncatedSeries(int J, int N);
  static TruncatedSeries constant(int J, int N, cplx c);

  int J() const { return basis_->J(); }
  int N() const { return basis_->N(); }
  const MonomialBasis& basis() const { return *basis_; }

  cplx get(const Exponents& k, const Exponents& l) const;
  // Throws ValidationError if the monomial exceeds the cutoff.
  void set(const Exponents& k, const Exponents& l, cplx v);
  void add_to(const Exponents& k, const Exponents& l, cplx v);

  cplx coeff(std::size_t i) const { return c_[i]; }
  cplx& coeff(std::size_t i) { return c_[i]; }
  const std::vector<cplx>& coeffs() const { return c_; }

  std::size_t nonzero_count() const;
  // Smallest degree carrying a nonzero coefficient (N + 1 for zero).
  int min_degree() const;
  int max_degree() const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(cplx s);

  // Terms of total degree above `cap` are dropped (cap <= N).
  TruncatedSeries mul(const TruncatedSeries& o, int cap) const;
  TruncatedSeries mul(const TruncatedSeries& o) const { return mul(o, N()); }

  // log(1 + R) and exp(S) for zero-constant arguments; terms above `cap`
  // are dropped. Throws ValidationError on a nonzero constant term.
  TruncatedSeries log1p(int cap) const;
  TruncatedSeries log1p() const { return log1p(N()); }
  TruncatedSeries exp(int cap) const;
  TruncatedSeries exp() const { return exp(N()); }

  TruncatedSeries extract_degree(int n) const;
  // Same coefficients in a basis with cutoff M <= N.
  TruncatedSeries truncate(int M) const;
  // Same coefficients in a basis with cutoff M >= N.
  TruncatedSeries extend(int M) const;

  // sum_i c_i prod_j u_j^{k_j} w_j^{l_j}.
  cplx evaluate(const std::vector<cplx>& u, const std::vector<cplx>& w) const;
  // Evaluation at u = conj(z), w = z.
  cplx evaluate_z(const std::vector<cplx>& z) const;

  // `k-tuple | l-tuple | re | im` per nonzero monomial, lexicographic.
  std::string dump() const;

 private:
  std::shared_ptr<const MonomialBasis> basis_;
  std::vector<cplx> c_;
};

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace lclt

#endif  // LCLT_SERIES_HPP_
