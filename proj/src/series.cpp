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

#include "lclt/series.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "lclt/errors.hpp"

namespace lclt {
namespace {

// Keeps the code cube (N+1)^{2J} addressable with a modest table.
constexpr std::uint64_t kMaxCube = 1ULL << 27;

void enumerate(int slots, int remaining, std::vector<int>& cur, int at,
               std::vector<int>& out) {
  if (at == slots - 1) {
    cur[static_cast<std::size_t>(at)] = remaining;
    out.insert(out.end(), cur.begin(), cur.end());
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur[static_cast<std::size_t>(at)] = e;
    enumerate(slots, remaining - e, cur, at + 1, out);
  }
}

using cplx = std::complex<double>;

// Fused a += x * y without the library's inf/nan recovery path.
inline void mul_add(cplx& a, const cplx& x, const cplx& y) {
  const double re = x.real() * y.real() - x.imag() * y.imag();
  const double im = x.real() * y.imag() + x.imag() * y.real();
  a = cplx(a.real() + re, a.imag() + im);
}

void check_same_shape(const TruncatedSeries& a, const TruncatedSeries& b) {
  require(a.J() == b.J() && a.N() == b.N(), "series shape mismatch");
}

}  // namespace

std::shared_ptr<const MonomialBasis> MonomialBasis::get(int J, int N) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const MonomialBasis>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{J, N}];
  if (!slot) slot = std::make_shared<const MonomialBasis>(J, N);
  return slot;
}

MonomialBasis::MonomialBasis(int J, int N) : J_(J), N_(N) {
  require(J >= 1, "series needs J >= 1");
  require(N >= 0, "series needs N >= 0");
  const int slots = 2 * J;
  std::uint64_t cube = 1;
  for (int s = 0; s < slots; ++s) {
    cube *= static_cast<std::uint64_t>(N + 1);
    require(cube <= kMaxCube, "series basis too large for (J, N)");
  }
  std::vector<int> cur(static_cast<std::size_t>(slots), 0);
  for (int d = 0; d <= N; ++d) {
    begin_.push_back(degree_.size());
    const std::size_t before = exps_.size();
    enumerate(slots, d, cur, 0, exps_);
    const std::size_t added = (exps_.size() - before) / static_cast<std::size_t>(slots);
    degree_.insert(degree_.end(), added, d);
  }
  begin_.push_back(degree_.size());

  pos_.assign(cube, -1);
  code_.resize(degree_.size());
  for (std::size_t i = 0; i < degree_.size(); ++i) {
    std::uint64_t c = 0;
    for (int s = slots - 1; s >= 0; --s) {
      c = c * static_cast<std::uint64_t>(N + 1) +
          static_cast<std::uint64_t>(exps_[i * static_cast<std::size_t>(slots) +
                                           static_cast<std::size_t>(s)]);
    }
    code_[i] = c;
    pos_[c] = static_cast<std::int32_t>(i);
  }
}

std::int64_t MonomialBasis::index_of(const Exponents& k,
                                     const Exponents& l) const {
  require(static_cast<int>(k.size()) == J_ && static_cast<int>(l.size()) == J_,
          "exponent tuple length must equal J");
  int deg = 0;
  std::uint64_t c = 0;
  for (int s = 2 * J_ - 1; s >= 0; --s) {
    const int e = s < J_ ? k[static_cast<std::size_t>(s)]
                         : l[static_cast<std::size_t>(s - J_)];
    require(e >= 0, "negative exponent");
    deg += e;
    if (deg > N_) return -1;
    c = c * static_cast<std::uint64_t>(N_ + 1) + static_cast<std::uint64_t>(e);
  }
  return pos_[c];
}

TruncatedSeries::TruncatedSeries(int J, int N)
    : basis_(MonomialBasis::get(J, N)), c_(basis_->size()) {}

TruncatedSeries TruncatedSeries::constant(int J, int N, cplx c) {
  TruncatedSeries s(J, N);
  s.c_[0] = c;
  return s;
}

cplx TruncatedSeries::get(const Exponents& k, const Exponents& l) const {
  const auto i = basis_->index_of(k, l);
  return i < 0 ? cplx(0.0, 0.0) : c_[static_cast<std::size_t>(i)];
}

void TruncatedSeries::set(const Exponents& k, const Exponents& l, cplx v) {
  const auto i = basis_->index_of(k, l);
  require(i >= 0, "monomial exceeds the degree cutoff");
  c_[static_cast<std::size_t>(i)] = v;
}

void TruncatedSeries::add_to(const Exponents& k, const Exponents& l, cplx v) {
  const auto i = basis_->index_of(k, l);
  require(i >= 0, "monomial exceeds the degree cutoff");
  c_[static_cast<std::size_t>(i)] += v;
}

std::size_t TruncatedSeries::nonzero_count() const {
  return static_cast<std::size_t>(std::count_if(
      c_.begin(), c_.end(), [](const cplx& v) { return v != cplx(0.0, 0.0); }));
}

int TruncatedSeries::min_degree() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != cplx(0.0, 0.0)) return basis_->degree(i);
  }
  return N() + 1;
}

int TruncatedSeries::max_degree() const {
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] != cplx(0.0, 0.0)) return basis_->degree(i);
  }
  return -1;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  check_same_shape(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  check_same_shape(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(cplx s) {
  for (auto& v : c_) v = cplx(v.real() * s.real() - v.imag() * s.imag(),
                             v.real() * s.imag() + v.imag() * s.real());
  return *this;
}

TruncatedSeries TruncatedSeries::mul(const TruncatedSeries& o, int cap) const {
  check_same_shape(*this, o);
  require(cap >= 0 && cap <= N(), "product cap outside [0, N]");
  TruncatedSeries out(J(), N());
  const MonomialBasis& B = *basis_;
  const int lo = o.min_degree();
  if (lo > cap) return out;
  const std::size_t j0 = B.degree_begin(lo);
  // Output coefficient c receives a_i b_j in ascending (i, j) order, the
  // same order for every cutoff.
  for (std::size_t i = 0; i < B.degree_begin(cap - lo + 1); ++i) {
    const cplx a = c_[i];
    if (a == cplx(0.0, 0.0)) continue;
    const std::uint64_t ci = B.code(i);
    const std::size_t j1 = B.degree_begin(cap - B.degree(i) + 1);
    for (std::size_t j = j0; j < j1; ++j) {
      const auto at = static_cast<std::size_t>(B.index_of_code(ci + B.code(j)));
      mul_add(out.c_[at], a, o.c_[j]);
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::log1p(int cap) const {
  require(c_[0] == cplx(0.0, 0.0), "log1p needs a zero constant term");
  require(cap >= 0 && cap <= N(), "log1p cap outside [0, N]");
  TruncatedSeries out(J(), N());
  const int lo = min_degree();
  if (lo > cap) return out;
  TruncatedSeries power = truncate(cap).extend(N());
  const int terms = cap / lo;
  for (int m = 1; m <= terms; ++m) {
    if (m > 1) power = power.mul(*this, cap);
    const double w = (m % 2 == 1 ? 1.0 : -1.0) / m;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      out.c_[i] += w * power.c_[i];
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::exp(int cap) const {
  require(c_[0] == cplx(0.0, 0.0), "exp needs a zero constant term");
  require(cap >= 0 && cap <= N(), "exp cap outside [0, N]");
  TruncatedSeries out = constant(J(), N(), 1.0);
  const int lo = min_degree();
  if (lo > cap) return out;
  TruncatedSeries term = truncate(cap).extend(N());
  const int terms = cap / lo;
  for (int r = 1; r <= terms; ++r) {
    if (r > 1) {
      term = term.mul(*this, cap);
      term *= 1.0 / r;
    }
    out += term;
  }
  return out;
}

TruncatedSeries TruncatedSeries::extract_degree(int n) const {
  require(n >= 0 && n <= N(), "degree outside [0, N]");
  TruncatedSeries out(J(), N());
  for (std::size_t i = basis_->degree_begin(n); i < basis_->degree_begin(n + 1);
       ++i) {
    out.c_[i] = c_[i];
  }
  return out;
}

TruncatedSeries TruncatedSeries::truncate(int M) const {
  require(M >= 0 && M <= N(), "truncation degree outside [0, N]");
  TruncatedSeries out(J(), M);
  // Graded order makes the smaller basis a prefix of this one.
  std::copy(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(out.c_.size()),
            out.c_.begin());
  return out;
}

TruncatedSeries TruncatedSeries::extend(int M) const {
  require(M >= N(), "extension degree below N");
  TruncatedSeries out(J(), M);
  std::copy(c_.begin(), c_.end(), out.c_.begin());
  return out;
}

cplx TruncatedSeries::evaluate(const std::vector<cplx>& u,
                               const std::vector<cplx>& w) const {
  const int J_ = J();
  require(static_cast<int>(u.size()) == J_ && static_cast<int>(w.size()) == J_,
          "evaluation point must have J components");
  const int slots = 2 * J_;
  const auto stride = static_cast<std::size_t>(N() + 1);
  std::vector<cplx> pw(static_cast<std::size_t>(slots) * stride);
  for (int s = 0; s < slots; ++s) {
    const cplx v = s < J_ ? u[static_cast<std::size_t>(s)]
                          : w[static_cast<std::size_t>(s - J_)];
    cplx acc = 1.0;
    for (std::size_t e = 0; e < stride; ++e) {
      pw[static_cast<std::size_t>(s) * stride + e] = acc;
      acc *= v;
    }
  }
  cplx total = 0.0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == cplx(0.0, 0.0)) continue;
    const int* e = basis_->exponents(i);
    cplx term = c_[i];
    for (int s = 0; s < slots; ++s) {
      term *= pw[static_cast<std::size_t>(s) * stride +
                 static_cast<std::size_t>(e[s])];
    }
    total += term;
  }
  return total;
}

cplx TruncatedSeries::evaluate_z(const std::vector<cplx>& z) const {
  std::vector<cplx> zb(z.size());
  std::transform(z.begin(), z.end(), zb.begin(),
                 [](const cplx& v) { return std::conj(v); });
  return evaluate(zb, z);
}

std::string TruncatedSeries::dump() const {
  const int slots = 2 * J();
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != cplx(0.0, 0.0)) order.push_back(i);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(
        basis_->exponents(a), basis_->exponents(a) + slots,
        basis_->exponents(b), basis_->exponents(b) + slots);
  });
  std::ostringstream out;
  char buf[64];
  for (std::size_t i : order) {
    const int* e = basis_->exponents(i);
    for (int s = 0; s < slots; ++s) {
      if (s == J()) out << "| ";
      out << e[s] << ' ';
    }
    std::snprintf(buf, sizeof buf, "| %.17g | %.17g\n", c_[i].real(),
                  c_[i].imag());
    out << buf;
  }
  return out.str();
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
  a += b;
  return a;
}

TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
  a -= b;
  return a;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.mul(b);
}

}  // namespace lclt
