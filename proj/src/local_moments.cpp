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

#include "lclt/local_moments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lclt/errors.hpp"
#include "lclt/philox.hpp"
#include "lclt/summation.hpp"

namespace lclt {
namespace {

constexpr std::uint32_t kMomentStream = 0x4d4f4d31;  // "MOM1"

inline cplx mul(const cplx& a, const cplx& b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

// a * conj(b)
inline cplx mul_conj(const cplx& a, const cplx& b) {
  return {a.real() * b.real() + a.imag() * b.imag(),
          a.imag() * b.real() - a.real() * b.imag()};
}

// i^n
inline cplx i_power(int n) {
  switch (n % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

int g_power_cutoff(int d, double eta, std::uint64_t p, double sigma,
                   double tol) {
  const double s = sigma - eta;
  require(s > 0.0, "local sum needs sigma > eta");
  require(tol > 0.0, "tolerance must be positive");
  const double lp = std::log(static_cast<double>(p));
  const double log_geo = std::log1p(-std::exp(-s * lp));
  const double log_tol = std::log(tol);
  for (int M = 1; M < 100000; ++M) {
    const double log_bound = std::log(static_cast<double>(d) / (M + 1)) -
                             (M + 1) * s * lp - log_geo;
    if (log_bound < log_tol) return M;
  }
  throw ValidationError("local power cutoff does not converge");
}

LocalFactorPoly g_poly(const LFunctionSpec& spec, int j, std::uint64_t p,
                       double sigma, double tol) {
  require(j >= 0 && j < spec.J(), "component index out of range");
  LocalFactorPoly g;
  g.p = p;
  g.j = j;
  g.sigma = sigma;
  g.M = g_power_cutoff(spec.d, spec.eta, p, sigma, tol);
  g.c.resize(static_cast<std::size_t>(g.M));
  beta_powers(spec, j, p, g.M, g.c.data());
  const double x = std::pow(static_cast<double>(p), -sigma);
  double xm = 1.0;
  for (auto& c : g.c) {
    xm *= x;
    c *= xm;
  }
  return g;
}

cplx g_eval(const LocalFactorPoly& g, cplx X) {
  cplx acc = 0.0;
  for (std::size_t m = g.c.size(); m-- > 0;) acc = mul(acc, X) + g.c[m];
  return mul(acc, X);
}

double local_rho(const std::vector<LocalFactorPoly>& g) {
  int M = 0;
  for (const auto& f : g) M = std::max(M, f.M);
  double rho = 0.0;
  for (int m = 0; m < M; ++m) {
    double best = 0.0;
    for (const auto& f : g) {
      if (m < f.M) best = std::max(best, std::abs(f.c[static_cast<std::size_t>(m)]));
    }
    rho += best;
  }
  return rho;
}

namespace {

std::vector<LocalFactorPoly> all_factors(const LFunctionSpec& spec,
                                         std::uint64_t p, double sigma,
                                         double tol) {
  std::vector<LocalFactorPoly> g;
  for (int j = 0; j < spec.J(); ++j) g.push_back(g_poly(spec, j, p, sigma, tol));
  return g;
}

}  // namespace

LocalMoments::LocalMoments(const LFunctionSpec& spec, std::uint64_t p,
                           double sigma, double tol, int max_power)
    : LocalMoments(all_factors(spec, p, sigma, tol), max_power) {}

LocalMoments::LocalMoments(std::vector<LocalFactorPoly> g, int max_power)
    : J_(static_cast<int>(g.size())), D_(max_power), g_(std::move(g)) {
  require(max_power >= 0, "moment degree must be nonnegative");
  require(J_ >= 1, "need at least one local sum");
  rho_ = local_rho(g_);

  std::size_t size = 1;
  for (int j = 0; j < J_; ++j) size *= static_cast<std::size_t>(D_ + 1);
  poly_.resize(size);
  low_.assign(size, 0);
  std::vector<int> k(static_cast<std::size_t>(J_));
  for (std::size_t code = 0; code < size; ++code) {
    std::size_t rest = code;
    int total = 0;
    int first = -1;
    for (int j = 0; j < J_; ++j) {
      k[static_cast<std::size_t>(j)] = static_cast<int>(rest % static_cast<std::size_t>(D_ + 1));
      rest /= static_cast<std::size_t>(D_ + 1);
      total += k[static_cast<std::size_t>(j)];
      if (first < 0 && k[static_cast<std::size_t>(j)] > 0) first = j;
    }
    if (total > D_) continue;
    low_[code] = total;
    if (total == 0) {
      poly_[code] = {1.0};
      continue;
    }
    // prod = parent * g_first; the parent has a smaller code.
    std::size_t stride = 1;
    for (int j = 0; j < first; ++j) stride *= static_cast<std::size_t>(D_ + 1);
    const auto& parent = poly_[code - stride];
    const auto& g = g_[static_cast<std::size_t>(first)].c;
    std::vector<cplx> prod(parent.size() + g.size(), 0.0);
    for (std::size_t a = static_cast<std::size_t>(total - 1); a < parent.size(); ++a) {
      for (std::size_t m = 0; m < g.size(); ++m) {
        prod[a + m + 1] += mul(parent[a], g[m]);
      }
    }
    poly_[code] = std::move(prod);
  }
}

std::size_t LocalMoments::tuple_code(const int* k) const {
  std::size_t code = 0;
  int total = 0;
  for (int j = J_ - 1; j >= 0; --j) {
    require(k[j] >= 0, "negative exponent");
    total += k[j];
    code = code * static_cast<std::size_t>(D_ + 1) + static_cast<std::size_t>(k[j]);
  }
  require(total <= D_, "moment exponent exceeds the configured maximum");
  return code;
}

cplx LocalMoments::A_code(std::size_t ck, std::size_t cl) const {
  const auto& P = poly_[ck];
  const auto& Q = poly_[cl];
  const std::size_t lo = static_cast<std::size_t>(std::max(low_[ck], low_[cl]));
  const std::size_t hi = std::min(P.size(), Q.size());
  double re = 0.0;
  double im = 0.0;
  for (std::size_t a = lo; a < hi; ++a) {
    const cplx t = mul_conj(P[a], Q[a]);
    re += t.real();
    im += t.imag();
  }
  return {re, im};
}

cplx LocalMoments::A(const Exponents& k, const Exponents& l) const {
  require(static_cast<int>(k.size()) == J_ && static_cast<int>(l.size()) == J_,
          "exponent tuple length must equal J");
  return A_code(tuple_code(k.data()), tuple_code(l.data()));
}

cplx A_moment(const LFunctionSpec& spec, std::uint64_t p, double sigma,
              const Exponents& k, const Exponents& l, double tol) {
  int degk = 0;
  for (int e : k) degk += e;
  int degl = 0;
  for (int e : l) degl += e;
  const LocalMoments lm(spec, p, sigma, tol, std::max(degk, degl));
  return lm.A(k, l);
}

TruncatedSeries R_series(const LocalMoments& lm, int N, int cap) {
  require(N >= 2, "R_series needs N >= 2");
  require(cap <= N, "R_series cap above N");
  const int J = lm.J();
  TruncatedSeries R(J, N);
  if (cap < 2) return R;
  require(cap - 1 <= lm.max_power(), "moments computed to too low a degree");
  const MonomialBasis& B = R.basis();
  double fact[64];
  fact[0] = 1.0;
  for (int n = 1; n < 64; ++n) fact[n] = fact[n - 1] * n;
  for (std::size_t i = B.degree_begin(2); i < B.degree_begin(cap + 1); ++i) {
    const int* e = B.exponents(i);
    int dk = 0;
    int dl = 0;
    double denom = 1.0;
    for (int j = 0; j < J; ++j) {
      dk += e[j];
      dl += e[J + j];
      denom *= fact[e[j]] * fact[e[J + j]];
    }
    if (dk == 0 || dl == 0) continue;
    const int K = dk + dl;
    const cplx a = lm.A_code(lm.tuple_code(e), lm.tuple_code(e + J));
    const double scale = std::pow(std::numbers::pi, K) / denom;
    R.coeff(i) = mul(i_power(K), a) * scale;
  }
  return R;
}

TruncatedSeries R_series(const LFunctionSpec& spec, std::uint64_t p,
                         double sigma, int N, double tol) {
  const LocalMoments lm(spec, p, sigma, tol, N);
  return R_series(lm, N, N);
}

std::vector<MomentEstimate> mc_moment_oracle_all(
    const LFunctionSpec& spec, std::uint64_t p, double sigma, int max_degree,
    std::uint64_t n_samples, std::uint64_t seed, double tol) {
  require(n_samples >= 1, "need at least one sample");
  const int J = spec.J();
  const auto basis = MonomialBasis::get(J, max_degree);
  std::vector<LocalFactorPoly> g;
  for (int j = 0; j < J; ++j) g.push_back(g_poly(spec, j, p, sigma, tol));

  const std::size_t nm = basis->size();
  std::vector<CompensatedSum> s_re(nm), s_im(nm), q_re(nm), q_im(nm);
  const auto stride = static_cast<std::size_t>(max_degree + 1);
  std::vector<cplx> pw(static_cast<std::size_t>(2 * J) * stride);
  const auto key = Philox4x32::key_from_seed(seed);
  for (std::uint64_t n = 0; n < n_samples; ++n) {
    const auto r = Philox4x32::generate(
        {static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(n >> 32), 0,
         kMomentStream},
        key);
    const double phi = 2.0 * std::numbers::pi * Philox4x32::to_unit(r[0], r[1]);
    const cplx X(std::cos(phi), std::sin(phi));
    for (int j = 0; j < J; ++j) {
      const cplx v = g_eval(g[static_cast<std::size_t>(j)], X);
      cplx* a = &pw[static_cast<std::size_t>(j) * stride];
      cplx* b = &pw[static_cast<std::size_t>(J + j) * stride];
      a[0] = b[0] = 1.0;
      for (std::size_t e = 1; e < stride; ++e) {
        a[e] = mul(a[e - 1], v);
        b[e] = mul(b[e - 1], std::conj(v));
      }
    }
    for (std::size_t i = 0; i < nm; ++i) {
      const int* e = basis->exponents(i);
      cplx t = 1.0;
      for (int s = 0; s < 2 * J; ++s) {
        t = mul(t, pw[static_cast<std::size_t>(s) * stride +
                      static_cast<std::size_t>(e[s])]);
      }
      s_re[i].add(t.real());
      s_im[i].add(t.imag());
      q_re[i].add(t.real() * t.real());
      q_im[i].add(t.imag() * t.imag());
    }
  }
  const double nn = static_cast<double>(n_samples);
  std::vector<MomentEstimate> out(nm);
  for (std::size_t i = 0; i < nm; ++i) {
    const double mr = s_re[i].value() / nn;
    const double mi = s_im[i].value() / nn;
    const double var = std::max(0.0, q_re[i].value() / nn - mr * mr) +
                       std::max(0.0, q_im[i].value() / nn - mi * mi);
    out[i].estimate = {mr, mi};
    out[i].std_error = n_samples > 1 ? std::sqrt(var / (nn - 1.0)) : 0.0;
  }
  return out;
}

MomentEstimate mc_moment_oracle(const LFunctionSpec& spec, std::uint64_t p,
                                double sigma, const Exponents& k,
                                const Exponents& l, std::uint64_t n_samples,
                                std::uint64_t seed, double tol) {
  int deg = 0;
  for (int e : k) deg += e;
  for (int e : l) deg += e;
  const auto basis = MonomialBasis::get(spec.J(), deg);
  const auto idx = basis->index_of(k, l);
  require(idx >= 0, "bad exponent tuples");
  if (deg == 0) return {cplx(1.0, 0.0), 0.0};
  return mc_moment_oracle_all(spec, p, sigma, deg, n_samples, seed,
                              tol)[static_cast<std::size_t>(idx)];
}

cplx local_char_exact(const LFunctionSpec& spec, std::uint64_t p,
                      double sigma, const std::vector<double>& x,
                      const std::vector<double>& y, double tol, int nodes) {
  const int J = spec.J();
  require(static_cast<int>(x.size()) == J && static_cast<int>(y.size()) == J,
          "point must have J components");
  require(nodes >= 8, "need at least 8 nodes");
  std::vector<LocalFactorPoly> g;
  for (int j = 0; j < J; ++j) g.push_back(g_poly(spec, j, p, sigma, tol));
  ComplexCompensatedSum acc;
  for (int q = 0; q < nodes; ++q) {
    const double th = 2.0 * std::numbers::pi * q / nodes;
    const cplx X(std::cos(th), std::sin(th));
    double phase = 0.0;
    for (int j = 0; j < J; ++j) {
      const cplx v = g_eval(g[static_cast<std::size_t>(j)], X);
      phase += x[static_cast<std::size_t>(j)] * v.real() +
               y[static_cast<std::size_t>(j)] * v.imag();
    }
    phase *= 2.0 * std::numbers::pi;
    acc.add({std::cos(phase), std::sin(phase)});
  }
  return acc.value() / static_cast<double>(nodes);
}

}  // namespace lclt
