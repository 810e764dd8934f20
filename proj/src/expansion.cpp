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

#include "lclt/expansion.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "lclt/errors.hpp"
#include "lclt/local_moments.hpp"
#include "lclt/primes.hpp"
#include "lclt/summation.hpp"

namespace lclt {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRealityTol = 1e-12;

inline cplx i_power(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

inline cplx cmul(const cplx& a, const cplx& b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

// K_n with ||deg-n part of log(1 + R_p)||_1 <= K_n rho_p^n: R_p is
// majorized by sum_{n>=2} (2 J pi rho)^n / n! t^n, and log(1 + .) by the
// series sum_m r^m / m with nonnegative coefficients.
std::vector<double> log_majorant(int J, int N) {
  std::vector<double> r(static_cast<std::size_t>(N + 1), 0.0);
  double term = 1.0;
  for (int n = 1; n <= N; ++n) {
    term *= 2.0 * J * kPi / n;
    if (n >= 2) r[static_cast<std::size_t>(n)] = term;
  }
  std::vector<double> out(static_cast<std::size_t>(N + 1), 0.0);
  std::vector<double> power = r;
  for (int m = 1; 2 * m <= N; ++m) {
    if (m > 1) {
      std::vector<double> next(static_cast<std::size_t>(N + 1), 0.0);
      for (int a = 0; a <= N; ++a) {
        for (int b = 0; a + b <= N; ++b) {
          next[static_cast<std::size_t>(a + b)] +=
              power[static_cast<std::size_t>(a)] * r[static_cast<std::size_t>(b)];
        }
      }
      power = std::move(next);
    }
    for (int n = 0; n <= N; ++n) {
      out[static_cast<std::size_t>(n)] += power[static_cast<std::size_t>(n)] / m;
    }
  }
  return out;
}

// Runs fn(chunk) for every chunk on `workers` threads.
template <typename Fn>
void run_chunks(std::size_t chunks, int workers, Fn fn) {
  if (workers <= 1 || chunks <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) fn(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mu;
  const int n = std::min<int>(workers, static_cast<int>(chunks));
  for (int w = 0; w < n; ++w) {
    pool.emplace_back([&] {
      try {
        for (std::size_t c = next++; c < chunks; c = next++) fn(c);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::string to_string(SigmaMode m) {
  return m == SigmaMode::kSigmaT ? "sigmaT" : "half";
}

SigmaMode sigma_mode_from_string(const std::string& s) {
  if (s == "sigmaT") return SigmaMode::kSigmaT;
  if (s == "half") return SigmaMode::kHalf;
  throw ValidationError("n3 sigma mode must be 'sigmaT' or 'half'");
}

void ExpansionConfig::validate() const {
  require(N >= 2, "degree cutoff N must be >= 2");
  require(N <= 24, "degree cutoff N must be <= 24");
  require(P_max >= 1000, "P_max must be >= 1000");
  require(P_max <= 100'000'000, "P_max must be <= 1e8");
  require(tol > 0.0 && tol < 1e-3, "tol must lie in (0, 1e-3)");
  require(delta1 > 0.0 && delta2 > 0.0, "delta1 and delta2 must be positive");
  require(delta3 >= 0.0 && delta4 >= 0.0, "delta3 and delta4 must be >= 0");
  require(workers >= 1, "workers must be >= 1");
}

double ExpansionConfig::delta3_for(int J) const {
  return delta3 > 0.0 ? delta3 : 0.9 * kPi * delta2 / std::sqrt(J);
}

double ExpansionConfig::delta4_for(int J) const {
  return delta4 > 0.0 ? delta4 : std::min(delta2, delta3_for(J) / (4.0 * kPi));
}

LogCharSeries log_char_series(const LFunctionSpec& spec, double sigma,
                              const ExpansionConfig& config, int min_degree) {
  config.validate();
  const int J = spec.J();
  const int N = config.N;
  require(min_degree >= 2, "min_degree must be >= 2");
  if (min_degree == 2) {
    require(sigma > 0.5, "degree-2 prime sums need sigma > 1/2");
  } else {
    require(sigma >= (5.0 + 2.0 * spec.eta) / 12.0,
            "degree >= 3 prime sums need sigma >= (5 + 2 eta) / 12");
  }

  const std::vector<double> K = log_majorant(J, N);
  const std::vector<std::uint32_t> primes = primes_up_to(config.P_max);
  const std::size_t chunks = (primes.size() + kPrimeChunk - 1) / kPrimeChunk;
  const std::size_t nc = MonomialBasis::get(J, N)->size();

  struct Chunk {
    std::vector<ComplexCompensatedSum> sum;
    std::vector<CompensatedSum> dropped;
  };
  std::vector<Chunk> parts(chunks);
  run_chunks(chunks, config.workers, [&](std::size_t c) {
    Chunk& part = parts[c];
    part.sum.resize(nc);
    part.dropped.resize(static_cast<std::size_t>(N + 1));
    const std::size_t lo = c * kPrimeChunk;
    const std::size_t hi = std::min(primes.size(), lo + kPrimeChunk);
    for (std::size_t t = lo; t < hi; ++t) {
      const std::uint64_t p = primes[t];
      std::vector<LocalFactorPoly> g;
      for (int j = 0; j < J; ++j) {
        g.push_back(g_poly(spec, j, p, sigma, config.tol));
      }
      const double rho = local_rho(g);
      // Longest prefix of degrees whose majorant reaches tol.
      int cap = 1;
      double rn = rho;
      for (int n = 2; n <= N; ++n) {
        rn *= rho;
        if (K[static_cast<std::size_t>(n)] * rn < config.tol) break;
        cap = n;
      }
      rn = std::pow(rho, cap);
      for (int n = cap + 1; n <= N; ++n) {
        rn *= rho;
        if (n >= 2) part.dropped[static_cast<std::size_t>(n)].add(K[static_cast<std::size_t>(n)] * rn);
      }
      if (cap < 2) continue;
      const LocalMoments lm(std::move(g), cap - 1);
      const TruncatedSeries L = R_series(lm, N, cap).log1p(cap);
      const std::size_t end = L.basis().degree_begin(cap + 1);
      for (std::size_t i = L.basis().degree_begin(2); i < end; ++i) {
        part.sum[i].add(L.coeff(i));
      }
    }
  });

  LogCharSeries out{TruncatedSeries(J, N),
                    std::vector<double>(static_cast<std::size_t>(N + 1), 0.0),
                    primes.size()};
  std::vector<ComplexCompensatedSum> total(nc);
  std::vector<CompensatedSum> dropped(static_cast<std::size_t>(N + 1));
  for (const Chunk& part : parts) {
    for (std::size_t i = 0; i < nc; ++i) total[i].merge(part.sum[i]);
    for (int n = 0; n <= N; ++n) {
      dropped[static_cast<std::size_t>(n)].merge(part.dropped[static_cast<std::size_t>(n)]);
    }
  }
  const MonomialBasis& B = out.series.basis();
  for (std::size_t i = B.degree_begin(min_degree); i < nc; ++i) {
    out.series.coeff(i) = total[i].value();
  }

  // Primes beyond P_max: rho_p <= d p^{-s} / (1 - P^{-s}).
  const double s = sigma - spec.eta;
  const double P = static_cast<double>(config.P_max);
  const double lead = spec.d / (1.0 - std::pow(P, -s));
  for (int n = min_degree; n <= N; ++n) {
    const double ns = n * s;
    const double far =
        ns > 1.0 ? K[static_cast<std::size_t>(n)] * std::pow(lead, n) *
                       prime_power_sum_tail_bound(ns, P)
                 : std::numeric_limits<double>::infinity();
    out.tail_bound[static_cast<std::size_t>(n)] =
        far + dropped[static_cast<std::size_t>(n)].value();
  }
  return out;
}

std::vector<cplx> D_matrix(const LFunctionSpec& spec, double sigma,
                           const ExpansionConfig& config) {
  config.validate();
  require(sigma > 0.5, "D needs sigma > 1/2");
  const int J = spec.J();
  const auto JJ = static_cast<std::size_t>(J * J);
  const std::vector<std::uint32_t> primes = primes_up_to(config.P_max);
  const std::size_t chunks = (primes.size() + kPrimeChunk - 1) / kPrimeChunk;
  std::vector<std::vector<ComplexCompensatedSum>> parts(chunks);
  run_chunks(chunks, config.workers, [&](std::size_t c) {
    auto& acc = parts[c];
    acc.resize(JJ);
    const std::size_t lo = c * kPrimeChunk;
    const std::size_t hi = std::min(primes.size(), lo + kPrimeChunk);
    for (std::size_t t = lo; t < hi; ++t) {
      std::vector<LocalFactorPoly> g;
      for (int j = 0; j < J; ++j) {
        g.push_back(g_poly(spec, j, primes[t], sigma, config.tol));
      }
      for (int a = 0; a < J; ++a) {
        for (int b = 0; b < J; ++b) {
          const auto& ga = g[static_cast<std::size_t>(a)].c;
          const auto& gb = g[static_cast<std::size_t>(b)].c;
          const std::size_t M = std::min(ga.size(), gb.size());
          for (std::size_t m = 0; m < M; ++m) {
            acc[static_cast<std::size_t>(a * J + b)].add(
                {ga[m].real() * gb[m].real() + ga[m].imag() * gb[m].imag(),
                 ga[m].imag() * gb[m].real() - ga[m].real() * gb[m].imag()});
          }
        }
      }
    }
  });
  std::vector<ComplexCompensatedSum> total(JJ);
  for (const auto& part : parts) {
    for (std::size_t i = 0; i < JJ; ++i) total[i].merge(part[i]);
  }
  std::vector<cplx> D(JJ);
  for (std::size_t i = 0; i < JJ; ++i) D[i] = total[i].value();
  return D;
}

QuadraticSplit quadratic_split(const LFunctionSpec& spec, double theta,
                               double logT, const ExpansionConfig& config) {
  spec.validate();
  const ScaleParams sc = make_scale(spec, theta, logT);
  const int J = spec.J();
  QuadraticSplit q;
  q.psi = sc.psi;
  q.D = D_matrix(spec, sc.sigmaT, config);
  q.D_tail.assign(static_cast<std::size_t>(J), 0.0);
  if (config.tail_completion) {
    for (int j = 0; j < J; ++j) {
      q.D_tail[static_cast<std::size_t>(j)] =
          spec.components[static_cast<std::size_t>(j)].xi *
          prime_power_sum_tail_estimate(2.0 * sc.sigmaT,
                                        static_cast<double>(config.P_max));
      q.D[static_cast<std::size_t>(j * J + j)] += q.D_tail[static_cast<std::size_t>(j)];
    }
  }
  if (sc.sigmaT - spec.eta > 0.5) {
    q.D_tail_bound = beta_square_tail_bound(spec, sc.sigmaT,
                                            static_cast<double>(config.P_max));
  } else {
    q.D_tail_bound = std::numeric_limits<double>::infinity();
  }
  const double pi2 = kPi * kPi;
  q.C.resize(static_cast<std::size_t>(J * J));
  for (int a = 0; a < J; ++a) {
    for (int b = 0; b < J; ++b) {
      cplx v = q.D[static_cast<std::size_t>(a * J + b)];
      if (a == b) v -= q.psi[static_cast<std::size_t>(a)];
      q.C[static_cast<std::size_t>(a * J + b)] = -pi2 * v;
    }
  }
  for (int a = 0; a < J; ++a) {
    for (int b = a; b < J; ++b) {
      cplx& x = q.C[static_cast<std::size_t>(a * J + b)];
      cplx& y = q.C[static_cast<std::size_t>(b * J + a)];
      q.hermiticity_residual = std::max(q.hermiticity_residual,
                                        std::abs(x - std::conj(y)));
      const cplx h = 0.5 * (x + std::conj(y));
      x = h;
      y = std::conj(h);
    }
  }
  return q;
}

double CoeffTable::get(const Exponents& k, const Exponents& l) const {
  const auto i = basis().index_of(k, l);
  return i < 0 ? 0.0 : b[static_cast<std::size_t>(i)];
}

void CoeffTable::set(const Exponents& k, const Exponents& l, double v) {
  const auto i = basis().index_of(k, l);
  require(i >= 0, "coefficient outside the table");
  b[static_cast<std::size_t>(i)] = v;
}

const MonomialBasis& CoeffTable::basis() const {
  return *MonomialBasis::get(J, N);
}

TruncatedSeries to_real_coordinates(const TruncatedSeries& s) {
  const int J = s.J();
  const int N = s.N();
  TruncatedSeries out(J, N);
  const MonomialBasis& B = s.basis();
  // binom[n][a]
  std::vector<std::vector<double>> binom(static_cast<std::size_t>(N + 1));
  for (int n = 0; n <= N; ++n) {
    auto& row = binom[static_cast<std::size_t>(n)];
    row.assign(static_cast<std::size_t>(n + 1), 1.0);
    for (int a = 1; a < n; ++a) {
      row[static_cast<std::size_t>(a)] =
          binom[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(a - 1)] +
          binom[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(a)];
    }
  }
  std::vector<std::vector<cplx>> factor(static_cast<std::size_t>(J));
  Exponents xe(static_cast<std::size_t>(J));
  Exponents ye(static_cast<std::size_t>(J));
  std::vector<int> digit(static_cast<std::size_t>(J));
  for (std::size_t i = 0; i < B.size(); ++i) {
    const cplx c = s.coeff(i);
    if (c == cplx(0.0, 0.0)) continue;
    const int* e = B.exponents(i);
    // (x - i y)^k (x + i y)^l = sum_q f[q] x^q y^{k+l-q}
    for (int j = 0; j < J; ++j) {
      const int k = e[j];
      const int l = e[J + j];
      auto& f = factor[static_cast<std::size_t>(j)];
      f.assign(static_cast<std::size_t>(k + l + 1), 0.0);
      for (int a = 0; a <= k; ++a) {
        for (int b = 0; b <= l; ++b) {
          const double w = binom[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)] *
                           binom[static_cast<std::size_t>(l)][static_cast<std::size_t>(b)];
          // (-i)^{k-a} i^{l-b} = i^{(l-b) - (k-a)}
          f[static_cast<std::size_t>(a + b)] += w * i_power((l - b) - (k - a));
        }
      }
    }
    std::fill(digit.begin(), digit.end(), 0);
    while (true) {
      cplx term = c;
      for (int j = 0; j < J; ++j) {
        const int q = digit[static_cast<std::size_t>(j)];
        xe[static_cast<std::size_t>(j)] = q;
        ye[static_cast<std::size_t>(j)] = e[j] + e[J + j] - q;
        term = cmul(term, factor[static_cast<std::size_t>(j)][static_cast<std::size_t>(q)]);
      }
      const auto at = B.index_of(xe, ye);
      out.coeff(static_cast<std::size_t>(at)) += term;
      int j = 0;
      while (j < J) {
        auto& d = digit[static_cast<std::size_t>(j)];
        if (++d <= e[j] + e[J + j]) break;
        d = 0;
        ++j;
      }
      if (j == J) break;
    }
  }
  // Degree n scales by (2 pi i)^{-n} = (2 pi)^{-n} i^{-n}.
  for (std::size_t i = 0; i < B.size(); ++i) {
    const int n = B.degree(i);
    out.coeff(i) = cmul(out.coeff(i), i_power(-n)) * std::pow(2.0 * kPi, -n);
  }
  return out;
}

CoeffTable b_table_from_parts(const QuadraticSplit& q,
                              const TruncatedSeries& higher,
                              const std::vector<double>& higher_tail) {
  const int J = higher.J();
  const int N = higher.N();
  require(static_cast<int>(q.psi.size()) == J, "split and series disagree on J");
  TruncatedSeries S(J, N);
  const MonomialBasis& B = S.basis();
  Exponents k(static_cast<std::size_t>(J), 0);
  Exponents l(static_cast<std::size_t>(J), 0);
  for (int a = 0; a < J; ++a) {
    for (int b = 0; b < J; ++b) {
      std::fill(k.begin(), k.end(), 0);
      std::fill(l.begin(), l.end(), 0);
      k[static_cast<std::size_t>(a)] = 1;
      l[static_cast<std::size_t>(b)] = 1;
      S.set(k, l, q.C[static_cast<std::size_t>(a * J + b)]);
    }
  }
  if (N >= 3) {
    for (std::size_t i = B.degree_begin(3); i < B.size(); ++i) {
      S.coeff(i) = higher.coeff(i);
    }
  }
  const TruncatedSeries G = to_real_coordinates(S).exp();

  CoeffTable t;
  t.J = J;
  t.N = N;
  t.psi = q.psi;
  t.C = q.C;
  t.b.resize(B.size());
  std::size_t worst = 0;
  for (std::size_t i = 0; i < B.size(); ++i) {
    t.b[i] = G.coeff(i).real();
    const double im = std::abs(G.coeff(i).imag());
    if (im > t.max_imag_residue) {
      t.max_imag_residue = im;
      worst = i;
    }
  }
  t.tail_bounds.assign(static_cast<std::size_t>(N + 1), 0.0);
  // ||(x - i y)^k (x + i y)^l||_1 <= 2^n, so an l1 bound T in (zbar, z)
  // becomes T 2^n (2 pi)^{-n} = T pi^{-n}.
  t.tail_bounds[2] = static_cast<double>(J * J) * q.D_tail_bound;
  for (int n = 3; n <= N && static_cast<std::size_t>(n) < higher_tail.size(); ++n) {
    t.tail_bounds[static_cast<std::size_t>(n)] =
        higher_tail[static_cast<std::size_t>(n)] * std::pow(kPi, -n);
  }
  if (t.max_imag_residue >= kRealityTol) {
    std::ostringstream msg;
    msg << "coefficient table is not real: imaginary residue "
        << t.max_imag_residue << " at exponents (";
    const int* e = B.exponents(worst);
    for (int s = 0; s < 2 * J; ++s) msg << (s ? (s == J ? " | " : " ") : "") << e[s];
    msg << ")";
    throw NumericalError(msg.str());
  }
  return t;
}

double verify_delta1(const LFunctionSpec& spec, double sigma,
                     const ExpansionConfig& config) {
  config.validate();
  const int J = spec.J();
  const double r = config.delta1;
  double worst = 0.0;
  for (std::uint32_t p : primes_up_to(config.P_max)) {
    double g2 = 0.0;
    for (int j = 0; j < J; ++j) {
      const double rho = local_rho({g_poly(spec, j, p, sigma, config.tol)});
      g2 += rho * rho;
    }
    // |e^{ix} - 1| <= |x| with |x| <= 2 pi ||z|| ||g||.
    const double bound = 2.0 * kPi * r * std::sqrt(g2);
    if (bound <= 0.5) {
      worst = std::max(worst, bound);
      continue;
    }
    // Deterministic directions on the sphere of radius delta1 (and half of
    // it), two coordinates per component.
    const int dim = 2 * J;
    double seen = 0.0;
    for (int q = 0; q < 512; ++q) {
      std::vector<double> w(static_cast<std::size_t>(dim));
      double norm = 0.0;
      for (int i = 0; i < dim; ++i) {
        w[static_cast<std::size_t>(i)] = std::cos(kPi * (q + 0.5) * (2 * i + 1) / 512.0 +
                                                  0.7548776662 * q * (i + 1));
        norm += w[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)];
      }
      const double scale = (q % 2 ? r : 0.5 * r) / std::sqrt(norm);
      std::vector<double> x(static_cast<std::size_t>(J)), y(static_cast<std::size_t>(J));
      for (int j = 0; j < J; ++j) {
        x[static_cast<std::size_t>(j)] = scale * w[static_cast<std::size_t>(2 * j)];
        y[static_cast<std::size_t>(j)] = scale * w[static_cast<std::size_t>(2 * j + 1)];
      }
      seen = std::max(seen, std::abs(local_char_exact(spec, p, sigma, x, y, config.tol) - 1.0));
    }
    if (!(seen <= 0.5)) {
      std::ostringstream msg;
      msg << "|R_p(z)| = " << seen << " > 1/2 at p = " << p
          << " on ||z|| <= delta1 = " << r << "; lower --delta1";
      throw NumericalError(msg.str());
    }
    worst = std::max(worst, seen);
  }
  return worst;
}

CoeffTable b_table(const LFunctionSpec& spec, double theta, double logT,
                   const ExpansionConfig& config) {
  config.validate();
  spec.validate();
  const ScaleParams sc = make_scale(spec, theta, logT);
  verify_delta1(spec, sc.sigmaT, config);
  const QuadraticSplit q = quadratic_split(spec, theta, logT, config);
  const int J = spec.J();
  TruncatedSeries higher(J, config.N);
  std::vector<double> tail(static_cast<std::size_t>(config.N + 1), 0.0);
  std::uint64_t primes = 0;
  if (config.N >= 3) {
    const double s3 =
        config.n3_sigma_mode == SigmaMode::kSigmaT ? sc.sigmaT : 0.5;
    LogCharSeries lcs = log_char_series(spec, s3, config, 3);
    higher = std::move(lcs.series);
    tail = std::move(lcs.tail_bound);
    primes = lcs.primes;
  } else {
    primes = primes_up_to(config.P_max).size();
  }
  CoeffTable t = b_table_from_parts(q, higher, tail);
  t.spec_label = spec.name;
  t.theta = theta;
  t.logT = logT;
  t.sigmaT = sc.sigmaT;
  t.config = config;
  t.primes = primes;
  return t;
}

Envelope coefficient_envelope(const CoeffTable& table) {
  const MonomialBasis& B = table.basis();
  Envelope env;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int lo_deg = table.N + 1;
  int hi_deg = -1;
  for (std::size_t i = 0; i < B.size(); ++i) {
    const double v = std::abs(table.b[i]);
    if (v == 0.0) continue;
    const double x = B.degree(i);
    const double y = std::log(v);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++env.points;
    lo_deg = std::min(lo_deg, B.degree(i));
    hi_deg = std::max(hi_deg, B.degree(i));
  }
  if (env.points < 2 || lo_deg == hi_deg) {
    env.degenerate = true;
    return env;
  }
  const double n = env.points;
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double icpt = (sy - slope * sx) / n;
  env.fit_C = std::exp(icpt);
  env.fit_r = std::exp(-slope);
  for (std::size_t i = 0; i < B.size(); ++i) {
    const double v = std::abs(table.b[i]);
    if (v == 0.0) continue;
    const double bound = env.fit_C * std::pow(env.fit_r, -B.degree(i));
    env.raw_violation = std::max(env.raw_violation, v / bound);
  }
  env.cover_C = env.fit_C * std::max(1.0, env.raw_violation) * (1.0 + 1e-12);
  env.max_violation = 0.0;
  for (std::size_t i = 0; i < B.size(); ++i) {
    const double v = std::abs(table.b[i]);
    if (v == 0.0) continue;
    const double bound = env.cover_C * std::pow(env.fit_r, -B.degree(i));
    env.max_violation = std::max(env.max_violation, std::max(0.0, v - bound) / bound);
  }
  return env;
}

}  // namespace lclt
