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

#include "lclt/zeta.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include <boost/math/special_functions/zeta.hpp>

#include "lclt/errors.hpp"
#include "lclt/philox.hpp"
#include "lclt/primes.hpp"
#include "lclt/stats.hpp"
#include "lclt/summation.hpp"

namespace lclt {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr long double kTwoPiL = 6.283185307179586476925286766559005768L;
constexpr std::uint32_t kZetaStream = 0x5a455441;  // "ZETA"
// Direct-sum length N = |t| / (2 pi kEmSlack): the Bernoulli terms then
// shrink roughly like kEmSlack^{2k}.
constexpr double kEmSlack = 0.9;
constexpr int kMaxBernoulli = 400;
// Principal logs above this abscissa are the Euler-product branch.
constexpr double kBranchSafe = 1.1;

// e^{-i t ln n} with the phase reduced in extended precision.
cplx unit_phase(double t, long double ln) {
  const long double ph = std::fmod(static_cast<long double>(t) * ln, kTwoPiL);
  double s, c;
  ::sincos(static_cast<double>(ph), &s, &c);
  return {c, -s};
}

cplx npow(std::uint64_t n, cplx s) {
  const long double ln = std::log(static_cast<long double>(n));
  return std::exp(-s.real() * static_cast<double>(ln)) * unit_phase(s.imag(), ln);
}

std::uint64_t em_length(cplx s) {
  return std::max<std::uint64_t>(
      10, static_cast<std::uint64_t>(std::ceil(std::abs(s) / (2.0 * kPi * kEmSlack))));
}

struct Tail {
  cplx value;
  int K = 0;
  bool ok = false;
};

// N^{1-s}/(s-1) + N^{-s}/2 + sum_k B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1},
// stopped once the standard remainder bound
//   |T_{K+1}| |s + 2K + 1| / (sigma + 2K + 1)
// is below tol. Nms = N^{-s}.
Tail em_tail(cplx s, double N, cplx Nms, double tol) {
  Tail out;
  ComplexCompensatedSum acc;
  acc.add(N * Nms / (s - 1.0));
  acc.add(0.5 * Nms);
  cplx term = s * Nms / (12.0 * N);  // B_2 / 2! = 1/12
  const double inv_N2 = 1.0 / (N * N);
  double prev = std::abs(term);
  for (int k = 1; k <= kMaxBernoulli; ++k) {
    acc.add(term);
    // B_{2k}/(2k)! = (-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k}.
    const double ratio = -boost::math::zeta(2.0 * k + 2.0) /
                         (boost::math::zeta(2.0 * k) * 4.0 * kPi * kPi);
    const cplx next = term * ratio * (s + (2.0 * k - 1.0)) * (s + 2.0 * k) * inv_N2;
    const double denom = s.real() + 2.0 * k + 1.0;
    if (denom > 0.0 &&
        std::abs(next) * std::abs(s + (2.0 * k + 1.0)) / denom < tol) {
      out.value = acc.value();
      out.K = k;
      out.ok = true;
      return out;
    }
    // Asymptotic series past its smallest term.
    if (k > 2 && std::abs(next) > prev) break;
    prev = std::abs(next);
    term = next;
  }
  out.value = acc.value();
  return out;
}

void check_s(cplx s) {
  require(std::isfinite(s.real()) && std::isfinite(s.imag()), "s must be finite");
  require(!(s.real() == 1.0 && s.imag() == 0.0), "zeta has a pole at s = 1");
  require(std::fabs(s.imag()) <= kMaxZetaHeight,
          "|Im s| exceeds the 1e9 accuracy envelope");
}

struct EmResult {
  cplx value;
  EmParams params;
};

EmResult zeta_em(cplx s, int digits) {
  check_s(s);
  require(digits >= 1 && digits <= 15, "digits must be in 1..15");
  const double tol = std::pow(10.0, -digits) / 4.0;
  std::uint64_t N = em_length(s);
  for (int attempt = 0; attempt < 8; ++attempt, N *= 2) {
    const double Nd = static_cast<double>(N);
    const Tail tail = em_tail(s, Nd, npow(N, s), tol);
    if (!tail.ok) continue;
    ComplexCompensatedSum acc;
    for (std::uint64_t n = 1; n < N; ++n) acc.add(npow(n, s));
    acc.add(tail.value);
    return {acc.value(), {N, tail.K}};
  }
  throw NumericalError("zeta_eval cannot reach the requested precision");
}

// Extends L = log zeta(from) to log zeta(to) along the horizontal segment.
bool stitch(cplx& L, cplx z_from, double s_from, double s_to, double t,
            int halvings_left, int digits) {
  const cplx z_to = zeta_eval({s_to, t}, digits);
  if (z_to == 0.0 || z_from == 0.0) return false;
  const cplx d = std::log(z_to / z_from);
  if (std::fabs(d.imag()) < kPi / 2) {
    L += d;
    return true;
  }
  if (halvings_left <= 0) return false;
  const double mid = 0.5 * (s_from + s_to);
  const cplx z_mid = zeta_eval({mid, t}, digits);
  return stitch(L, z_from, s_from, mid, t, halvings_left - 1, digits) &&
         stitch(L, z_mid, mid, s_to, t, halvings_left - 1, digits);
}

// Fused evaluation of zeta(sigma_k + it) on an ascending grid
// sigma_k = sigma_lo + k h for one t: n^{-it} is built multiplicatively from
// prime phases, n^{-sigma_k} from two real power tables.
class ZetaLine {
 public:
  ZetaLine(double sigma_lo, double h, int K, std::uint64_t N_max)
      : sigma_lo_(sigma_lo), h_(h), K_(K), N_max_(N_max) {
    require(N_max < (1ull << 31), "zeta line too long");
    spf_ = smallest_prime_factors(static_cast<std::uint32_t>(N_max));
    base_.resize(N_max + 1);
    step_.resize(N_max + 1);
    for (std::uint64_t n = 1; n <= N_max; ++n) {
      const long double ln = std::log(static_cast<long double>(n));
      if (n >= 2 && spf_[n] == n) lnp_.push_back(ln);
      base_[n] = std::exp(-sigma_lo * static_cast<double>(ln));
      step_[n] = std::exp(-h * static_cast<double>(ln));
    }
  }

  double sigma(int k) const { return sigma_lo_ + h_ * k; }

  // zeta(sigma_k + it) for k = 0..K; false when any tail fails.
  bool eval(double t, std::vector<cplx>& a, std::vector<cplx>& out,
            double tol) const {
    const std::uint64_t N = em_length({sigma(K_), t});
    if (N > N_max_) return false;
    a.resize(N);
    a[1] = 1.0;
    std::size_t pi = 0;
    for (std::uint64_t n = 2; n < N; ++n) {
      const std::uint32_t p = spf_[n];
      a[n] = p == n ? unit_phase(t, lnp_[pi++]) : a[p] * a[n / p];
    }
    const auto slots = static_cast<std::size_t>(K_ + 1);
    std::vector<ComplexCompensatedSum> total(slots);
    std::vector<cplx> block(slots);
    for (std::uint64_t lo = 1; lo < N; lo += 4096) {
      std::fill(block.begin(), block.end(), cplx(0.0));
      const std::uint64_t hi = std::min(N, lo + 4096);
      for (std::uint64_t n = lo; n < hi; ++n) {
        double vr = a[n].real() * base_[n];
        double vi = a[n].imag() * base_[n];
        const double st = step_[n];
        for (std::size_t k = 0; k < slots; ++k) {
          block[k] += cplx(vr, vi);
          vr *= st;
          vi *= st;
        }
      }
      for (std::size_t k = 0; k < slots; ++k) total[k].add(block[k]);
    }
    out.resize(slots);
    const long double lnN = std::log(static_cast<long double>(N));
    const cplx phase = unit_phase(t, lnN);
    for (std::size_t k = 0; k < slots; ++k) {
      const cplx s(sigma(static_cast<int>(k)), t);
      const cplx Nms = std::exp(-s.real() * static_cast<double>(lnN)) * phase;
      const Tail tail = em_tail(s, static_cast<double>(N), Nms, tol);
      if (!tail.ok) return false;
      total[k].add(tail.value);
      out[k] = total[k].value();
    }
    return true;
  }

 private:
  double sigma_lo_, h_;
  int K_;
  std::uint64_t N_max_;
  std::vector<std::uint32_t> spf_;
  std::vector<long double> lnp_;
  std::vector<double> base_, step_;
};

}  // namespace

cplx zeta_eval(cplx s, int digits) { return zeta_em(s, digits).value; }

EmParams zeta_em_params(cplx s, int digits) { return zeta_em(s, digits).params; }

TrackedLog log_zeta_tracked(double sigma, double t, double step,
                            int max_halvings) {
  require(sigma > 0.5, "log_zeta_tracked needs sigma > 1/2");
  require(step > 0.0 && step <= 1.0, "step must be in (0, 1]");
  require(max_halvings >= 0, "max_halvings must be >= 0");
  const int digits = 14;
  const double start = std::max(3.0, sigma);
  cplx z = zeta_eval({start, t}, digits);
  TrackedLog out;
  out.value = std::log(z);
  const int steps = static_cast<int>(std::ceil((start - sigma) / step - 1e-12));
  double s_prev = start;
  for (int k = 1; k <= steps; ++k) {
    const double s_next = k == steps ? sigma : start - (start - sigma) * k / steps;
    if (!stitch(out.value, z, s_prev, s_next, t, max_halvings, digits)) {
      return out;
    }
    z = zeta_eval({s_next, t}, digits);
    s_prev = s_next;
  }
  out.ok = true;
  return out;
}

ZetaRun zeta_run(const ZetaRunConfig& config) {
  require(config.T >= 1e3, "T must be >= 1e3");
  require(2.0 * config.T <= kMaxZetaHeight, "2T exceeds the 1e9 envelope");
  require(config.theta > 0.0 && config.theta < 0.5, "theta must be in (0, 1/2)");
  require(config.n >= 1, "need at least one sample");
  require(config.workers >= 1, "workers must be >= 1");
  require(config.step > 0.0 && config.step <= 0.5, "step must be in (0, 0.5]");
  require(config.digits >= 4 && config.digits <= 13, "digits must be in 4..13");
  require(config.max_excluded_fraction >= 0.0 && config.max_excluded_fraction < 1.0,
          "max_excluded_fraction must be in [0, 1)");

  ZetaRun run;
  run.config = config;
  const double logT = std::log(config.T);
  run.sigma = sigma_T(config.theta, logT);
  run.psi = psi_jT(builtin_spec("zeta"), config.theta, logT)[0];

  const double top = std::max(kBranchSafe, run.sigma);
  const int K = std::max(1, static_cast<int>(std::ceil((top - run.sigma) / config.step)));
  const double h = (top - run.sigma) / K;
  for (int k = 0; k <= K; ++k) run.sigma_grid.push_back(run.sigma + h * k);
  run.em_N_max = em_length({top, 2.0 * config.T});
  const ZetaLine line(run.sigma, h, K, run.em_N_max);
  const double tol = std::pow(10.0, -config.digits);

  run.samples.resize(config.n);
  const auto key = Philox4x32::key_from_seed(config.seed);
  constexpr std::uint64_t kBlock = 16;
  const std::uint64_t blocks = (config.n + kBlock - 1) / kBlock;
  auto work = [&](std::uint64_t blk) {
    std::vector<cplx> a, z;
    for (std::uint64_t i = blk * kBlock; i < std::min(config.n, (blk + 1) * kBlock); ++i) {
      const auto r = Philox4x32::generate(
          {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32), 0,
           kZetaStream},
          key);
      ZetaSample& out = run.samples[i];
      out.t = config.T * (1.0 + Philox4x32::to_unit(r[0], r[1]));
      out.excluded = true;
      if (!line.eval(out.t, a, z, tol)) continue;
      cplx L = std::log(z[static_cast<std::size_t>(K)]);
      bool ok = true;
      for (int k = K - 1; k >= 0 && ok; --k) {
        const cplx zk = z[static_cast<std::size_t>(k)];
        const cplx zu = z[static_cast<std::size_t>(k + 1)];
        if (zk == 0.0) {
          ok = false;
        } else {
          const cplx d = std::log(zk / zu);
          if (std::fabs(d.imag()) < kPi / 2) {
            L += d;
          } else {
            // Refine this step with independent evaluations.
            const int digits = std::min(14, config.digits + 1);
            ok = stitch(L, zu, run.sigma_grid[static_cast<std::size_t>(k + 1)],
                        run.sigma_grid[static_cast<std::size_t>(k)], out.t, 10,
                        digits);
          }
        }
      }
      if (!ok) continue;
      out.log_abs = L.real();
      out.arg = L.imag();
      out.excluded = false;
    }
  };
  if (config.workers <= 1 || blocks <= 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) work(b);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    const auto nw = std::min<std::uint64_t>(static_cast<std::uint64_t>(config.workers), blocks);
    for (std::uint64_t w = 0; w < nw; ++w) {
      pool.emplace_back([&] {
        for (std::uint64_t b = next++; b < blocks; b = next++) work(b);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (const auto& s : run.samples) run.excluded += s.excluded ? 1 : 0;
  if (static_cast<double>(run.excluded) >
      config.max_excluded_fraction * static_cast<double>(config.n)) {
    std::ostringstream msg;
    msg << "zeta run excluded " << run.excluded << " of " << config.n
        << " samples (argument continuation failed); limit "
        << config.max_excluded_fraction;
    throw NumericalError(msg.str());
  }
  return run;
}

PhiEstimate empirical_Phi(const ZetaRun& run, const Rectangle& rect) {
  rect.validate();
  require(rect.J() == 1, "zeta runs are one-dimensional");
  require(run.samples.size() >= 1000, "empirical_Phi needs at least 1e3 points");
  const double scale = 1.0 / std::sqrt(kPi * run.psi);
  std::uint64_t kept = 0, hits = 0;
  for (const auto& s : run.samples) {
    if (s.excluded) continue;
    ++kept;
    const double re = s.log_abs * scale, im = s.arg * scale;
    if (rect.contains(&re, &im)) ++hits;
  }
  require(kept > 0, "every sample was excluded");
  PhiEstimate e;
  const double n = static_cast<double>(kept);
  e.estimate = static_cast<double>(hits) / n;
  e.std_error = std::sqrt(e.estimate * (1.0 - e.estimate) / n);
  e.excluded = run.excluded;
  return e;
}

PhiEstimate empirical_Phi(double T, double theta, const Rectangle& rect,
                          std::uint64_t n, std::uint64_t seed, int workers) {
  require(n >= 1000, "empirical_Phi needs at least 1e3 points");
  ZetaRunConfig cfg;
  cfg.T = T;
  cfg.theta = theta;
  cfg.n = n;
  cfg.seed = seed;
  cfg.workers = workers;
  return empirical_Phi(zeta_run(cfg), rect);
}

ZetaSummary summarize(const ZetaRun& run) {
  ZetaSummary s;
  s.n = run.samples.size();
  s.excluded = run.excluded;
  s.psi = run.psi;
  std::vector<double> re, im;
  for (const auto& x : run.samples) {
    if (x.excluded) continue;
    re.push_back(x.log_abs);
    im.push_back(x.arg);
  }
  require(re.size() >= 2, "summary needs at least two retained samples");
  const Moments mr = sample_moments(re);
  const Moments mi = sample_moments(im);
  s.mean_log_abs = mr.mean;
  s.mean_std_error = mr.mean_std_error;
  s.var_log_abs = mr.variance;
  s.var_arg = mi.variance;
  const double scale = 1.0 / std::sqrt(kPi * run.psi);
  for (double& v : re) v *= scale;
  s.ks_real = ks_distance(std::move(re), leading_gaussian_cdf);
  return s;
}

std::string zeta_run_csv(const ZetaRun& run) {
  std::ostringstream out;
  out << "t,log_abs,arg,flags\n";
  for (const auto& s : run.samples) {
    out << fmt17(s.t) << ',' << fmt17(s.log_abs) << ',' << fmt17(s.arg) << ','
        << (s.excluded ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace lclt
