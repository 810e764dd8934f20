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

#include "lclt/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>
#include <sstream>
#include <thread>

#include "lclt/errors.hpp"
#include "lclt/local_moments.hpp"
#include "lclt/philox.hpp"
#include "lclt/primes.hpp"
#include "lclt/summation.hpp"

namespace lclt {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::uint32_t kAngleStream = 0x414e474c;  // "ANGL"
constexpr std::uint32_t kBandStream = 0x42414e44;   // "BAND"
constexpr char kMagic[8] = {'L', 'C', 'L', 'T', 'M', 'C', '0', '1'};
constexpr std::uint64_t kSampleBlock = 256;
constexpr std::size_t kLanes = 8;

// e^{2 pi i u} for u = bits 2^-53 (bits < 2^53): a table for the top ten
// bits times a Taylor polynomial in the remaining angle (< 2 pi / 1024).
// Pure arithmetic, so angles do not depend on the platform's libm.
struct UnitCircle {
  std::array<double, 1024> c{}, s{};
  UnitCircle() {
    for (std::size_t k = 0; k < 1024; ++k) {
      const long double a = 2.0L * std::numbers::pi_v<long double> *
                            static_cast<long double>(k) / 1024.0L;
      c[k] = static_cast<double>(std::cos(a));
      s[k] = static_cast<double>(std::sin(a));
    }
  }
};

const UnitCircle& unit_circle() {
  static const UnitCircle table;
  return table;
}

inline void circle_point(std::uint64_t bits, const UnitCircle& T, double& c,
                         double& s) {
  const std::size_t k = static_cast<std::size_t>(bits >> 43);
  const double d = kTwoPi * static_cast<double>(bits & ((1ull << 43) - 1)) * 0x1.0p-53;
  const double d2 = d * d;
  const double cd = 1.0 - d2 * (0.5 - d2 * (1.0 / 24 - d2 * (1.0 / 720)));
  const double sd = d * (1.0 - d2 * (1.0 / 6 - d2 * (1.0 / 120 - d2 * (1.0 / 5040))));
  c = T.c[k] * cd - T.s[k] * sd;
  s = T.s[k] * cd + T.c[k] * sd;
}

// Local sums of all primes <= P_MC, flattened: prime t, component j has
// coefficients coef[off[t] * J + j * M[t] + m], m < M[t].
struct PrimeTable {
  int J = 1;
  std::vector<std::uint32_t> M;
  std::vector<std::size_t> off;
  std::vector<cplx> coef;
};

PrimeTable build_table(const LFunctionSpec& spec, double sigma,
                       std::uint64_t P, double tol) {
  PrimeTable tab;
  tab.J = spec.J();
  std::size_t at = 0;
  for (std::uint32_t p : primes_up_to(P)) {
    int M = 0;
    std::vector<LocalFactorPoly> g;
    for (int j = 0; j < tab.J; ++j) {
      g.push_back(g_poly(spec, j, p, sigma, tol));
      M = std::max(M, g.back().M);
    }
    tab.M.push_back(static_cast<std::uint32_t>(M));
    tab.off.push_back(at);
    for (const auto& f : g) {
      for (int m = 0; m < M; ++m) {
        const cplx c = m < f.M ? f.c[static_cast<std::size_t>(m)] : cplx(0.0, 0.0);
        tab.coef.push_back(c);
      }
    }
    at += static_cast<std::size_t>(M) * static_cast<std::size_t>(tab.J);
  }
  return tab;
}

// Lower-triangular L with L L^H = D (Hermitian positive semidefinite);
// columns with no positive pivot are left zero.
std::vector<cplx> cholesky(const std::vector<cplx>& D, int J) {
  std::vector<cplx> L(static_cast<std::size_t>(J * J), 0.0);
  auto at = [J](int r, int c) { return static_cast<std::size_t>(r * J + c); };
  for (int c = 0; c < J; ++c) {
    double piv = D[at(c, c)].real();
    for (int k = 0; k < c; ++k) piv -= std::norm(L[at(c, k)]);
    if (piv <= 0.0) continue;
    const double lcc = std::sqrt(piv);
    L[at(c, c)] = lcc;
    for (int r = c + 1; r < J; ++r) {
      cplx v = D[at(r, c)];
      for (int k = 0; k < c; ++k) v -= L[at(r, k)] * std::conj(L[at(c, k)]);
      L[at(r, c)] = v / lcc;
    }
  }
  return L;
}

struct TailParts {
  double m1 = 0.0;  // sum_{p > P} |beta(p)|^2 p^{-2 sigma}, estimated
  double m2 = 0.0;  // the m >= 2 remainder, estimated
};

TailParts tail_parts(const LFunctionSpec& spec, int j, double sigma,
                     std::uint64_t P) {
  require(sigma > 0.5, "tail estimate needs sigma > 1/2");
  const double Pd = static_cast<double>(std::max<std::uint64_t>(P, 2));
  TailParts t;
  t.m1 = spec.components[static_cast<std::size_t>(j)].xi *
         prime_power_sum_tail_estimate(2.0 * sigma, Pd);
  t.m2 = 0.25 * spec.d * spec.d * prime_power_sum_tail_estimate(4.0 * sigma, Pd);
  return t;
}

void put(std::ofstream& f, const void* p, std::size_t n) {
  f.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
}

void get(std::ifstream& f, void* p, std::size_t n) {
  f.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
  require(static_cast<std::size_t>(f.gcount()) == n, "truncated batch file");
}

}  // namespace

std::vector<double> tail_sd(const LFunctionSpec& spec, double sigma,
                            std::uint64_t P) {
  std::vector<double> out;
  for (int j = 0; j < spec.J(); ++j) {
    const TailParts t = tail_parts(spec, j, sigma, P);
    out.push_back(std::sqrt(t.m1 + t.m2));
  }
  return out;
}

std::vector<cplx> band_covariance(const LFunctionSpec& spec, double sigma,
                                  std::uint64_t P_lo, std::uint64_t P_hi,
                                  double tol) {
  const int J = spec.J();
  std::vector<ComplexCompensatedSum> acc(static_cast<std::size_t>(J * J));
  for_each_prime_segment(P_lo, P_hi, [&](std::span<const std::uint32_t> ps) {
    for (std::uint32_t p : ps) {
      std::vector<LocalFactorPoly> g;
      for (int j = 0; j < J; ++j) g.push_back(g_poly(spec, j, p, sigma, tol));
      for (int a = 0; a < J; ++a) {
        for (int b = 0; b < J; ++b) {
          const auto& ga = g[static_cast<std::size_t>(a)].c;
          const auto& gb = g[static_cast<std::size_t>(b)].c;
          const std::size_t M = std::min(ga.size(), gb.size());
          for (std::size_t m = 0; m < M; ++m) {
            acc[static_cast<std::size_t>(a * J + b)].add(ga[m] * std::conj(gb[m]));
          }
        }
      }
    }
  });
  std::vector<cplx> D(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) D[i] = acc[i].value();
  return D;
}

SampleBatch sample_logL(const LFunctionSpec& spec, double sigma,
                        std::uint64_t P_MC, std::uint64_t n,
                        std::uint64_t seed, const McOptions& options) {
  spec.validate();
  require(sigma > 0.5, "sampling needs sigma > 1/2");
  require(P_MC >= 1000, "P_MC must be >= 1000");
  require(P_MC <= 100'000'000, "P_MC must be <= 1e8");
  require(n >= 1, "need at least one sample");
  require(options.workers >= 1, "workers must be >= 1");
  require(options.band_to == 0 || options.band_to > P_MC,
          "band must extend beyond P_MC");

  const int J = spec.J();
  SampleBatch batch;
  batch.spec_label = spec.name;
  batch.J = J;
  batch.sigma = sigma;
  batch.P_MC = P_MC;
  batch.n = n;
  batch.seed = seed;
  batch.band_to = options.band_to;
  batch.band_tail = options.band_tail;
  batch.truncation_sd = tail_sd(spec, sigma, P_MC);
  batch.samples.assign(n * static_cast<std::uint64_t>(2 * J), 0.0);

  const PrimeTable tab = build_table(spec, sigma, P_MC, options.tol);
  const std::size_t np = tab.M.size();

  std::vector<cplx> L;
  bool band = false;
  if (options.band_to > 0 || options.band_tail) {
    std::vector<cplx> D(static_cast<std::size_t>(J * J), 0.0);
    std::uint64_t reach = P_MC;
    if (options.band_to > 0) {
      D = band_covariance(spec, sigma, P_MC, options.band_to, options.tol);
      reach = options.band_to;
    }
    if (options.band_tail) {
      for (int j = 0; j < J; ++j) {
        D[static_cast<std::size_t>(j * J + j)] += tail_parts(spec, j, sigma, reach).m1;
      }
    }
    L = cholesky(D, J);
    band = true;
  }

  const auto key = Philox4x32::key_from_seed(seed);
  const std::uint64_t blocks = (n + kSampleBlock - 1) / kSampleBlock;
  // Samples are processed kLanes at a time so the independent Horner chains
  // interleave; each sample still sums its primes in ascending order.
  const UnitCircle& circle = unit_circle();
  auto work = [&](std::uint64_t blk) {
    const auto Js = static_cast<std::size_t>(J);
    std::vector<CompensatedSum> re(kLanes * Js), im(kLanes * Js);
    const std::uint64_t lo = blk * kSampleBlock;
    const std::uint64_t hi = std::min(n, lo + kSampleBlock);
    for (std::uint64_t i0 = lo; i0 < hi; i0 += kLanes) {
      const std::size_t lanes = static_cast<std::size_t>(std::min<std::uint64_t>(kLanes, hi - i0));
      std::fill(re.begin(), re.end(), CompensatedSum());
      std::fill(im.begin(), im.end(), CompensatedSum());
      std::uint32_t lo32[kLanes] = {}, hi32[kLanes] = {};
      for (std::size_t l = 0; l < kLanes; ++l) {
        lo32[l] = static_cast<std::uint32_t>(i0 + l);
        hi32[l] = static_cast<std::uint32_t>((i0 + l) >> 32);
      }
      std::array<std::uint32_t, kLanes> r[4];
      double cs[kLanes], sn[kLanes], ar[kLanes], ai[kLanes];
      for (std::size_t t = 0; t < np; t += 2) {
        Philox4x32::generate_lanes(lo32, hi32, static_cast<std::uint32_t>(t / 2),
                                   kAngleStream, key, r);
        for (std::size_t h = 0; h < 2 && t + h < np; ++h) {
          const std::size_t q = t + h;
          for (std::size_t l = 0; l < kLanes; ++l) {
            const std::uint64_t bits =
                ((static_cast<std::uint64_t>(r[2 * h][l]) << 32) | r[2 * h + 1][l]) >> 11;
            circle_point(bits, circle, cs[l], sn[l]);
          }
          const std::size_t M = tab.M[q];
          const cplx* co = &tab.coef[tab.off[q]];
          for (std::size_t j = 0; j < Js; ++j) {
            const cplx* cj = co + j * M;
            // Horner in X = c + i s, then one more factor X.
            for (std::size_t l = 0; l < kLanes; ++l) ar[l] = ai[l] = 0.0;
            for (std::size_t m = M; m-- > 0;) {
              const double kr = cj[m].real(), ki = cj[m].imag();
              for (std::size_t l = 0; l < kLanes; ++l) {
                const double nr = ar[l] * cs[l] - ai[l] * sn[l] + kr;
                ai[l] = ar[l] * sn[l] + ai[l] * cs[l] + ki;
                ar[l] = nr;
              }
            }
            for (std::size_t l = 0; l < lanes; ++l) {
              re[l * Js + j].add(ar[l] * cs[l] - ai[l] * sn[l]);
              im[l * Js + j].add(ar[l] * sn[l] + ai[l] * cs[l]);
            }
          }
        }
      }
      for (std::size_t l = 0; l < lanes; ++l) {
        const std::uint64_t i = i0 + l;
        const auto c0 = static_cast<std::uint32_t>(i);
        const auto c1 = static_cast<std::uint32_t>(i >> 32);
        if (band) {
          std::vector<cplx> w(Js);
          for (std::size_t j = 0; j < Js; ++j) {
            const auto r = Philox4x32::generate(
                {c0, c1, static_cast<std::uint32_t>(j), kBandStream}, key);
            // Box-Muller; 1 - u keeps the logarithm finite.
            const double u1 = 1.0 - Philox4x32::to_unit(r[0], r[1]);
            const double u2 = Philox4x32::to_unit(r[2], r[3]);
            const double rad = std::sqrt(-std::log(u1));  // |w|^2 ~ Exp(1)
            w[j] = {rad * std::cos(kTwoPi * u2), rad * std::sin(kTwoPi * u2)};
          }
          for (std::size_t j = 0; j < Js; ++j) {
            cplx gsum = 0.0;
            for (std::size_t k = 0; k <= j; ++k) gsum += L[j * Js + k] * w[k];
            re[l * Js + j].add(gsum.real());
            im[l * Js + j].add(gsum.imag());
          }
        }
        double* row = &batch.samples[i * static_cast<std::uint64_t>(2 * J)];
        for (std::size_t j = 0; j < Js; ++j) {
          row[2 * j] = re[l * Js + j].value();
          row[2 * j + 1] = im[l * Js + j].value();
        }
      }
    }
  };

  if (options.workers <= 1 || blocks <= 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) work(b);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    const int nw = static_cast<int>(std::min<std::uint64_t>(
        static_cast<std::uint64_t>(options.workers), blocks));
    for (int w = 0; w < nw; ++w) {
      pool.emplace_back([&] {
        for (std::uint64_t b = next++; b < blocks; b = next++) work(b);
      });
    }
    for (auto& t : pool) t.join();
  }
  return batch;
}

Estimate empirical_probability(const SampleBatch& batch, const Rectangle& rect,
                               const std::vector<double>& psi) {
  rect.validate();
  const int J = batch.J;
  require(rect.J() == J, "rectangle and batch disagree on J");
  require(static_cast<int>(psi.size()) == J, "psi must have J entries");
  require(batch.n >= 1, "empty batch");
  std::vector<double> scale(static_cast<std::size_t>(J));
  for (int j = 0; j < J; ++j) {
    require(psi[static_cast<std::size_t>(j)] > 0.0, "psi must be positive");
    scale[static_cast<std::size_t>(j)] =
        1.0 / std::sqrt(std::numbers::pi * psi[static_cast<std::size_t>(j)]);
  }
  std::vector<double> re(static_cast<std::size_t>(J)), im(static_cast<std::size_t>(J));
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < batch.n; ++i) {
    for (int j = 0; j < J; ++j) {
      re[static_cast<std::size_t>(j)] = batch.log_abs(i, j) * scale[static_cast<std::size_t>(j)];
      im[static_cast<std::size_t>(j)] = batch.arg(i, j) * scale[static_cast<std::size_t>(j)];
    }
    if (rect.contains(re.data(), im.data())) ++hits;
  }
  const double nn = static_cast<double>(batch.n);
  const double p = static_cast<double>(hits) / nn;
  return {p, std::sqrt(p * (1.0 - p) / nn)};
}

GateReport model_gate(const SampleBatch& batch, const CoeffTable& table) {
  GateReport g;
  const int J = batch.J;
  const std::uint64_t reach = batch.band_to > 0 ? batch.band_to : batch.P_MC;
  double psi_min = table.psi.empty() ? 0.0 : table.psi[0];
  for (double p : table.psi) psi_min = std::min(psi_min, p);
  g.limit = 0.02 * std::sqrt(psi_min);
  g.pass = true;
  // Only the spec's shape enters the estimates below.
  LFunctionSpec shape;
  shape.d = 1;
  for (int j = 0; j < J; ++j) shape.components.emplace_back();
  for (int j = 0; j < J; ++j) {
    const TailParts mc = tail_parts(shape, j, batch.sigma, reach);
    const TailParts ex = tail_parts(shape, j, batch.sigma, table.config.P_max);
    const double mc_missing = batch.band_tail ? mc.m2 : mc.m1 + mc.m2;
    const double ex_missing =
        table.config.tail_completion ? ex.m2 : ex.m1 + ex.m2;
    const double sd = std::sqrt(std::fabs(mc_missing - ex_missing));
    g.gap_sd.push_back(sd);
    if (!(sd <= g.limit)) g.pass = false;
  }
  return g;
}

void require_gate(const SampleBatch& batch, const CoeffTable& table) {
  if (batch.J != table.J) throw GateError("batch and table disagree on J");
  if (batch.spec_label != table.spec_label) {
    throw GateError("batch and table describe different specs");
  }
  if (std::fabs(batch.sigma - table.sigmaT) > 1e-12) {
    throw GateError("batch sigma differs from the table's sigma_T");
  }
  const GateReport g = model_gate(batch, table);
  if (!g.pass) {
    std::ostringstream msg;
    msg << "model gap too large: sd";
    for (double s : g.gap_sd) msg << ' ' << s;
    msg << " > " << g.limit << " (extend the Gaussian band to P_max)";
    throw GateError(msg.str());
  }
}

void write_batch_binary(const std::string& path, const SampleBatch& b) {
  std::ofstream f(path, std::ios::binary);
  require(f.good(), "cannot write " + path);
  put(f, kMagic, sizeof kMagic);
  const auto len = static_cast<std::uint32_t>(b.spec_label.size());
  put(f, &len, sizeof len);
  put(f, b.spec_label.data(), len);
  const auto J = static_cast<std::uint32_t>(b.J);
  put(f, &J, sizeof J);
  put(f, &b.sigma, sizeof b.sigma);
  put(f, &b.P_MC, sizeof b.P_MC);
  put(f, &b.n, sizeof b.n);
  put(f, &b.seed, sizeof b.seed);
  put(f, &b.band_to, sizeof b.band_to);
  const std::uint8_t tail = b.band_tail ? 1 : 0;
  put(f, &tail, sizeof tail);
  put(f, b.truncation_sd.data(), b.truncation_sd.size() * sizeof(double));
  put(f, b.samples.data(), b.samples.size() * sizeof(double));
  require(f.good(), "write failed: " + path);
}

SampleBatch read_batch_binary(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  require(f.good(), "cannot open " + path);
  char magic[8];
  get(f, magic, sizeof magic);
  require(std::memcmp(magic, kMagic, sizeof kMagic) == 0, "not a batch file");
  SampleBatch b;
  std::uint32_t len = 0;
  get(f, &len, sizeof len);
  require(len < 4096, "corrupt batch header");
  b.spec_label.resize(len);
  get(f, b.spec_label.data(), len);
  std::uint32_t J = 0;
  get(f, &J, sizeof J);
  require(J >= 1 && J <= 64, "corrupt batch header");
  b.J = static_cast<int>(J);
  get(f, &b.sigma, sizeof b.sigma);
  get(f, &b.P_MC, sizeof b.P_MC);
  get(f, &b.n, sizeof b.n);
  get(f, &b.seed, sizeof b.seed);
  get(f, &b.band_to, sizeof b.band_to);
  std::uint8_t tail = 0;
  get(f, &tail, sizeof tail);
  b.band_tail = tail != 0;
  b.truncation_sd.resize(J);
  get(f, b.truncation_sd.data(), J * sizeof(double));
  b.samples.resize(b.n * 2 * J);
  get(f, b.samples.data(), b.samples.size() * sizeof(double));
  return b;
}

std::string batch_csv(const SampleBatch& b) {
  std::ostringstream out;
  out << 'i';
  for (int j = 1; j <= b.J; ++j) out << ",logabs_" << j << ",arg_" << j;
  out << '\n';
  for (std::uint64_t i = 0; i < b.n; ++i) {
    out << i;
    for (int j = 0; j < b.J; ++j) {
      out << ',' << fmt17(b.log_abs(i, j)) << ',' << fmt17(b.arg(i, j));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace lclt
