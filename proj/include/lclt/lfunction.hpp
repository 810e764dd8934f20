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

// Families of L-functions given by their Euler-product local roots, and the
// scale parameters sigma_T and psi_{j,T}.
//
// Indices j (component) and i (root) are zero-based throughout the C++ API.

#ifndef LCLT_LFUNCTION_HPP_
#define LCLT_LFUNCTION_HPP_

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace lclt {

using cplx = std::complex<double>;

// One member L_j of the family.
struct LComponent {
  enum class Kind { kZeta, kCharacter, kRoots, kCallback };

  std::string label;
  double xi = 1.0;
  Kind kind = Kind::kZeta;

  // kCharacter: values[n mod modulus].
  std::uint32_t modulus = 1;
  std::vector<cplx> values;

  // kRoots: default roots, with optional per-prime overrides. Lists shorter
  // than the family degree are padded with zero roots.
  std::vector<cplx> default_roots;
  std::map<std::uint64_t, std::vector<cplx>> prime_roots;

  // kCallback: writes d roots for the prime p.
  std::function<void(std::uint64_t p, cplx* out)> callback;
};

struct LFunctionSpec {
  std::string name;
  int d = 1;
  double eta = 0.0;
  std::vector<LComponent> components;

  int J() const { return static_cast<int>(components.size()); }

  // Writes alpha_{j,0..d-1}(p) into out.
  void roots(int j, std::uint64_t p, cplx* out) const;
  cplx alpha(int j, int i, std::uint64_t p) const;

  // Throws ValidationError unless J >= 1, d >= 1, 0 <= eta < 1/2, xi_j > 0
  // and every component is well formed.
  void validate() const;
};

// Built-in families: "zeta", "chi3", "chi4", "chars34" (chi3 and chi4
// jointly), or a comma list of the single-component names.
LFunctionSpec builtin_spec(const std::string& selector);
bool is_builtin_selector(const std::string& selector);

// Parses the key-value spec format (see README). Throws ValidationError with
// a line number on malformed input.
LFunctionSpec parse_spec(const std::string& text);
LFunctionSpec load_spec_file(const std::string& path);
// Built-in selector, else a file path.
LFunctionSpec resolve_spec(const std::string& selector);

// beta_{L_j}(p^k) = (1/k) sum_i alpha_{j,i}(p)^k, k >= 1.
cplx beta(const LFunctionSpec& spec, int j, std::uint64_t p, int k);
// beta(p^m) for m = 1..M, written to out[0..M-1].
void beta_powers(const LFunctionSpec& spec, int j, std::uint64_t p, int M,
                 cplx* out);

double sigma_T(double theta, double logT);
std::vector<double> psi_jT(const LFunctionSpec& spec, double theta,
                           double logT);

struct ScaleParams {
  double theta = 0.0;
  double logT = 0.0;
  double sigmaT = 0.0;
  std::vector<double> psi;
};
ScaleParams make_scale(const LFunctionSpec& spec, double theta, double logT);

struct PsiExact {
  double value = 0.0;
  double tail_bound = 0.0;
};
// Diagonal sums sum_{p <= P} sum_{m <= M} |beta_j(p^m)|^2 p^{-2 m sigma}, one
// per component, with a rigorous bound on everything dropped.
std::vector<PsiExact> psi_exact(const LFunctionSpec& spec, double sigma,
                                std::uint64_t P, int M);

// Bound on sum_{p > P} sum_{m >= 1} |beta_j(p^m)|^2 p^{-2 m sigma} valid for
// every j, from |beta(p^m)| <= (d/m) p^{m eta}. Needs sigma - eta > 1/2.
double beta_square_tail_bound(const LFunctionSpec& spec, double sigma,
                              double P);

// Largest observed |alpha_{j,i}(p)| / p^eta over p <= P (<= 1 when A1 holds).
double growth_ratio(const LFunctionSpec& spec, std::uint64_t P);
// sum_{p <= x} sum_i |alpha_{j,i}(p)|^2.
double ramanujan_sum(const LFunctionSpec& spec, int j, std::uint64_t x);

}  // namespace lclt

#endif  // LCLT_LFUNCTION_HPP_
