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

#include "lclt/lfunction.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "lclt/errors.hpp"
#include "lclt/primes.hpp"
#include "lclt/summation.hpp"

namespace lclt {
namespace {

LComponent zeta_component() {
  LComponent c;
  c.label = "zeta";
  c.kind = LComponent::Kind::kZeta;
  return c;
}

LComponent character_component(const std::string& label, std::uint32_t q,
                               std::vector<cplx> values) {
  LComponent c;
  c.label = label;
  c.kind = LComponent::Kind::kCharacter;
  c.modulus = q;
  c.values = std::move(values);
  return c;
}

LComponent builtin_component(const std::string& name) {
  if (name == "zeta") return zeta_component();
  if (name == "chi3") return character_component("chi3", 3, {0.0, 1.0, -1.0});
  if (name == "chi4") {
    return character_component("chi4", 4, {0.0, 1.0, 0.0, -1.0});
  }
  throw ValidationError("unknown built-in L-function: " + name);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ValidationError("line " + std::to_string(line) + ": not a number: '" +
                        s + "'");
}

// "re" or "re:im".
cplx parse_complex(const std::string& raw, int line) {
  const std::string s = trim(raw);
  const auto colon = s.find(':');
  if (colon == std::string::npos) return {parse_double(s, line), 0.0};
  return {parse_double(trim(s.substr(0, colon)), line),
          parse_double(trim(s.substr(colon + 1)), line)};
}

std::vector<cplx> parse_complex_list(const std::string& s, int line) {
  std::vector<cplx> out;
  for (const auto& item : split(s, ',')) out.push_back(parse_complex(item, line));
  return out;
}

// |beta(p^m)| <= (d/m) p^{m eta}; with s = sigma - eta this bounds what
// psi_exact leaves out beyond (P, M).
double psi_tail_bound_far(double d, double s, double P) {
  const double near = d * d * prime_power_sum_tail_bound(2.0 * s, P);
  const double a = 4.0 * s;
  const double far = 0.25 * d * d * std::pow(P, 1.0 - a) / (a - 1.0) /
                     (1.0 - std::pow(P, -2.0 * s));
  return near + far;
}

}  // namespace

void LFunctionSpec::roots(int j, std::uint64_t p, cplx* out) const {
  require(j >= 0 && j < J(), "component index out of range");
  const LComponent& c = components[static_cast<std::size_t>(j)];
  std::fill(out, out + d, cplx(0.0, 0.0));
  switch (c.kind) {
    case LComponent::Kind::kZeta:
      out[0] = 1.0;
      break;
    case LComponent::Kind::kCharacter:
      out[0] = c.values[p % c.modulus];
      break;
    case LComponent::Kind::kRoots: {
      const auto it = c.prime_roots.find(p);
      const auto& r = it == c.prime_roots.end() ? c.default_roots : it->second;
      std::copy(r.begin(), r.end(), out);
      break;
    }
    case LComponent::Kind::kCallback:
      c.callback(p, out);
      break;
  }
}

cplx LFunctionSpec::alpha(int j, int i, std::uint64_t p) const {
  require(i >= 0 && i < d, "root index out of range");
  std::vector<cplx> r(static_cast<std::size_t>(d));
  roots(j, p, r.data());
  return r[static_cast<std::size_t>(i)];
}

void LFunctionSpec::validate() const {
  require(J() >= 1, "spec needs at least one L-function");
  require(d >= 1, "degree must be >= 1");
  require(eta >= 0.0 && eta < 0.5, "eta must lie in [0, 1/2)");
  for (const auto& c : components) {
    require(c.xi > 0.0, "xi must be positive for " + c.label);
    switch (c.kind) {
      case LComponent::Kind::kZeta:
        break;
      case LComponent::Kind::kCharacter:
        require(c.modulus >= 1, "character modulus must be >= 1");
        require(c.values.size() == c.modulus,
                "character table of " + c.label + " needs modulus entries");
        break;
      case LComponent::Kind::kRoots:
        require(c.default_roots.size() <= static_cast<std::size_t>(d),
                "more default roots than the degree for " + c.label);
        for (const auto& [p, r] : c.prime_roots) {
          require(r.size() <= static_cast<std::size_t>(d),
                  "more roots than the degree at p=" + std::to_string(p));
        }
        break;
      case LComponent::Kind::kCallback:
        require(static_cast<bool>(c.callback), "missing root callback");
        break;
    }
  }
}

bool is_builtin_selector(const std::string& selector) {
  if (selector == "chars34") return true;
  for (const auto& part : split(selector, ',')) {
    const auto t = trim(part);
    if (t != "zeta" && t != "chi3" && t != "chi4") return false;
  }
  return !selector.empty();
}

LFunctionSpec builtin_spec(const std::string& selector) {
  LFunctionSpec spec;
  spec.name = selector;
  spec.d = 1;
  spec.eta = 0.0;
  if (selector == "chars34") {
    spec.components = {builtin_component("chi3"), builtin_component("chi4")};
    return spec;
  }
  for (const auto& part : split(selector, ',')) {
    spec.components.push_back(builtin_component(trim(part)));
  }
  require(!spec.components.empty(), "empty spec selector");
  return spec;
}

LFunctionSpec parse_spec(const std::string& text) {
  LFunctionSpec spec;
  spec.name = "custom";
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  LComponent* cur = nullptr;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(raw.substr(0, raw.find('#')));
    if (s.empty()) continue;
    if (s == "[L]") {
      spec.components.emplace_back();
      cur = &spec.components.back();
      cur->label = "L" + std::to_string(spec.components.size());
      cur->kind = LComponent::Kind::kRoots;
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("line " + std::to_string(line) +
                            ": expected key = value");
    }
    const std::string key = trim(s.substr(0, eq));
    const std::string val = trim(s.substr(eq + 1));
    if (cur == nullptr) {
      if (key == "name") {
        spec.name = val;
      } else if (key == "degree" || key == "d") {
        spec.d = static_cast<int>(parse_double(val, line));
      } else if (key == "eta") {
        spec.eta = parse_double(val, line);
      } else {
        throw ValidationError("line " + std::to_string(line) +
                              ": unknown family key '" + key + "'");
      }
      continue;
    }
    if (key == "label") {
      cur->label = val;
    } else if (key == "xi") {
      cur->xi = parse_double(val, line);
    } else if (key == "kind") {
      if (val == "zeta") {
        cur->kind = LComponent::Kind::kZeta;
      } else if (val == "character") {
        cur->kind = LComponent::Kind::kCharacter;
      } else if (val == "roots") {
        cur->kind = LComponent::Kind::kRoots;
      } else {
        throw ValidationError("line " + std::to_string(line) +
                              ": unknown kind '" + val + "'");
      }
    } else if (key == "modulus") {
      cur->modulus = static_cast<std::uint32_t>(parse_double(val, line));
    } else if (key == "values") {
      cur->values = parse_complex_list(val, line);
    } else if (key == "roots.default") {
      cur->default_roots = parse_complex_list(val, line);
    } else if (key.rfind("roots.", 0) == 0) {
      const double p = parse_double(key.substr(6), line);
      require(p >= 2 && p == std::floor(p),
              "line " + std::to_string(line) + ": bad prime in key");
      cur->prime_roots[static_cast<std::uint64_t>(p)] =
          parse_complex_list(val, line);
    } else {
      throw ValidationError("line " + std::to_string(line) +
                            ": unknown component key '" + key + "'");
    }
  }
  spec.validate();
  return spec;
}

LFunctionSpec load_spec_file(const std::string& path) {
  std::ifstream f(path);
  require(f.good(), "cannot open spec file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_spec(ss.str());
}

LFunctionSpec resolve_spec(const std::string& selector) {
  if (is_builtin_selector(selector)) return builtin_spec(selector);
  return load_spec_file(selector);
}

void beta_powers(const LFunctionSpec& spec, int j, std::uint64_t p, int M,
                 cplx* out) {
  require(M >= 1, "power cutoff must be >= 1");
  const auto d = static_cast<std::size_t>(spec.d);
  cplx r[16];
  std::vector<cplx> big;
  cplx* roots = r;
  if (d > 16) {
    big.resize(d);
    roots = big.data();
  }
  spec.roots(j, p, roots);
  cplx pw[16];
  std::vector<cplx> big_pw;
  cplx* powers = pw;
  if (d > 16) {
    big_pw.assign(roots, roots + d);
    powers = big_pw.data();
  } else {
    std::copy(roots, roots + d, powers);
  }
  for (int m = 1; m <= M; ++m) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      s += powers[i];
      powers[i] *= roots[i];
    }
    out[m - 1] = s / static_cast<double>(m);
  }
}

cplx beta(const LFunctionSpec& spec, int j, std::uint64_t p, int k) {
  require(k >= 1, "beta needs k >= 1");
  require(j >= 0 && j < spec.J(), "component index out of range");
  std::vector<cplx> out(static_cast<std::size_t>(k));
  beta_powers(spec, j, p, k, out.data());
  return out.back();
}

double sigma_T(double theta, double logT) {
  require(theta > 0.0 && theta < 0.5, "theta must lie in (0, 1/2)");
  require(logT > 1.0, "logT must exceed 1");
  return 0.5 + std::pow(logT, -theta);
}

std::vector<double> psi_jT(const LFunctionSpec& spec, double theta,
                           double logT) {
  require(logT > std::exp(1.0), "psi needs logT > e");
  require(theta >= 0.0, "theta must be nonnegative");
  std::vector<double> psi;
  for (const auto& c : spec.components) {
    psi.push_back(c.xi * theta * std::log(logT));
  }
  return psi;
}

ScaleParams make_scale(const LFunctionSpec& spec, double theta, double logT) {
  ScaleParams s;
  s.theta = theta;
  s.logT = logT;
  s.sigmaT = sigma_T(theta, logT);
  s.psi = psi_jT(spec, theta, logT);
  return s;
}

std::vector<PsiExact> psi_exact(const LFunctionSpec& spec, double sigma,
                                std::uint64_t P, int M) {
  require(sigma > 0.5, "psi_exact needs sigma > 1/2");
  require(P >= 2, "psi_exact needs P >= 2");
  require(M >= 1, "psi_exact needs M >= 1");
  const double s = sigma - spec.eta;
  require(s > 0.5, "psi_exact needs sigma - eta > 1/2");
  const int J = spec.J();
  const double d = spec.d;
  std::vector<CompensatedSum> sums(static_cast<std::size_t>(J));
  CompensatedSum near_m_tail;
  std::vector<cplx> b(static_cast<std::size_t>(M));
  for_each_prime_segment(0, P, [&](std::span<const std::uint32_t> ps) {
    for (std::uint32_t p : ps) {
      const double x = std::pow(static_cast<double>(p), -2.0 * sigma);
      for (int j = 0; j < J; ++j) {
        beta_powers(spec, j, p, M, b.data());
        double xm = x;
        CompensatedSum& acc = sums[static_cast<std::size_t>(j)];
        for (int m = 0; m < M && xm > 0.0; ++m) {
          acc.add(std::norm(b[static_cast<std::size_t>(m)]) * xm);
          xm *= x;
        }
      }
      const double y = std::pow(static_cast<double>(p), -2.0 * s);
      near_m_tail.add(d * d / ((M + 1.0) * (M + 1.0)) * std::pow(y, M + 1) /
                      (1.0 - y));
    }
  });
  const double tail =
      psi_tail_bound_far(d, s, static_cast<double>(P)) + near_m_tail.value();
  std::vector<PsiExact> out;
  for (const auto& acc : sums) out.push_back({acc.value(), tail});
  return out;
}

double beta_square_tail_bound(const LFunctionSpec& spec, double sigma,
                              double P) {
  const double s = sigma - spec.eta;
  require(s > 0.5, "tail bound needs sigma - eta > 1/2");
  require(P >= 2.0, "tail bound needs P >= 2");
  return psi_tail_bound_far(spec.d, s, P);
}

double growth_ratio(const LFunctionSpec& spec, std::uint64_t P) {
  double worst = 0.0;
  std::vector<cplx> r(static_cast<std::size_t>(spec.d));
  for (std::uint32_t p : primes_up_to(P)) {
    const double scale = std::pow(static_cast<double>(p), -spec.eta);
    for (int j = 0; j < spec.J(); ++j) {
      spec.roots(j, p, r.data());
      for (const auto& a : r) worst = std::max(worst, std::abs(a) * scale);
    }
  }
  return worst;
}

double ramanujan_sum(const LFunctionSpec& spec, int j, std::uint64_t x) {
  CompensatedSum acc;
  std::vector<cplx> r(static_cast<std::size_t>(spec.d));
  for (std::uint32_t p : primes_up_to(x)) {
    spec.roots(j, p, r.data());
    for (const auto& a : r) acc.add(std::norm(a));
  }
  return acc.value();
}

}  // namespace lclt
