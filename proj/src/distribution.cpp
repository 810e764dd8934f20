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

#include "lclt/distribution.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "lclt/errors.hpp"
#include "lclt/hermite.hpp"
#include "lclt/summation.hpp"

namespace lclt {
namespace {

constexpr double kPi = std::numbers::pi;

void check_table(const CoeffTable& t) {
  require(t.J >= 1 && t.psi.size() == static_cast<std::size_t>(t.J),
          "coefficient table has no psi");
  require(t.b.size() == t.basis().size(), "coefficient table size mismatch");
  for (double p : t.psi) require(p > 0.0, "psi must be positive");
}

std::vector<double> split_numbers(const std::string& s) {
  std::vector<double> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const auto b = item.find_first_not_of(" \t");
      const auto e = item.find_last_not_of(" \t");
      require(b != std::string::npos, "empty rectangle field");
      const std::string trimmed = item.substr(b, e - b + 1);
      out.push_back(std::stod(trimmed, &used));
      require(used == trimmed.size(), "bad rectangle field: " + item);
    } catch (const std::logic_error&) {
      throw ValidationError("bad rectangle field: " + item);
    }
  }
  return out;
}

// Per-component products over the basis: sum_i b_i prod_j f_j(k_j) g_j(l_j).
double contract(const CoeffTable& t,
                const std::vector<std::vector<double>>& f,
                const std::vector<std::vector<double>>& g, int deg_lo,
                bool absolute) {
  const MonomialBasis& B = t.basis();
  const int J = t.J;
  CompensatedSum acc;
  for (std::size_t i = B.degree_begin(deg_lo); i < B.size(); ++i) {
    const double bi = t.b[i];
    if (bi == 0.0) continue;
    const int* e = B.exponents(i);
    double term = bi;
    for (int j = 0; j < J; ++j) {
      term *= f[static_cast<std::size_t>(j)][static_cast<std::size_t>(e[j])] *
              g[static_cast<std::size_t>(j)][static_cast<std::size_t>(e[J + j])];
    }
    acc.add(absolute ? std::fabs(term) : term);
  }
  return acc.value();
}

void segment_factors(const CoeffTable& t, const Rectangle& rect,
                     std::vector<std::vector<double>>& f,
                     std::vector<std::vector<double>>& g) {
  const int J = t.J;
  f.assign(static_cast<std::size_t>(J),
           std::vector<double>(static_cast<std::size_t>(t.N + 1)));
  g = f;
  for (int j = 0; j < J; ++j) {
    const auto js = static_cast<std::size_t>(j);
    const double r = 1.0 / std::sqrt(t.psi[js]);
    double scale = 1.0;
    for (int k = 0; k <= t.N; ++k) {
      const auto ks = static_cast<std::size_t>(k);
      f[js][ks] = scale * gauss_hermite_segment(k, rect.a[js], rect.b[js]);
      g[js][ks] = scale * gauss_hermite_segment(k, rect.c[js], rect.d[js]);
      scale *= r;
    }
  }
}

}  // namespace

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void Rectangle::validate() const {
  const auto n = a.size();
  require(n >= 1 && b.size() == n && c.size() == n && d.size() == n,
          "rectangle needs a, b, c, d for every component");
  for (std::size_t j = 0; j < n; ++j) {
    require(!std::isnan(a[j]) && !std::isnan(b[j]) && !std::isnan(c[j]) &&
                !std::isnan(d[j]),
            "rectangle endpoints must not be NaN");
    require(a[j] <= b[j] && c[j] <= d[j], "rectangle needs a <= b and c <= d");
  }
}

bool Rectangle::contains(const double* re, const double* im) const {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (re[j] < a[j] || re[j] > b[j] || im[j] < c[j] || im[j] > d[j]) {
      return false;
    }
  }
  return true;
}

Rectangle Rectangle::full(int J) {
  const double inf = std::numeric_limits<double>::infinity();
  return cube(J, -inf, inf, -inf, inf);
}

Rectangle Rectangle::cube(int J, double a, double b, double c, double d) {
  const auto n = static_cast<std::size_t>(J);
  return {std::vector<double>(n, a), std::vector<double>(n, b),
          std::vector<double>(n, c), std::vector<double>(n, d)};
}

Rectangle parse_rectangle(const std::string& s) {
  Rectangle r;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ';')) {
    const auto v = split_numbers(part);
    require(v.size() == 4, "rectangle component needs a,b,c,d: " + part);
    r.a.push_back(v[0]);
    r.b.push_back(v[1]);
    r.c.push_back(v[2]);
    r.d.push_back(v[3]);
  }
  r.validate();
  return r;
}

std::string format_rectangle(const Rectangle& r) {
  std::string out;
  for (int j = 0; j < r.J(); ++j) {
    const auto js = static_cast<std::size_t>(j);
    if (j) out += ';';
    out += fmt17(r.a[js]) + ',' + fmt17(r.b[js]) + ',' + fmt17(r.c[js]) + ',' +
           fmt17(r.d[js]);
  }
  return out;
}

double density(const CoeffTable& t, const std::vector<double>& u,
               const std::vector<double>& v) {
  check_table(t);
  const int J = t.J;
  require(static_cast<int>(u.size()) == J && static_cast<int>(v.size()) == J,
          "density point must have J components");
  std::vector<std::vector<double>> f(static_cast<std::size_t>(J),
                                     std::vector<double>(static_cast<std::size_t>(t.N + 1)));
  auto g = f;
  double gauss = 1.0;
  for (int j = 0; j < J; ++j) {
    const auto js = static_cast<std::size_t>(j);
    const double psi = t.psi[js];
    const double r = std::sqrt(psi);
    hermite_all(t.N, u[js] / r, f[js].data());
    hermite_all(t.N, v[js] / r, g[js].data());
    double scale = 1.0;
    for (int k = 0; k <= t.N; ++k) {
      f[js][static_cast<std::size_t>(k)] *= scale;
      g[js][static_cast<std::size_t>(k)] *= scale;
      scale /= r;
    }
    gauss *= std::exp(-(u[js] * u[js] + v[js] * v[js]) / psi) / (kPi * psi);
  }
  return gauss * contract(t, f, g, 0, false);
}

double probability(const CoeffTable& t, const Rectangle& rect) {
  check_table(t);
  rect.validate();
  require(rect.J() == t.J, "rectangle and table disagree on J");
  std::vector<std::vector<double>> f, g;
  segment_factors(t, rect, f, g);
  return contract(t, f, g, 0, false);
}

double probability_tail_estimate(const CoeffTable& t, const Rectangle& rect) {
  check_table(t);
  rect.validate();
  require(rect.J() == t.J, "rectangle and table disagree on J");
  std::vector<std::vector<double>> f, g;
  segment_factors(t, rect, f, g);
  return contract(t, f, g, std::max(0, t.N - 1), true);
}

double gaussian_leading(const Rectangle& rect) {
  rect.validate();
  double p = 1.0;
  for (int j = 0; j < rect.J(); ++j) {
    const auto js = static_cast<std::size_t>(j);
    p *= gauss_hermite_segment(0, rect.a[js], rect.b[js]) *
         gauss_hermite_segment(0, rect.c[js], rect.d[js]);
  }
  return p;
}

cplx char_function(const CoeffTable& t, const std::vector<double>& x,
                   const std::vector<double>& y) {
  check_table(t);
  const int J = t.J;
  require(static_cast<int>(x.size()) == J && static_cast<int>(y.size()) == J,
          "point must have J components");
  double norm2 = 0.0;
  double Q = 0.0;
  for (int j = 0; j < J; ++j) {
    const auto js = static_cast<std::size_t>(j);
    const double r2 = x[js] * x[js] + y[js] * y[js];
    norm2 += r2;
    Q -= kPi * kPi * t.psi[js] * r2;
  }
  require(std::sqrt(norm2) <= t.config.delta2,
          "characteristic function requested outside ||z|| <= delta2");
  const MonomialBasis& B = t.basis();
  std::vector<cplx> sx(static_cast<std::size_t>(J * (t.N + 1)));
  auto sy = sx;
  const cplx w(0.0, 2.0 * kPi);
  for (int j = 0; j < J; ++j) {
    cplx px = 1.0, py = 1.0;
    for (int k = 0; k <= t.N; ++k) {
      sx[static_cast<std::size_t>(j * (t.N + 1) + k)] = px;
      sy[static_cast<std::size_t>(j * (t.N + 1) + k)] = py;
      px *= w * x[static_cast<std::size_t>(j)];
      py *= w * y[static_cast<std::size_t>(j)];
    }
  }
  ComplexCompensatedSum acc;
  for (std::size_t i = 0; i < B.size(); ++i) {
    if (t.b[i] == 0.0) continue;
    const int* e = B.exponents(i);
    cplx term = t.b[i];
    for (int j = 0; j < J; ++j) {
      term *= sx[static_cast<std::size_t>(j * (t.N + 1) + e[j])] *
              sy[static_cast<std::size_t>(j * (t.N + 1) + e[J + j])];
    }
    acc.add(term);
  }
  return std::exp(Q) * acc.value();
}

std::string density_grid_csv(const CoeffTable& t, double u_lo, double u_hi,
                             int nu, double v_lo, double v_hi, int nv) {
  require(nu >= 1 && nv >= 1, "grid needs at least one point per axis");
  require(u_lo <= u_hi && v_lo <= v_hi, "grid bounds out of order");
  std::ostringstream out;
  out << "u,v,density\n";
  std::vector<double> u(static_cast<std::size_t>(t.J), 0.0);
  auto v = u;
  for (int i = 0; i < nu; ++i) {
    u[0] = nu == 1 ? u_lo : u_lo + (u_hi - u_lo) * i / (nu - 1);
    for (int k = 0; k < nv; ++k) {
      v[0] = nv == 1 ? v_lo : v_lo + (v_hi - v_lo) * k / (nv - 1);
      out << fmt17(u[0]) << ',' << fmt17(v[0]) << ',' << fmt17(density(t, u, v))
          << '\n';
    }
  }
  return out.str();
}

std::string probability_csv(const std::vector<ProbabilityRow>& rows) {
  std::ostringstream out;
  out << "rect,expansion,gaussian,tail_bound\n";
  for (const auto& r : rows) {
    out << '"' << format_rectangle(r.rect) << "\"," << fmt17(r.expansion) << ','
        << fmt17(r.gaussian) << ',' << fmt17(r.tail) << '\n';
  }
  return out.str();
}

}  // namespace lclt
