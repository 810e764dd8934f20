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

#include "lclt/table_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "lclt/errors.hpp"

namespace lclt {
namespace {

using nlohmann::ordered_json;

constexpr const char* kFormat = "lclt-coeff-table";
constexpr int kVersion = 1;

ordered_json num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double from_num(const ordered_json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw ValidationError("bad number in table: " + s);
  }
  return j.get<double>();
}

}  // namespace

std::string coeff_table_to_json(const CoeffTable& t, const Envelope* envelope) {
  ordered_json j;
  j["format"] = kFormat;
  j["version"] = kVersion;
  j["spec"] = t.spec_label;
  j["J"] = t.J;
  j["N"] = t.N;
  j["theta"] = t.theta;
  j["logT"] = t.logT;
  j["sigmaT"] = t.sigmaT;
  ordered_json cfg;
  cfg["N"] = t.config.N;
  cfg["P_max"] = t.config.P_max;
  cfg["tol"] = t.config.tol;
  cfg["n3_sigma_mode"] = to_string(t.config.n3_sigma_mode);
  cfg["delta1"] = t.config.delta1;
  cfg["delta2"] = t.config.delta2;
  cfg["delta3"] = t.config.delta3;
  cfg["delta4"] = t.config.delta4;
  cfg["workers"] = t.config.workers;
  cfg["tail_completion"] = t.config.tail_completion;
  j["config"] = cfg;
  j["psi"] = t.psi;
  ordered_json C = ordered_json::array();
  for (const auto& c : t.C) C.push_back({c.real(), c.imag()});
  j["C"] = C;
  ordered_json tb = ordered_json::array();
  for (double v : t.tail_bounds) tb.push_back(num(v));
  j["tail_bounds"] = tb;
  j["max_imag_residue"] = t.max_imag_residue;
  j["primes"] = t.primes;
  if (envelope != nullptr) {
    ordered_json e;
    e["degenerate"] = envelope->degenerate;
    e["points"] = envelope->points;
    e["fit_C"] = envelope->fit_C;
    e["fit_r"] = envelope->fit_r;
    e["raw_violation"] = envelope->raw_violation;
    e["cover_C"] = envelope->cover_C;
    e["max_violation"] = envelope->max_violation;
    j["envelope"] = e;
  }
  const MonomialBasis& B = t.basis();
  ordered_json b = ordered_json::array();
  for (std::size_t i = 0; i < B.size(); ++i) {
    const int* e = B.exponents(i);
    ordered_json rec;
    rec["k"] = std::vector<int>(e, e + t.J);
    rec["l"] = std::vector<int>(e + t.J, e + 2 * t.J);
    rec["value"] = t.b[i];
    b.push_back(rec);
  }
  j["b"] = b;
  return j.dump(1) + "\n";
}

CoeffTable coeff_table_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ValidationError(std::string("coefficient table is not JSON: ") + e.what());
  }
  try {
    require(j.at("format") == kFormat, "not a coefficient table");
    require(j.at("version") == kVersion, "unsupported table version");
    CoeffTable t;
    t.spec_label = j.at("spec").get<std::string>();
    t.J = j.at("J").get<int>();
    t.N = j.at("N").get<int>();
    require(t.J >= 1 && t.N >= 0, "bad table shape");
    t.theta = j.at("theta").get<double>();
    t.logT = j.at("logT").get<double>();
    t.sigmaT = j.at("sigmaT").get<double>();
    const auto& cfg = j.at("config");
    t.config.N = cfg.at("N").get<int>();
    t.config.P_max = cfg.at("P_max").get<std::uint64_t>();
    t.config.tol = cfg.at("tol").get<double>();
    t.config.n3_sigma_mode =
        sigma_mode_from_string(cfg.at("n3_sigma_mode").get<std::string>());
    t.config.delta1 = cfg.at("delta1").get<double>();
    t.config.delta2 = cfg.at("delta2").get<double>();
    t.config.delta3 = cfg.at("delta3").get<double>();
    t.config.delta4 = cfg.at("delta4").get<double>();
    t.config.workers = cfg.at("workers").get<int>();
    t.config.tail_completion = cfg.at("tail_completion").get<bool>();
    t.psi = j.at("psi").get<std::vector<double>>();
    for (const auto& c : j.at("C")) {
      t.C.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
    }
    for (const auto& v : j.at("tail_bounds")) t.tail_bounds.push_back(from_num(v));
    t.max_imag_residue = j.at("max_imag_residue").get<double>();
    t.primes = j.at("primes").get<std::uint64_t>();
    require(t.psi.size() == static_cast<std::size_t>(t.J), "psi length != J");
    require(t.C.size() == static_cast<std::size_t>(t.J * t.J), "C size != J*J");
    const MonomialBasis& B = t.basis();
    t.b.assign(B.size(), 0.0);
    for (const auto& rec : j.at("b")) {
      const auto k = rec.at("k").get<std::vector<int>>();
      const auto l = rec.at("l").get<std::vector<int>>();
      const auto i = B.index_of(k, l);
      require(i >= 0, "b record outside the degree cutoff");
      t.b[static_cast<std::size_t>(i)] = rec.at("value").get<double>();
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed coefficient table: ") + e.what());
  }
}

void write_coeff_table(const std::string& path, const CoeffTable& t,
                       const Envelope* envelope) {
  std::ofstream f(path, std::ios::binary);
  require(f.good(), "cannot write " + path);
  f << coeff_table_to_json(t, envelope);
}

CoeffTable read_coeff_table(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  require(f.good(), "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return coeff_table_from_json(ss.str());
}

}  // namespace lclt
