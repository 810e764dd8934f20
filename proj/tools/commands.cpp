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

#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <json.hpp>

#include "lclt/distribution.hpp"
#include "lclt/errors.hpp"
#include "lclt/hermite.hpp"
#include "lclt/lfunction.hpp"
#include "lclt/montecarlo.hpp"
#include "lclt/philox.hpp"
#include "lclt/table_io.hpp"
#include "lclt/zeta.hpp"

namespace lclt::cli {
namespace {

using nlohmann::ordered_json;

constexpr const char* kCentralUnit = "-0.5,0.5,-0.5,0.5";

ordered_json config_object(const RunConfig& c) {
  ordered_json j;
  j["subcommand"] = c.subcommand;
  j["spec"] = c.spec;
  j["theta"] = c.theta;
  j["logT"] = c.logT;
  const ExpansionConfig& e = c.expansion;
  j["N"] = e.N;
  j["P_max"] = e.P_max;
  j["tol"] = e.tol;
  j["n3_sigma_mode"] = to_string(e.n3_sigma_mode);
  j["delta1"] = e.delta1;
  j["delta2"] = e.delta2;
  j["delta3"] = e.delta3;
  j["delta4"] = e.delta4;
  j["workers"] = e.workers;
  j["tail_completion"] = e.tail_completion;
  j["rects"] = c.rects;
  j["table"] = c.table_path;
  j["batch"] = c.batch_path;
  j["out"] = c.out;
  j["csv"] = c.csv_out;
  j["u_range"] = {c.u_lo, c.u_hi};
  j["v_range"] = {c.v_lo, c.v_hi};
  j["nu"] = c.nu;
  j["nv"] = c.nv;
  j["P_mc"] = c.P_MC;
  j["n"] = c.n;
  j["seed"] = c.seed;
  j["band_to"] = c.band_to;
  j["band_tail"] = c.band_tail;
  j["perturb_b"] = c.perturb_b;
  j["T"] = c.T;
  j["zeta_step"] = c.zeta_step;
  j["zeta_digits"] = c.zeta_digits;
  return j;
}

// Writes to `path`, or to `out` when path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  require(f.good(), "cannot write " + path);
  f << text;
  require(f.good(), "write failed: " + path);
}

std::string csv_with_config(const RunConfig& c, const std::string& body) {
  return "# config: " + config_json(c) + "\n" + body;
}

std::vector<Rectangle> rectangles(const RunConfig& c, int J) {
  std::vector<Rectangle> out;
  const std::vector<std::string> src =
      c.rects.empty() ? std::vector<std::string>{kCentralUnit} : c.rects;
  for (const auto& s : src) {
    Rectangle r = parse_rectangle(s);
    // A single window applies to every component.
    if (r.J() == 1 && J > 1) r = Rectangle::cube(J, r.a[0], r.b[0], r.c[0], r.d[0]);
    require(r.J() == J, "rectangle " + s + " does not have J components");
    out.push_back(r);
  }
  return out;
}

CoeffTable load_or_build_table(const RunConfig& c) {
  if (!c.table_path.empty()) return read_coeff_table(c.table_path);
  return b_table(resolve_spec(c.spec), c.theta, c.logT, c.expansion);
}

int cmd_coeffs(const RunConfig& c, std::ostream& out) {
  const CoeffTable t =
      b_table(resolve_spec(c.spec), c.theta, c.logT, c.expansion);
  const Envelope env = coefficient_envelope(t);
  ordered_json j = ordered_json::parse(coeff_table_to_json(t, &env));
  j["run_config"] = config_object(c);
  emit(c.out, j.dump(1) + "\n", out);
  return kOk;
}

int cmd_prob(const RunConfig& c, std::ostream& out) {
  const CoeffTable t = load_or_build_table(c);
  std::vector<ProbabilityRow> rows;
  for (const auto& r : rectangles(c, t.J)) {
    rows.push_back({r, probability(t, r), gaussian_leading(r),
                    probability_tail_estimate(t, r)});
  }
  emit(c.out, csv_with_config(c, probability_csv(rows)), out);
  return kOk;
}

int cmd_density_grid(const RunConfig& c, std::ostream& out) {
  const CoeffTable t = load_or_build_table(c);
  emit(c.out,
       csv_with_config(c, density_grid_csv(t, c.u_lo, c.u_hi, c.nu, c.v_lo,
                                           c.v_hi, c.nv)),
       out);
  return kOk;
}

SampleBatch sample(const RunConfig& c, double sigma) {
  McOptions o;
  o.workers = c.expansion.workers;
  o.band_to = c.band_to;
  o.band_tail = c.band_tail;
  o.tol = c.expansion.tol;
  return sample_logL(resolve_spec(c.spec), sigma, c.P_MC, c.n, c.seed, o);
}

int cmd_mc(const RunConfig& c, std::ostream& out, std::ostream& err) {
  require(!c.out.empty() || !c.csv_out.empty(),
          "mc needs --out (binary batch) and/or --csv");
  const SampleBatch b = sample(c, sigma_T(c.theta, c.logT));
  if (!c.out.empty()) write_batch_binary(c.out, b);
  if (!c.csv_out.empty()) emit(c.csv_out, csv_with_config(c, batch_csv(b)), out);
  err << "truncation_sd";
  for (double s : b.truncation_sd) err << ' ' << fmt17(s);
  err << '\n';
  return kOk;
}

int cmd_compare(const RunConfig& c, std::ostream& out, std::ostream& err) {
  CoeffTable t = load_or_build_table(c);
  const SampleBatch b =
      c.batch_path.empty() ? sample(c, t.sigmaT) : read_batch_binary(c.batch_path);
  require_gate(b, t);
  if (c.perturb_b != 0.0) {
    Exponents k(static_cast<std::size_t>(t.J), 0), l = k;
    k[0] = 2;
    t.set(k, l, t.get(k, l) + c.perturb_b);
  }
  std::ostringstream csv;
  csv << "rect,expansion,mc,stderr,absdiff,verdict\n";
  int fails = 0;
  for (const auto& r : rectangles(c, t.J)) {
    const double p = probability(t, r);
    const Estimate e = empirical_probability(b, r, t.psi);
    const double diff = std::fabs(p - e.value);
    const bool pass = diff <= std::max(4.0 * e.std_error, 0.02);
    fails += pass ? 0 : 1;
    csv << '"' << format_rectangle(r) << "\"," << fmt17(p) << ',' << fmt17(e.value)
        << ',' << fmt17(e.std_error) << ',' << fmt17(diff) << ','
        << (pass ? "PASS" : "FAIL") << '\n';
  }
  emit(c.out, csv_with_config(c, csv.str()), out);
  err << fails << " rectangle(s) FAIL\n";
  return kOk;
}

int cmd_zeta(const RunConfig& c, std::ostream& out, std::ostream& err) {
  ZetaRunConfig zc;
  zc.T = c.T;
  zc.theta = c.theta;
  zc.n = c.n;
  zc.seed = c.seed;
  zc.workers = c.expansion.workers;
  zc.step = c.zeta_step;
  zc.digits = c.zeta_digits;
  const ZetaRun run = zeta_run(zc);
  if (!c.csv_out.empty()) emit(c.csv_out, csv_with_config(c, zeta_run_csv(run)), out);
  const ZetaSummary s = summarize(run);
  ordered_json j;
  j["config"] = config_object(c);
  j["sigma"] = run.sigma;
  j["psi"] = s.psi;
  j["em_N_max"] = run.em_N_max;
  j["n"] = s.n;
  j["excluded"] = s.excluded;
  j["mean_log_abs"] = s.mean_log_abs;
  j["mean_std_error"] = s.mean_std_error;
  j["var_log_abs"] = s.var_log_abs;
  j["var_arg"] = s.var_arg;
  j["model_var"] = s.psi / 2;
  j["ks_real"] = s.ks_real;
  ordered_json rows = ordered_json::array();
  if (run.samples.size() >= 1000) {
    for (const auto& r : rectangles(c, 1)) {
      const PhiEstimate e = empirical_Phi(run, r);
      rows.push_back({{"rect", format_rectangle(r)},
                      {"estimate", e.estimate},
                      {"stderr", e.std_error},
                      {"gaussian", gaussian_leading(r)}});
    }
  }
  j["rects"] = rows;
  emit(c.out, j.dump(1) + "\n", out);
  err << "excluded " << s.excluded << " of " << s.n << '\n';
  return kOk;
}

int cmd_selftest(std::ostream& out) {
  struct Check {
    const char* name;
    std::function<bool()> run;
  };
  const std::vector<Check> checks = {
      {"philox known answer",
       [] {
         const auto r = Philox4x32::generate({0, 0, 0, 0}, {0, 0});
         return r == Philox4x32::Block{0x6627e8d5, 0xe169c58d, 0xbc57ac4c,
                                       0x9b00dbd8};
       }},
      {"zeta(2) = pi^2/6",
       [] {
         return std::abs(zeta_eval({2.0, 0.0}) - std::numbers::pi * std::numbers::pi / 6) <
                1e-14;
       }},
      {"hermite segment vs quadrature",
       [] {
         using boost::math::quadrature::gauss_kronrod;
         const double q = gauss_kronrod<double, 61>::integrate(
             [](double u) {
               return std::exp(-std::numbers::pi * u * u) *
                      hermite_eval(5, std::sqrt(std::numbers::pi) * u);
             },
             -0.7, 1.3, 10, 1e-13);
         return std::fabs(q - gauss_hermite_segment(5, -0.7, 1.3)) < 1e-10;
       }},
      {"coefficient table structure",
       [] {
         ExpansionConfig cfg;
         cfg.N = 4;
         cfg.P_max = 10'000;
         const CoeffTable t = b_table(builtin_spec("zeta"), 0.4, 1e4, cfg);
         return t.b[0] == 1.0 && t.max_imag_residue < 1e-12 &&
                std::fabs(probability(t, Rectangle::full(1)) - 1.0) < 1e-15;
       }},
  };
  bool ok = true;
  for (const auto& ch : checks) {
    const bool pass = ch.run();
    ok = ok && pass;
    out << (pass ? "PASS " : "FAIL ") << ch.name << '\n';
  }
  return ok ? kOk : kNumerical;
}

}  // namespace

std::string config_json(const RunConfig& c) { return config_object(c).dump(); }

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    c.expansion.validate();
    require(c.nu >= 1 && c.nv >= 1, "grid sizes must be positive");
    const std::string& s = c.subcommand;
    if (s == "coeffs") return cmd_coeffs(c, out);
    if (s == "prob") return cmd_prob(c, out);
    if (s == "density-grid") return cmd_density_grid(c, out);
    if (s == "mc") return cmd_mc(c, out, err);
    if (s == "compare") return cmd_compare(c, out, err);
    if (s == "zeta") return cmd_zeta(c, out, err);
    if (s == "selftest") return cmd_selftest(out);
    throw ValidationError("unknown subcommand: " + s);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const GateError& e) {
    err << "gate failure: " << e.what() << '\n';
    return kGate;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kFailure;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  RunConfig c;
  CLI::App app{"Hermite expansions for the joint value distribution of L-functions"};
  app.set_config("--config", "", "TOML/INI file with any of the long options; flags win");
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.footer(
      "CSV outputs start with one '# config: {...}' line holding the resolved run.\n"
      "  prob:         rect,expansion,gaussian,tail_bound\n"
      "  density-grid: u,v,density\n"
      "  mc --csv:     i,logabs_1,arg_1,...\n"
      "  compare:      rect,expansion,mc,stderr,absdiff,verdict\n"
      "  zeta --csv:   t,log_abs,arg,flags\n"
      "Exit codes: 0 ok, 2 invalid input, 3 numerical failure, 4 gate failure.");

  std::string sigma_mode = to_string(c.expansion.n3_sigma_mode);
  std::vector<double> u_range, v_range;
  app.add_option("--spec", c.spec, "zeta, chi3, chi4, chars34, a comma list, or a spec file")
      ->capture_default_str();
  app.add_option("--theta", c.theta, "scale exponent in (0, 1/2)")->capture_default_str();
  app.add_option("--logT", c.logT, "log T of the scale parameters")->capture_default_str();
  app.add_option("--N", c.expansion.N, "expansion degree")->capture_default_str();
  app.add_option("--P-max", c.expansion.P_max, "prime cutoff of the expansion")
      ->capture_default_str();
  app.add_option("--tol", c.expansion.tol, "local truncation tolerance")->capture_default_str();
  app.add_option("--n3-sigma", sigma_mode, "sigma of the higher cumulants: sigmaT or half")
      ->capture_default_str();
  app.add_option("--delta1", c.expansion.delta1)->capture_default_str();
  app.add_option("--delta2", c.expansion.delta2)->capture_default_str();
  app.add_option("--delta3", c.expansion.delta3, "0 = derived")->capture_default_str();
  app.add_option("--delta4", c.expansion.delta4, "0 = derived")->capture_default_str();
  app.add_option("--workers", c.expansion.workers)->capture_default_str();
  app.add_flag("--tail-completion", c.expansion.tail_completion,
               "add the estimated p > P_max variance to the quadratic form");
  app.add_option("--rect", c.rects, "a,b,c,d[;a,b,c,d...] in units of sqrt(pi psi_j)");
  app.add_option("--table", c.table_path, "coefficient table from `coeffs`");
  app.add_option("--batch", c.batch_path, "binary sample batch from `mc`");
  app.add_option("--out", c.out, "output path (default stdout)");
  app.add_option("--csv", c.csv_out, "CSV export path (mc, zeta)");
  app.add_option("--u-range", u_range, "lo,hi")->expected(2)->delimiter(',');
  app.add_option("--v-range", v_range, "lo,hi")->expected(2)->delimiter(',');
  app.add_option("--nu", c.nu)->capture_default_str();
  app.add_option("--nv", c.nv)->capture_default_str();
  app.add_option("--P-mc", c.P_MC, "prime cutoff of the sampled model")->capture_default_str();
  app.add_option("--n", c.n, "number of samples")->capture_default_str();
  app.add_option("--seed", c.seed)->capture_default_str();
  app.add_option("--band-to", c.band_to, "Gaussian band over (P_mc, band_to]; 0 = none")
      ->capture_default_str();
  app.add_flag("--band-tail", c.band_tail, "fold the p > band_to variance into the band");
  app.add_option("--perturb-b", c.perturb_b, "canary: add to b((2,0..),(0..))");
  app.add_option("--T", c.T, "height for the zeta run")->capture_default_str();
  app.add_option("--zeta-step", c.zeta_step)->capture_default_str();
  app.add_option("--zeta-digits", c.zeta_digits)->capture_default_str();

  app.add_subcommand("coeffs", "coefficient table (JSON) with envelope report");
  app.add_subcommand("prob", "rectangle probabilities (CSV)");
  app.add_subcommand("density-grid", "density on a grid over component 1 (CSV)");
  app.add_subcommand("mc", "sample the random model (binary batch, CSV)");
  app.add_subcommand("compare", "expansion vs Monte Carlo per rectangle (CSV)");
  app.add_subcommand("zeta", "empirical log zeta over [T, 2T] (JSON summary, CSV run)");
  app.add_subcommand("selftest", "quick internal checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }
  try {
    c.expansion.n3_sigma_mode = sigma_mode_from_string(sigma_mode);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
  if (u_range.size() == 2) {
    c.u_lo = u_range[0];
    c.u_hi = u_range[1];
  }
  if (v_range.size() == 2) {
    c.v_lo = v_range[0];
    c.v_hi = v_range[1];
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  return run(c, out, err);
}

}  // namespace lclt::cli
