// Copyright 2026 The xpmsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// xpmsim: fidelity curves and conditional phases for cross-phase modulation
// between photonic pulses.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "xpm/errors.hpp"
#include "xpm/runner.hpp"

namespace {

xpm::Scenario load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw xpm::UsageError("cannot open config: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return xpm::parse_scenario(buf.str());
}

struct Overrides {
  int theta_steps = 0;
  double tol = 0.0;

  void apply(xpm::Scenario& s) const {
    if (theta_steps > 0) s.theta_steps = theta_steps;
    if (tol > 0.0) s.tol = tol;
  }
};

// CSV goes to --out, then the scenario's `output` key, then stdout.
int emit_curve(const xpm::Scenario& s, const std::string& out_path) {
  const std::string path = !out_path.empty() ? out_path : s.output;
  if (path.empty()) return xpm::run_curve(s, std::cout);
  std::ofstream out(path);
  if (!out) throw xpm::UsageError("cannot write: " + path);
  return xpm::run_curve(s, out);
}

int reproduce(const xpm::Scenario& s, const std::string& out_path, bool fig1) {
  const int curve_status = emit_curve(s, out_path);
  const xpm::CondPhaseSummary sum = xpm::run_condphase(s);
  std::cerr << sum.line() << '\n';
  bool ok = curve_status == 0;
  if (fig1) {
    const bool phase_ok = std::abs(sum.theta_c - 0.01) <= 1e-4;
    const bool fid_ok = sum.f_max >= 0.999;
    std::cerr << (phase_ok ? "PASS" : "FAIL") << " theta_c = 0.01 +/- 1e-4\n";
    std::cerr << (fid_ok ? "PASS" : "FAIL") << " f_max >= 0.999\n";
    ok = ok && phase_ok && fid_ok;
  } else {
    auto model = xpm::make_model(s);
    const double f0 = model->at(0.0).fidelity;
    const bool phase_ok = std::abs(sum.theta_c) <= 1e-4;
    const bool fid_ok = f0 >= 1.0 - 1e-4;
    std::cerr << (phase_ok ? "PASS" : "FAIL") << " theta_c = 0 +/- 1e-4\n";
    std::cerr << (fid_ok ? "PASS" : "FAIL") << " F(0) >= 1 - 1e-4\n";
    ok = ok && phase_ok && fid_ok;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cross-phase modulation fidelity and conditional phase simulator"};
  app.require_subcommand(1);

  std::string config;
  std::string out;
  Overrides ov;
  std::string oracle = "discrete";
  int resolution = 0;

  auto add_common = [&](CLI::App* sub, bool needs_config) {
    auto* opt = sub->add_option("--config", config, "Scenario file (key = value lines)");
    if (needs_config) opt->required()->check(CLI::ExistingFile);
    sub->add_option("--theta-steps", ov.theta_steps, "Override the number of theta grid points");
    sub->add_option("--tol", ov.tol, "Override the conditional-phase tolerance");
  };

  auto* curve = app.add_subcommand("curve", "Write the fidelity curve as CSV");
  add_common(curve, true);
  curve->add_option("--out", out, "CSV output path (default: stdout)");

  auto* condphase = app.add_subcommand("condphase", "Print the conditional phase and maximal fidelity");
  add_common(condphase, true);

  auto* check = app.add_subcommand("oracle-check", "Compare the engine with a brute-force oracle");
  add_common(check, true);
  check->add_option("--oracle", oracle, "discrete | series")->check(CLI::IsMember({"discrete", "series"}));
  check->add_option("--resolution", resolution, "Bins (discrete) or series terms (series)");

  auto* fig1 = app.add_subcommand("reproduce-fig1", "Counter-propagating pass-through example");
  fig1->add_option("--out", out, "CSV output path (default: stdout)");
  fig1->add_option("--theta-steps", ov.theta_steps, "Override the number of theta grid points");
  fig1->add_option("--tol", ov.tol, "Override the conditional-phase tolerance");

  auto* fig2 = app.add_subcommand("reproduce-fig2", "Co-propagating regularized-delta example");
  fig2->add_option("--out", out, "CSV output path (default: stdout)");
  fig2->add_option("--theta-steps", ov.theta_steps, "Override the number of theta grid points");
  fig2->add_option("--tol", ov.tol, "Override the conditional-phase tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*curve) {
      xpm::Scenario s = load(config);
      ov.apply(s);
      return emit_curve(s, out);
    }
    if (*condphase) {
      xpm::Scenario s = load(config);
      ov.apply(s);
      std::cout << xpm::run_condphase(s).line() << '\n';
      return 0;
    }
    if (*check) {
      xpm::Scenario s = load(config);
      ov.apply(s);
      const auto kind = oracle == "series" ? xpm::OracleKind::series : xpm::OracleKind::discrete;
      const int res = resolution > 0 ? resolution
                                     : (kind == xpm::OracleKind::series ? xpm::kDefaultSeriesTerms
                                                                        : xpm::kDefaultDiscreteBins);
      const auto report = xpm::run_oracle_check(s, kind, res);
      std::cout << report.line() << '\n';
      return report.pass ? 0 : 1;
    }
    if (*fig1 || *fig2) {
      xpm::Scenario s = *fig1 ? xpm::fig1_scenario() : xpm::fig2_scenario();
      ov.apply(s);
      return reproduce(s, out, fig1->parsed());
    }
  } catch (const xpm::ParseError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const xpm::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const xpm::InvalidParameter& e) {
    std::cerr << "invalid parameter: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
