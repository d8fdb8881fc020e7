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

#include "xpm/runner.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "xpm/errors.hpp"
#include "xpm/oracle.hpp"

namespace xpm {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

InteractionKernel longitudinal_kernel(const Scenario& s) {
  if (s.kernel == "gaussian_regularized") return InteractionKernel::gaussian_regularized(s.chi_over_v, s.epsilon);
  if (s.kernel == "top_hat") return InteractionKernel::top_hat(s.chi_over_v, s.range);
  return InteractionKernel::contact(s.chi_over_v);
}

// Counter-propagating convention: the coherent pulse starts at the origin and
// moves at unit speed relative to the photon, which starts ahead of it.
PhaseField counter_field(const Scenario& s) {
  return PhaseField::longitudinal(longitudinal_kernel(s), 1.0, 0.0, s.vt).with_offset(s.phase_offset);
}

PulseProfile coherent_pulse(const Scenario& s) { return coherent_profile(gaussian_profile(0.0, s.sigma_c), s.nbar); }

PulseProfile photon_pulse(const Scenario& s) { return gaussian_profile(s.separation * s.sigma_s, s.sigma_s); }

}  // namespace

std::unique_ptr<OverlapModel> make_model(const Scenario& s, const OverlapOptions& opts) {
  switch (s.kind) {
    case ScenarioKind::counter_propagating:
      return std::make_unique<CoherentPhotonModel>(coherent_pulse(s), photon_pulse(s), counter_field(s), opts);
    case ScenarioKind::co_propagating:
      return std::make_unique<CopropagatingModel>(coherent_pulse(s), photon_pulse(s), s.chi_t, s.epsilon, opts);
    case ScenarioKind::transverse: {
      const auto alpha = coherent_profile(gaussian_profile(0.0, s.sigma_c, 2), s.nbar);
      const auto f = gaussian_profile(0.0, s.sigma_s, 2);
      const auto field = PhaseField::transverse(InteractionKernel::transverse_contact(s.chi_over_v, s.epsilon_t), 1.0)
                             .with_offset(s.phase_offset);
      return std::make_unique<TransverseModel>(alpha, f, field, opts);
    }
    case ScenarioKind::photon_photon:
      return std::make_unique<PhotonPhotonModel>(gaussian_profile(0.0, s.sigma_c), photon_pulse(s), counter_field(s),
                                                 opts);
  }
  throw InvalidParameter("unknown scenario kind");
}

bool write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& points) {
  bool ok = true;
  out << "theta,fidelity,overlap_re,overlap_im,error_estimate,flags\n";
  for (const CurvePoint& p : points) {
    ok = ok && !p.failed;
    out << fmt17(p.theta) << ',' << fmt17(p.result.fidelity) << ',' << fmt17(p.result.value.real()) << ','
        << fmt17(p.result.value.imag()) << ',' << fmt17(p.result.error_estimate) << ','
        << flag_names(p.result.flags) << '\n';
  }
  return ok;
}

int run_curve(const Scenario& s, std::ostream& csv) {
  auto model = make_model(s);
  const auto grid = s.theta_grid();
  const auto points = fidelity_curve(*model, grid);
  return write_curve_csv(csv, points) ? 0 : 1;
}

std::string CondPhaseSummary::line() const {
  return "theta_c=" + fmt17(theta_c) + " f_max=" + fmt17(f_max) + " evaluations=" + std::to_string(evaluations) +
         " flags=" + flag_names(flags);
}

CondPhaseSummary run_condphase(const Scenario& s) {
  auto model = make_model(s);
  CondPhaseSummary out;
  if (!model->theta_dependent()) {
    const OverlapResult r = model->at(0.0);
    out.theta_c = wrap_phase(-std::arg(r.value));
    out.f_max = r.fidelity;
    out.evaluations = 1;
    out.flags = r.flags;
    return out;
  }
  unsigned seen = flags::kNone;
  CondPhaseOptions opts;
  opts.coarse_points = s.coarse_points;
  opts.tol = s.tol;
  const CondPhaseResult cp = conditional_phase(
      [&](double theta) {
        const OverlapResult r = model->at(theta);
        seen |= r.flags;
        return r.fidelity;
      },
      opts);
  out.theta_c = cp.theta_c;
  out.f_max = cp.f_max;
  out.evaluations = cp.evaluations;
  out.flags = seen | (cp.flat ? flags::kFlat : flags::kNone);
  return out;
}

std::string OracleReport::line() const {
  return std::string("oracle=") + (oracle == OracleKind::discrete ? "discrete" : "series") +
         " resolution=" + std::to_string(resolution) + " max_deviation=" + fmt17(max_deviation) +
         " tolerance=" + fmt17(tolerance) + (pass ? " PASS" : " FAIL");
}

OracleReport run_oracle_check(const Scenario& s, OracleKind oracle, int resolution) {
  if (s.kind == ScenarioKind::transverse || s.kind == ScenarioKind::photon_photon) {
    throw UsageError("oracle checks cover the 1-D coherent/single-photon kinds only");
  }
  if (resolution < 1) throw UsageError("oracle resolution must be positive");

  const PulseProfile alpha = coherent_pulse(s);
  const PulseProfile f = photon_pulse(s);
  PhaseField field = counter_field(s);
  double spike_width = 0.0;
  if (s.kind == ScenarioKind::co_propagating) {
    field = PhaseField::longitudinal(InteractionKernel::gaussian_regularized(s.chi_t, s.epsilon), 0.0, 0.0, 1.0);
    spike_width = 2.0 * std::sqrt(s.epsilon);
  }

  OracleReport rep;
  rep.oracle = oracle;
  rep.resolution = resolution;
  auto model = make_model(s);
  const auto grid = s.theta_grid();

  if (oracle == OracleKind::discrete) {
    rep.tolerance = kDiscreteTolerance;
    const auto modes = DiscreteModeGrid::build(alpha, f, resolution);
    if (spike_width > 0.0 && modes.bin_width > 0.25 * spike_width) {
      throw UsageError("discrete oracle bins do not resolve the regularized kernel width");
    }
    const DiscreteModeOracle ref(modes, PhaseMatrix(modes, field));
    for (double theta : grid) {
      rep.max_deviation = std::max(rep.max_deviation, std::abs(model->at(theta).value - ref.at(theta)));
    }
  } else {
    rep.tolerance = kSeriesTolerance;
    if (s.nbar > 30.0) throw UsageError("series oracle applies to nbar <= 30");
    if (spike_width > 0.0 && std::abs(s.chi_t) / (std::sqrt(std::numbers::pi) * spike_width) > 100.0) {
      throw UsageError("series oracle cannot resolve a spike phase above 100 rad");
    }
    SeriesOracle ref(alpha, f, field);
    for (double theta : grid) {
      const std::complex<double> expected = ref.at(theta, resolution).value;
      const double scale = std::max(std::abs(expected), 1e-300);
      rep.max_deviation = std::max(rep.max_deviation, std::abs(model->at(theta).value - expected) / scale);
    }
  }
  rep.pass = rep.max_deviation <= rep.tolerance;
  return rep;
}

Scenario fig1_scenario() {
  Scenario s;
  s.kind = ScenarioKind::counter_propagating;
  s.nbar = 1000.0;
  s.chi_over_v = 0.01;
  s.separation = 5.0;
  s.vt = 10.0;
  s.theta_min = 0.0;
  s.theta_max = 0.02;
  s.theta_steps = 201;
  return s;
}

Scenario fig2_scenario() {
  Scenario s;
  s.kind = ScenarioKind::co_propagating;
  s.nbar = 1000.0;
  s.chi_t = 0.01;
  s.epsilon = 1e-20;
  s.theta_min = -0.05;
  s.theta_max = 0.05;
  s.theta_steps = 201;
  return s;
}

}  // namespace xpm
