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

#pragma once

// Scenario execution: builds the overlap model a scenario describes and
// produces curves, conditional-phase summaries and oracle cross-checks.

#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "xpm/condphase.hpp"
#include "xpm/overlap.hpp"
#include "xpm/scenario.hpp"

namespace xpm {

/// The request cannot be served for this scenario (e.g. an oracle outside
/// its applicability range).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::unique_ptr<OverlapModel> make_model(const Scenario& s, const OverlapOptions& opts = {});

/// Writes `theta,fidelity,overlap_re,overlap_im,error_estimate,flags` rows
/// with 17 significant digits. Returns true iff no row failed.
bool write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& points);

/// Evaluates the scenario's theta grid and writes the CSV. Returns the exit
/// status: 0 iff every point succeeded.
int run_curve(const Scenario& s, std::ostream& csv);

struct CondPhaseSummary {
  double theta_c = 0.0;
  double f_max = 0.0;
  int evaluations = 0;
  unsigned flags = flags::kNone;

  /// `theta_c=<v> f_max=<v> evaluations=<n> flags=<...>`
  std::string line() const;
};

/// Conditional phase of the scenario. For photon pairs theta_c is -arg of the
/// gate overlap and f_max its squared modulus.
CondPhaseSummary run_condphase(const Scenario& s);

enum class OracleKind { discrete, series };

struct OracleReport {
  OracleKind oracle = OracleKind::discrete;
  int resolution = 0;
  double max_deviation = 0.0;  // absolute (discrete) or relative (series)
  double tolerance = 0.0;
  bool pass = false;

  std::string line() const;
};

inline constexpr int kDefaultDiscreteBins = 4096;
inline constexpr int kDefaultSeriesTerms = 40;
inline constexpr double kDiscreteTolerance = 1e-6;
inline constexpr double kSeriesTolerance = 1e-10;

/// Compares the engine with an oracle over the scenario's theta grid. Throws
/// UsageError when the oracle does not apply to the scenario.
OracleReport run_oracle_check(const Scenario& s, OracleKind oracle, int resolution);

/// Built-in reference scenarios: counter-propagating pass-through (fig1) and
/// co-propagating narrow kernel (fig2).
Scenario fig1_scenario();
Scenario fig2_scenario();

}  // namespace xpm
