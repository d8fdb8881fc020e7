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

// Scenario documents: flat `key = value` lines under an optional
// `[scenario]` header, `#` starts a comment.
//
//   [scenario]
//   kind = counter_propagating
//   nbar = 1000
//   chi_over_v = 0.01
//   separation = 5
//   vt = 10
//
// Required keys per kind:
//   counter_propagating  nbar chi_over_v separation vt      (+ kernel, epsilon, range)
//   co_propagating       nbar chi_t epsilon                  (+ separation)
//   transverse           nbar chi_over_v epsilon_T
//   photon_photon        chi_over_v separation vt            (+ kernel, epsilon, range)
// Optional for every kind: sigma_c sigma_s theta_min theta_max theta_steps
// coarse_points tol output, and phase_offset except for co_propagating.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace xpm {

enum class ScenarioKind { counter_propagating, co_propagating, transverse, photon_photon };

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::string key, int line)
      : std::runtime_error(message), key_(std::move(key)), line_(line) {}
  const std::string& key() const { return key_; }
  int line() const { return line_; }  // 0 when the error has no line

 private:
  std::string key_;
  int line_;
};

struct Scenario {
  ScenarioKind kind = ScenarioKind::counter_propagating;
  double nbar = 0.0;
  double sigma_c = 1.0;  // coherent (or first photon) width
  double sigma_s = 1.0;  // single-photon width; the length unit
  double separation = 0.0;  // photon center minus coherent center, in sigma_s
  double chi_over_v = 0.0;
  double chi_t = 0.0;
  double vt = 0.0;
  std::string kernel = "contact";
  double epsilon = 0.0;
  double epsilon_t = 0.0;
  double range = 0.0;
  double phase_offset = 0.0;
  std::optional<double> theta_min;
  std::optional<double> theta_max;
  int theta_steps = 256;
  int coarse_points = 256;
  double tol = 1e-6;
  std::string output;

  /// Inclusive linspace over [theta_min, theta_max]; without explicit bounds,
  /// theta_steps equispaced points on [-pi, pi).
  std::vector<double> theta_grid() const;
};

std::string_view kind_name(ScenarioKind k);

Scenario parse_scenario(std::string_view text);

}  // namespace xpm
