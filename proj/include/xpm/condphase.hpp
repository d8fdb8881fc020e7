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

#include <functional>
#include <vector>

namespace xpm {

struct CondPhaseOptions {
  int coarse_points = 256;
  double tol = 1e-6;
};

struct CondPhaseResult {
  double theta_c = 0.0;        // in [-pi, pi)
  double f_max = 0.0;
  double bracket_width = 0.0;
  int evaluations = 0;
  bool flat = false;
  /// Best fidelity seen after the coarse scan and after every refinement step.
  std::vector<double> best_history;
};

/// Conditional phase: the theta maximizing the fidelity. Scans an equispaced
/// grid on [-pi, pi), then golden-section refines around the best grid point
/// (across the +/-pi seam if needed) until the bracket is no wider than tol.
/// Grid ties go to the smallest |theta|. A fidelity that varies by less than
/// 1e-14 over the grid is reported flat with theta_c = 0.
CondPhaseResult conditional_phase(const std::function<double(double)>& fidelity, const CondPhaseOptions& opts = {});

/// Maps any angle into [-pi, pi).
double wrap_phase(double theta);

}  // namespace xpm
