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

#include "xpm/condphase.hpp"

#include <cmath>
#include <numbers>

#include "xpm/errors.hpp"

namespace xpm {

namespace {
constexpr double kPi = std::numbers::pi;
}

double wrap_phase(double theta) {
  double w = std::fmod(theta + kPi, 2.0 * kPi);
  if (w < 0.0) w += 2.0 * kPi;
  w -= kPi;
  return w >= kPi ? -kPi : w;
}

CondPhaseResult conditional_phase(const std::function<double(double)>& fidelity, const CondPhaseOptions& opts) {
  if (opts.coarse_points < 8) throw InvalidParameter("conditional phase needs at least 8 coarse points");
  if (!(opts.tol > 0.0)) throw InvalidParameter("conditional phase tolerance must be positive");

  CondPhaseResult res;
  auto eval = [&](double theta) {
    ++res.evaluations;
    return fidelity(theta);
  };

  const int n = opts.coarse_points;
  const double spacing = 2.0 * kPi / n;
  int best = -1;
  double best_f = 0.0;
  double min_f = 0.0;
  for (int k = 0; k < n; ++k) {
    const double theta = -kPi + spacing * k;
    const double f = eval(theta);
    if (best < 0) {
      best = k;
      best_f = min_f = f;
      continue;
    }
    min_f = std::min(min_f, f);
    const double best_theta = -kPi + spacing * best;
    if (f > best_f || (f == best_f && std::abs(theta) < std::abs(best_theta))) {
      best = k;
      best_f = f;
    }
  }

  if (best_f - min_f < 1e-14) {
    res.flat = true;
    res.theta_c = 0.0;
    res.f_max = eval(0.0);
    res.bracket_width = 0.0;
    res.best_history.push_back(res.f_max);
    return res;
  }
  res.best_history.push_back(best_f);

  // Golden-section maximization on [c - h, c + h]; angles are unwrapped here
  // and folded back at the end.
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double center = -kPi + spacing * best;
  double a = center - spacing;
  double b = center + spacing;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = eval(x1);
  double f2 = eval(x2);
  double running = std::max(best_f, std::max(f1, f2));
  res.best_history.push_back(running);
  while (b - a > opts.tol) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = eval(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = eval(x2);
    }
    running = std::max(running, std::max(f1, f2));
    res.best_history.push_back(running);
  }
  const double mid = 0.5 * (a + b);
  res.theta_c = wrap_phase(mid);
  res.f_max = eval(mid);
  res.bracket_width = b - a;
  return res;
}

}  // namespace xpm
