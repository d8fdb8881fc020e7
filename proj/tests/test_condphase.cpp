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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace xpm;

namespace {

double coherent_stub(double theta, double nbar, double center) {
  return std::exp(nbar * (std::cos(theta - center) - 1.0));
}

}  // namespace

TEST(condphase, analytic_stub) {
  CondPhaseOptions o;
  auto r = conditional_phase([](double t) { return coherent_stub(t, 1000.0, 0.3); }, o);
  EXPECT_NEAR(r.theta_c, 0.3, o.tol);
  EXPECT_NEAR(r.f_max, 1.0, 1e-9);
  EXPECT_LE(r.bracket_width, o.tol);
  EXPECT_FALSE(r.flat);
}

TEST(condphase, beats_every_grid_point) {
  auto fn = [](double t) { return 0.6 * coherent_stub(t, 5.0, -1.1) + 0.4 * coherent_stub(t, 50.0, 2.0); };
  CondPhaseOptions o;
  o.coarse_points = 64;
  auto r = conditional_phase(fn, o);
  for (int i = 0; i < o.coarse_points; ++i) {
    const double t = -std::numbers::pi + 2.0 * std::numbers::pi * i / o.coarse_points;
    EXPECT_GE(r.f_max, fn(t));
  }
  for (std::size_t i = 1; i < r.best_history.size(); ++i) EXPECT_GE(r.best_history[i], r.best_history[i - 1]);
}

TEST(condphase, tight_tolerance) {
  CondPhaseOptions o;
  o.tol = 1e-10;
  auto r = conditional_phase([](double t) { return coherent_stub(t, 100.0, 0.0123); }, o);
  // F is flat to roundoff within ~1e-9 of the peak
  EXPECT_NEAR(r.theta_c, 0.0123, 1e-7);
  EXPECT_LE(r.bracket_width, 1e-10);
}

TEST(condphase, peak_across_the_seam) {
  const double c = std::numbers::pi - 1e-3;
  auto r = conditional_phase([&](double t) { return coherent_stub(t, 100.0, c); });
  EXPECT_NEAR(r.theta_c, c, 1e-6);
  auto r2 = conditional_phase([&](double t) { return coherent_stub(t, 100.0, -c); });
  EXPECT_NEAR(r2.theta_c, -c, 1e-6);
}

TEST(condphase, flat_function) {
  auto r = conditional_phase([](double) { return 1.0; });
  EXPECT_TRUE(r.flat);
  EXPECT_EQ(r.theta_c, 0.0);
  EXPECT_EQ(r.f_max, 1.0);
}

TEST(condphase, ties_prefer_small_angle) {
  auto r = conditional_phase([](double t) { return 0.5 + 0.5 * std::cos(2.0 * t); });
  EXPECT_NEAR(r.theta_c, 0.0, 1e-6);
}

TEST(condphase, evaluations_counted) {
  int calls = 0;
  auto r = conditional_phase([&](double t) {
    ++calls;
    return coherent_stub(t, 10.0, 0.5);
  });
  EXPECT_EQ(r.evaluations, calls);
  EXPECT_GT(calls, 256);
}

TEST(condphase, wrap) {
  EXPECT_DOUBLE_EQ(wrap_phase(0.5), 0.5);
  EXPECT_NEAR(wrap_phase(2.0 * std::numbers::pi + 0.5), 0.5, 1e-15);
  EXPECT_NEAR(wrap_phase(std::numbers::pi), -std::numbers::pi, 1e-15);
  EXPECT_NEAR(wrap_phase(-std::numbers::pi - 0.1), std::numbers::pi - 0.1, 1e-15);
}
