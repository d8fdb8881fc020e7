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

#include "xpm/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

using namespace xpm;

TEST(quadrature, rule_weights_and_symmetry) {
  const auto& r = quad::gauss_legendre16();
  double sum = 0.0;
  for (int k = 0; k < quad::kOrder; ++k) {
    sum += r.weights[k];
    EXPECT_DOUBLE_EQ(r.nodes[k], -r.nodes[quad::kOrder - 1 - k]);
    if (k > 0) EXPECT_LT(r.nodes[k - 1], r.nodes[k]);
  }
  EXPECT_NEAR(sum, 2.0, 1e-14);
}

TEST(quadrature, single_panel_exact_for_degree_31) {
  auto e = quad::composite<double>([](double x) { return std::pow(x, 30) + std::pow(x, 31); }, -1.0, 1.0, 1);
  EXPECT_NEAR(e.value, 2.0 / 31.0, 1e-14);
}

TEST(quadrature, integrate_smooth) {
  auto e = quad::integrate<double>([](double x) { return std::exp(-x * x); }, -8.0, 8.0);
  EXPECT_TRUE(e.converged);
  EXPECT_NEAR(e.value, std::sqrt(std::numbers::pi), 1e-12);
}

TEST(quadrature, integrate_complex_oscillatory) {
  auto e = quad::integrate<std::complex<double>>(
      [](double x) { return std::exp(std::complex<double>(0.0, 40.0 * x)); }, 0.0, 1.0);
  const std::complex<double> exact = (std::exp(std::complex<double>(0.0, 40.0)) - 1.0) / std::complex<double>(0.0, 40.0);
  EXPECT_TRUE(e.converged);
  EXPECT_LT(std::abs(e.value - exact), 1e-12);
}

TEST(quadrature, pieces_handle_a_jump) {
  auto step = [](double x) { return x < 0.3 ? 1.0 : 2.0; };
  const std::vector<double> extra{0.3};
  auto cuts = quad::make_cuts(0.0, 1.0, extra);
  auto e = quad::integrate_pieces<double>(step, cuts);
  EXPECT_TRUE(e.converged);
  EXPECT_NEAR(e.value, 0.3 + 1.4, 1e-14);
}

TEST(quadrature, make_cuts_drops_outside_and_duplicates) {
  const std::vector<double> extra{-1.0, 0.5, 0.5, 2.0, 0.25};
  auto cuts = quad::make_cuts(0.0, 1.0, extra);
  EXPECT_EQ(cuts, (std::vector<double>{0.0, 0.25, 0.5, 1.0}));
}

TEST(quadrature, reports_non_convergence) {
  quad::Options o;
  o.max_panels = 8;
  auto e = quad::integrate<double>([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, o);
  EXPECT_FALSE(e.converged);
}

TEST(quadrature, empty_interval) {
  auto e = quad::integrate<double>([](double) { return 1.0; }, 1.0, 1.0);
  EXPECT_TRUE(e.converged);
  EXPECT_EQ(e.value, 0.0);
}
