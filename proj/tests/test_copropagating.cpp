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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "xpm/overlap.hpp"
#include "xpm/quadrature.hpp"

using namespace xpm;
using cd = std::complex<double>;

namespace {

// sqrt(pi) Sum_{n>=1} (-iA)^n / (n! sqrt(n))
cd spike_series(double a) {
  cd term = 1.0;
  cd sum = 0.0;
  for (int n = 1; n < 200; ++n) {
    term *= cd(0.0, -a) / static_cast<double>(n);
    sum += term / std::sqrt(static_cast<double>(n));
  }
  return std::sqrt(std::numbers::pi) * sum;
}

cd spike_brute(double a) {
  quad::Options o;
  o.abs_tol = 1e-11;
  o.max_panels = 1 << 16;
  auto e = quad::integrate<cd>([&](double u) { return std::exp(cd(0.0, -a * std::exp(-u * u))) - 1.0; }, 0.0, 8.0, o);
  return 2.0 * e.value;
}

}  // namespace

TEST(spike_integral, matches_series) {
  for (double a : {0.0, 0.01, 0.5, 2.0, 3.99, 4.0, 5.0, 8.0}) {
    EXPECT_NEAR(std::abs(gaussian_spike_integral(a) - spike_series(a)), 0.0, 1e-11) << a;
  }
}

TEST(spike_integral, matches_direct_quadrature) {
  for (double a : {20.0, 50.0, 1000.0}) {
    const cd ref = spike_brute(a);
    EXPECT_NEAR(std::abs(gaussian_spike_integral(a) - ref), 0.0, 1e-9) << a;
  }
}

TEST(spike_integral, negative_amplitude_conjugates) {
  for (double a : {0.3, 7.0, 300.0}) {
    EXPECT_EQ(gaussian_spike_integral(-a), std::conj(gaussian_spike_integral(a)));
  }
}

TEST(spike_integral, huge_amplitude_log_growth) {
  // |J| ~ 2 sqrt(ln A) for A >> 1, with a bounded correction
  const double a = 2.8e7;
  const cd j = gaussian_spike_integral(a);
  EXPECT_NEAR(j.real(), -2.0 * std::sqrt(std::log(a)), 0.5);
  EXPECT_TRUE(std::isfinite(j.imag()));
  const cd j2 = gaussian_spike_integral(2.0 * a);
  EXPECT_LT(j2.real(), j.real());
}

TEST(copropagating, no_interaction_closed_form) {
  auto a = coherent_profile(gaussian_profile(0.0, 1.0), 1000.0);
  auto f = gaussian_profile(0.0, 1.0);
  for (double theta : {0.0, 0.01, -0.5}) {
    auto r = copropagating_overlap(a, f, 0.0, 1e-20, theta);
    const cd expected = std::exp(1000.0 * (std::exp(cd(0.0, theta)) - 1.0));
    EXPECT_NEAR(std::abs(r.value - expected), 0.0, 1e-12);
  }
  EXPECT_NEAR(copropagating_overlap(a, f, 0.0, 1e-20, 0.0).fidelity, 1.0, 1e-14);
}

TEST(copropagating, fig2_fidelity_at_zero) {
  auto a = coherent_profile(gaussian_profile(0.0, 1.0), 1000.0);
  CopropagatingModel m(a, gaussian_profile(0.0, 1.0), 0.01, 1e-20);
  EXPECT_TRUE(m.narrow());
  EXPECT_NEAR(m.spike_amplitude(), 0.01 / (2.0 * std::sqrt(std::numbers::pi * 1e-20)), 1.0);
  EXPECT_GE(m.at(0.0).fidelity, 1.0 - 1e-6);
  EXPECT_GT(m.at(0.0).fidelity, m.at(0.001).fidelity);
  EXPECT_GT(m.at(0.0).fidelity, m.at(-0.001).fidelity);
}

TEST(copropagating, broad_kernel_matches_generic_path) {
  const double chi_t = 0.5;
  const double eps = 0.25;
  auto a = coherent_profile(gaussian_profile(0.0, 1.0), 1.0);
  auto f = gaussian_profile(0.4, 1.0);
  auto field = PhaseField::longitudinal(InteractionKernel::gaussian_regularized(chi_t, eps), 1.0, 1.0, 1.0);
  CopropagatingModel co(a, f, chi_t, eps);
  CoherentPhotonModel gen(a, f, field);
  EXPECT_FALSE(co.narrow());
  for (double theta : {-1.0, 0.0, 0.3, 2.0}) {
    EXPECT_NEAR(std::abs(co.at(theta).value - gen.at(theta).value), 0.0, 1e-8) << theta;
  }
}

TEST(copropagating, wide_path_approaches_narrow_form) {
  // just above the narrow threshold the direct integral must agree with
  // D = 2 sqrt(eps) |alpha(y)|^2 J(A) to leading order
  const double chi_t = 0.01;
  const double eps = 1e-10;
  auto a = coherent_profile(gaussian_profile(0.0, 1.0), 1000.0);
  CopropagatingModel m(a, gaussian_profile(0.0, 1.0), chi_t, eps);
  ASSERT_FALSE(m.narrow());
  for (double y : {0.0, 0.7, -2.0}) {
    const cd d = m.core(y).value;
    const cd expected = 2.0 * std::sqrt(eps) * a.intensity(y) * gaussian_spike_integral(m.spike_amplitude());
    EXPECT_NEAR(std::abs(d - expected) / std::abs(expected), 0.0, 1e-6) << y;
  }
}

TEST(copropagating, narrow_core_formula) {
  const double eps = 1e-20;
  auto a = coherent_profile(gaussian_profile(0.0, 1.0), 1000.0);
  CopropagatingModel m(a, gaussian_profile(0.0, 1.0), 0.01, eps);
  const cd d = m.core(0.5).value;
  const cd expected = 2.0 * std::sqrt(eps) * a.intensity(0.5) * gaussian_spike_integral(m.spike_amplitude());
  EXPECT_NEAR(std::abs(d - expected), 0.0, 1e-15 * std::abs(expected) + 1e-300);
}

TEST(copropagating, fidelity_grows_as_spike_narrows) {
  auto a = coherent_profile(gaussian_profile(0.0, 1.0), 1000.0);
  auto f = gaussian_profile(0.0, 1.0);
  double prev = 0.0;
  for (double eps : {1e-4, 1e-8, 1e-12, 1e-16, 1e-20}) {
    const double fid = copropagating_overlap(a, f, 0.01, eps, 0.0).fidelity;
    EXPECT_GT(fid, prev) << eps;
    prev = fid;
  }
}
