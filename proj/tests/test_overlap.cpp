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

#include "xpm/overlap.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "xpm/errors.hpp"

using namespace xpm;
using cd = std::complex<double>;

namespace {

cd constant_phase_overlap(double nbar, double theta, double phi0) {
  return std::exp(nbar * (std::exp(cd(0.0, theta - phi0)) - 1.0));
}

PhaseField fig1_field(double chi_over_v = 0.01) {
  return PhaseField::longitudinal(InteractionKernel::contact(chi_over_v), 1.0, 0.0, 10.0);
}

}  // namespace

TEST(photon_photon, constant_plateau) {
  auto field = PhaseField::longitudinal(InteractionKernel::contact(0.01), 1.0, 0.0, 40.0);
  auto r = photon_photon_overlap(gaussian_profile(0.0, 1.0), gaussian_profile(20.0, 1.0), field);
  EXPECT_NEAR(std::abs(r.value - std::exp(cd(0.0, -0.01))), 0.0, 1e-12);
  EXPECT_NEAR(r.fidelity, 1.0, 1e-12);
  EXPECT_NEAR(-std::arg(r.value), 0.01, 1e-12);
}

TEST(photon_photon, no_interaction) {
  auto field = fig1_field(0.0);
  auto r = photon_photon_overlap(gaussian_profile(0.0, 1.0), gaussian_profile(5.0, 1.0), field);
  EXPECT_NEAR(std::abs(r.value - 1.0), 0.0, 1e-13);
}

TEST(photon_photon, copropagating_matches_midpoint_grid) {
  auto k = InteractionKernel::gaussian_regularized(0.01, 0.01);
  auto field = PhaseField::longitudinal(k, 1.0, 1.0, 1.0);
  auto f = gaussian_profile(0.0, 1.0);
  auto r = photon_photon_overlap(f, f, field);
  const int m = 256;
  const double h = 16.0 / m;
  cd sum = 0.0;
  for (int i = 0; i < m; ++i) {
    const double x = -8.0 + (i + 0.5) * h;
    for (int j = 0; j < m; ++j) {
      const double y = -8.0 + (j + 0.5) * h;
      sum += f.intensity(x) * f.intensity(y) * std::exp(cd(0.0, -field.phi(x, y))) * h * h;
    }
  }
  EXPECT_LT(r.fidelity, 1.0);
  EXPECT_NEAR(r.fidelity, std::norm(sum), 1e-6);
  EXPECT_NEAR(std::abs(r.value - sum), 0.0, 1e-6);
}

TEST(photon_photon, theta_independent) {
  PhotonPhotonModel m(gaussian_profile(0.0, 1.0), gaussian_profile(5.0, 1.0), fig1_field());
  EXPECT_FALSE(m.theta_dependent());
  EXPECT_EQ(m.at(0.0).value, m.at(1.0).value);
}

TEST(coherent_photon, no_interaction_is_identity) {
  auto f = gaussian_profile(5.0, 1.0);
  for (double nbar : {0.0, 1.0, 1000.0}) {
    auto a = coherent_profile(gaussian_profile(0.0, 1.0), nbar);
    auto r = coherent_photon_overlap(a, f, fig1_field(0.0), 0.0);
    EXPECT_NEAR(std::abs(r.value - 1.0), 0.0, 1e-12) << nbar;
  }
}

TEST(coherent_photon, constant_phase_closed_form) {
  auto f = gaussian_profile(5.0, 1.0);
  auto field = fig1_field(0.0).with_offset(0.3);
  for (double nbar : {1.0, 100.0, 1e6}) {
    CoherentPhotonModel m(coherent_profile(gaussian_profile(0.0, 1.0), nbar), f, field);
    for (double theta : {-1.0, 0.0, 0.29, 0.3, 0.31, 2.0}) {
      const cd expected = constant_phase_overlap(nbar, theta, 0.3);
      // exponent roundoff grows like nbar * 1e-16
      EXPECT_NEAR(std::abs(m.at(theta).value - expected), 0.0, 1e-12 + 1e-15 * nbar) << nbar << " " << theta;
    }
    EXPECT_NEAR(m.at(0.3).fidelity, 1.0, 1e-12 + 1e-15 * nbar);
  }
}

TEST(coherent_photon, fig1_against_reference) {
  // independent adaptive-quadrature reference of the same closed form
  auto a = coherent_profile(gaussian_profile(0.0, 1.0), 1000.0);
  CoherentPhotonModel m(a, gaussian_profile(5.0, 1.0), fig1_field());
  auto r = m.at(0.01);
  EXPECT_NEAR(r.value.real(), 0.9994721893507299, 1e-9);
  EXPECT_NEAR(r.value.imag(), 0.0038767630744657106, 1e-9);
  EXPECT_NEAR(r.fidelity, 0.9989596865774769, 1e-9);
  auto r0 = m.at(0.0);
  EXPECT_NEAR(r0.value.real(), -0.7998536801790588, 1e-9);
  EXPECT_NEAR(r0.value.imag(), 0.5140000540762237, 1e-9);
}

TEST(coherent_photon, result_invariants) {
  auto a = coherent_profile(gaussian_profile(0.0, 1.0), 50.0);
  auto field = PhaseField::longitudinal(InteractionKernel::top_hat(0.2, 0.7), 1.0, 0.0, 6.0);
  CoherentPhotonModel m(a, gaussian_profile(3.0, 1.0), field);
  for (double theta = -3.0; theta <= 3.0; theta += 0.25) {
    auto r = m.at(theta);
    EXPECT_EQ(r.fidelity, std::norm(r.value));
    EXPECT_LE(std::abs(r.value), 1.0 + r.error_estimate + 1e-15);
  }
}

TEST(coherent_photon, two_pi_periodic) {
  auto a = coherent_profile(gaussian_profile(0.0, 1.0), 20.0);
  auto field = PhaseField::longitudinal(InteractionKernel::gaussian_regularized(0.3, 0.05), 1.0, 0.0, 10.0);
  CoherentPhotonModel m(a, gaussian_profile(5.0, 1.0), field);
  for (double theta : {-2.0, 0.0, 0.01, 1.5}) {
    const cd v1 = m.at(theta).value;
    const cd v2 = m.at(theta + 2.0 * std::numbers::pi).value;
    EXPECT_NEAR(std::abs(v1 - v2), 0.0, 1e-12);
  }
}

TEST(coherent_photon, low_pass_through_flag) {
  auto a = coherent_profile(gaussian_profile(0.0, 1.0), 10.0);
  auto field = PhaseField::longitudinal(InteractionKernel::contact(0.01), 1.0, 0.0, 0.0);
  auto r = coherent_photon_overlap(a, gaussian_profile(5.0, 1.0), field, 0.0);
  EXPECT_TRUE(r.flags & flags::kLowPassThrough);
  auto good = coherent_photon_overlap(a, gaussian_profile(5.0, 1.0), fig1_field(), 0.0);
  EXPECT_FALSE(good.flags & flags::kLowPassThrough);
}

TEST(coherent_photon, preconditions) {
  auto a = coherent_profile(gaussian_profile(0.0, 1.0), 10.0);
  auto f = gaussian_profile(5.0, 1.0);
  EXPECT_THROW(coherent_photon_overlap(a, f.scaled(2.0), fig1_field(), 0.0), InvalidParameter);
  auto still = PhaseField::longitudinal(InteractionKernel::contact(0.01), 1.0, 1.0, 1.0);
  EXPECT_THROW(coherent_photon_overlap(a, f, still, 0.0), UnsupportedOperation);
  EXPECT_THROW(coherent_photon_overlap(a, f, fig1_field(), std::nan("")), InvalidParameter);
}

TEST(coherent_photon, repeated_evaluation_is_bitwise_stable) {
  auto a = coherent_profile(gaussian_profile(0.0, 1.0), 1000.0);
  CoherentPhotonModel m1(a, gaussian_profile(5.0, 1.0), fig1_field());
  CoherentPhotonModel m2(a, gaussian_profile(5.0, 1.0), fig1_field());
  const cd first = m1.at(0.005).value;
  m1.at(0.01);
  EXPECT_EQ(m1.at(0.005).value, first);
  EXPECT_EQ(m2.at(0.005).value, first);
}

TEST(fidelity_curve, single_point_no_interaction) {
  auto a = coherent_profile(gaussian_profile(0.0, 1.0), 3.0);
  CoherentPhotonModel m(a, gaussian_profile(5.0, 1.0), fig1_field(0.0));
  const std::vector<double> thetas{0.0};
  auto c = fidelity_curve(m, thetas);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].theta, 0.0);
  EXPECT_NEAR(c[0].result.fidelity, 1.0, 1e-13);
  EXPECT_FALSE(c[0].failed);
}

TEST(fidelity_curve, fig1_peak_at_plateau) {
  auto a = coherent_profile(gaussian_profile(0.0, 1.0), 1000.0);
  CoherentPhotonModel m(a, gaussian_profile(5.0, 1.0), fig1_field());
  std::vector<double> thetas;
  for (int i = 0; i <= 200; ++i) thetas.push_back(0.02 * i / 200.0);
  auto c = fidelity_curve(m, thetas);
  std::size_t best = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i].result.fidelity > c[best].result.fidelity) best = i;
  EXPECT_NEAR(c[best].theta, 0.01, 1e-12);
}

namespace {

class Failing : public OverlapModel {
 public:
  OverlapResult at(double theta) override {
    if (theta > 0.5) throw NumericError("no", cd(0.5, 0.0), 0.1);
    if (theta < -0.5) throw std::runtime_error("boom");
    return make_result(1.0, 0.0);
  }
};

}  // namespace

TEST(fidelity_curve, failing_points_are_recorded) {
  Failing m;
  const std::vector<double> thetas{-1.0, 0.0, 1.0};
  auto c = fidelity_curve(m, thetas);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_TRUE(c[0].failed);
  EXPECT_TRUE(c[0].result.flags & flags::kFailed);
  EXPECT_FALSE(c[1].failed);
  EXPECT_TRUE(c[2].failed);
  EXPECT_TRUE(c[2].result.flags & flags::kNotConverged);
  EXPECT_EQ(c[2].result.value, cd(0.5, 0.0));
}

TEST(flags, names) {
  EXPECT_EQ(flag_names(flags::kNone), "none");
  EXPECT_EQ(flag_names(flags::kFlat | flags::kLowPassThrough), "low_pass_through|flat");
}

TEST(coherent_photon, conjugation_flips_the_phase) {
  // value_phi(theta)* = value_{-phi}(-theta); plain conjugate symmetry in
  // theta alone does not hold once the sine integral is non-zero
  auto a = coherent_profile(gaussian_profile(0.0, 1.0), 5.0);
  auto f = gaussian_profile(0.0, 1.0);
  CopropagatingModel plus(a, f, 0.5, 0.25);
  CopropagatingModel minus(a, f, -0.5, 0.25);
  for (double theta : {0.1, 0.5, 2.0}) {
    EXPECT_NEAR(std::abs(std::conj(plus.at(theta).value) - minus.at(-theta).value), 0.0, 1e-12) << theta;
  }
  EXPECT_GT(std::abs(std::conj(plus.at(0.5).value) - plus.at(-0.5).value), 0.1);
}

TEST(coherent_photon, cosine_form_agrees_when_sine_vanishes) {
  // F = |Integral |f|^2 exp{-1/2 Integral |alpha e^{-i theta} - alpha e^{-i phi}|^2}|^2
  // keeps only the real part of the exponent; with a constant phase the
  // sine integral vanishes at theta = phi0 and phi0 + pi
  const double nbar = 2.0;
  const double phi0 = 0.3;
  auto a = coherent_profile(gaussian_profile(0.0, 1.0), nbar);
  CoherentPhotonModel m(a, gaussian_profile(5.0, 1.0), fig1_field(0.0).with_offset(phi0));
  for (double theta : {phi0, phi0 + std::numbers::pi}) {
    const double distance = std::norm(std::exp(cd(0.0, -theta)) - std::exp(cd(0.0, -phi0)));
    const double cosine_form = std::exp(-nbar * distance);
    EXPECT_NEAR(m.at(theta).fidelity, cosine_form, 1e-12) << theta;
    // the e^{+i phi} reading does not give the modulus
    const double flipped = std::exp(-nbar * std::norm(std::exp(cd(0.0, -theta)) - std::exp(cd(0.0, phi0))));
    EXPECT_GT(std::abs(flipped / cosine_form - 1.0), 0.1) << theta;
  }
}
