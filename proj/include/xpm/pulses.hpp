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

// Pulse envelopes for single photons and coherent states.
//
// Lengths are in units of the single-photon pulse width. A Gaussian envelope
// is L2-normalized per axis,
//
//   f(z) = (2 pi sigma^2)^(-1/4) exp(-(z - z0)^2 / (4 sigma^2)),
//
// so |f|^2 is a normal density of standard deviation sigma. Coherent-state
// envelopes carry an amplitude scale sqrt(nbar) on top of a normalized base.

#include <array>
#include <complex>
#include <span>
#include <utility>
#include <vector>

namespace xpm {

using Point2 = std::array<double, 2>;

/// Half-width of the integration support of a Gaussian, in widths.
inline constexpr double kSupportWidths = 8.0;

enum class ProfileKind { gaussian, tabulated };

class PulseProfile {
 public:
  /// 1-D Gaussian; throws InvalidParameter unless sigma > 0.
  static PulseProfile gaussian(double center, double sigma);
  /// 2-D product Gaussian (transverse plane).
  static PulseProfile gaussian(Point2 center, Point2 sigma);
  /// 1-D envelope sampled on x0, x0 + dx, ...; linearly interpolated between
  /// samples and zero outside. |sample|^2 must fall below 1e-12 of the peak
  /// intensity at both ends.
  static PulseProfile tabulated(double x0, double dx, std::vector<std::complex<double>> samples);

  ProfileKind kind() const { return kind_; }
  int dimension() const { return dimension_; }
  std::complex<double> amplitude_scale() const { return scale_; }
  double center(int axis = 0) const { return center_[axis]; }
  double sigma(int axis = 0) const { return sigma_[axis]; }

  /// Envelope value. The 1-D overload requires dimension() == 1.
  std::complex<double> operator()(double x) const;
  std::complex<double> operator()(Point2 x) const;

  /// |envelope|^2.
  double intensity(double x) const;
  double intensity(Point2 x) const;

  /// Integration support along one axis: center +/- 8 sigma for Gaussians,
  /// the sample range for tabulated envelopes.
  std::pair<double, double> support(int axis = 0) const;

  /// Smallest length scale over which the envelope varies.
  double feature_scale() const;

  /// Same shape with the amplitude multiplied by `factor`.
  PulseProfile scaled(std::complex<double> factor) const;

  std::span<const std::complex<double>> samples() const { return samples_; }
  double grid_origin() const { return x0_; }
  double grid_step() const { return dx_; }

 private:
  PulseProfile() = default;

  ProfileKind kind_ = ProfileKind::gaussian;
  int dimension_ = 1;
  std::complex<double> scale_{1.0, 0.0};
  Point2 center_{0.0, 0.0};
  Point2 sigma_{1.0, 1.0};
  double x0_ = 0.0;
  double dx_ = 0.0;
  std::vector<std::complex<double>> samples_;
};

/// Unit-normalized Gaussian with the same center and width on every axis.
PulseProfile gaussian_profile(double center, double sigma, int dimension = 1);

/// alpha(x) = sqrt(nbar) f(x) for a unit-normalized base envelope.
PulseProfile coherent_profile(const PulseProfile& base, double nbar);

/// Integral of |envelope|^2: exact for Gaussians, trapezoidal sum over the
/// samples for tabulated envelopes.
double mean_photon_number(const PulseProfile& p);

/// (2 pi)^(-d/2) Integral p(x) exp(-i k.x) d^dx at every k. The scalar
/// overload serves 1-D profiles, the vector one 2-D profiles.
std::vector<std::complex<double>> mode_spectrum(const PulseProfile& p, std::span<const double> k_grid);
std::vector<std::complex<double>> mode_spectrum(const PulseProfile& p, std::span<const Point2> k_grid);

}  // namespace xpm
