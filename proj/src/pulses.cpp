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

#include "xpm/pulses.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "xpm/errors.hpp"
#include "xpm/quadrature.hpp"

namespace xpm {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

double gaussian_axis(double x, double center, double sigma) {
  const double d = x - center;
  return std::pow(2.0 * kPi * sigma * sigma, -0.25) * std::exp(-d * d / (4.0 * sigma * sigma));
}

// Fourier transform of one normalized Gaussian axis including (2 pi)^(-1/2).
cd gaussian_axis_spectrum(double k, double center, double sigma) {
  const double mag = std::pow(2.0 * kPi * sigma * sigma, -0.25) * std::sqrt(4.0 * kPi) * sigma /
                     std::sqrt(2.0 * kPi) * std::exp(-k * k * sigma * sigma);
  return std::polar(mag, -k * center);
}

void require_positive_width(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw InvalidParameter("pulse width must be positive and finite");
  }
}

}  // namespace

PulseProfile PulseProfile::gaussian(double center, double sigma) {
  require_positive_width(sigma);
  if (!std::isfinite(center)) throw InvalidParameter("pulse center must be finite");
  PulseProfile p;
  p.kind_ = ProfileKind::gaussian;
  p.dimension_ = 1;
  p.center_ = {center, 0.0};
  p.sigma_ = {sigma, 1.0};
  return p;
}

PulseProfile PulseProfile::gaussian(Point2 center, Point2 sigma) {
  require_positive_width(sigma[0]);
  require_positive_width(sigma[1]);
  if (!std::isfinite(center[0]) || !std::isfinite(center[1])) {
    throw InvalidParameter("pulse center must be finite");
  }
  PulseProfile p;
  p.kind_ = ProfileKind::gaussian;
  p.dimension_ = 2;
  p.center_ = center;
  p.sigma_ = sigma;
  return p;
}

PulseProfile PulseProfile::tabulated(double x0, double dx, std::vector<cd> samples) {
  if (!(dx > 0.0) || !std::isfinite(dx) || !std::isfinite(x0)) {
    throw InvalidParameter("tabulated grid needs a finite origin and positive step");
  }
  if (samples.size() < 3) throw InvalidParameter("tabulated envelope needs at least 3 samples");
  double peak = 0.0;
  for (const cd& s : samples) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
      throw InvalidParameter("tabulated envelope has non-finite samples");
    }
    peak = std::max(peak, std::norm(s));
  }
  if (peak == 0.0) throw InvalidParameter("tabulated envelope is identically zero");
  // decay is judged on the intensity |f|^2
  if (std::norm(samples.front()) > 1e-12 * peak || std::norm(samples.back()) > 1e-12 * peak) {
    throw InvalidParameter("tabulated intensity does not decay below 1e-12 of its peak at the grid edges");
  }
  PulseProfile p;
  p.kind_ = ProfileKind::tabulated;
  p.dimension_ = 1;
  p.x0_ = x0;
  p.dx_ = dx;
  const double half = 0.5 * dx * static_cast<double>(samples.size() - 1);
  p.center_ = {x0 + half, 0.0};
  p.sigma_ = {half, 1.0};
  p.samples_ = std::move(samples);
  return p;
}

cd PulseProfile::operator()(double x) const {
  if (dimension_ != 1) throw InvalidParameter("1-D evaluation of a 2-D envelope");
  if (kind_ == ProfileKind::gaussian) return scale_ * gaussian_axis(x, center_[0], sigma_[0]);
  const double s = (x - x0_) / dx_;
  const double last = static_cast<double>(samples_.size() - 1);
  if (!(s >= 0.0) || s > last) return {0.0, 0.0};
  const auto i = std::min(static_cast<std::size_t>(s), samples_.size() - 2);
  const double w = s - static_cast<double>(i);
  return scale_ * ((1.0 - w) * samples_[i] + w * samples_[i + 1]);
}

cd PulseProfile::operator()(Point2 x) const {
  if (dimension_ != 2) throw InvalidParameter("2-D evaluation of a 1-D envelope");
  return scale_ * gaussian_axis(x[0], center_[0], sigma_[0]) * gaussian_axis(x[1], center_[1], sigma_[1]);
}

double PulseProfile::intensity(double x) const { return std::norm((*this)(x)); }

double PulseProfile::intensity(Point2 x) const { return std::norm((*this)(x)); }

std::pair<double, double> PulseProfile::support(int axis) const {
  if (kind_ == ProfileKind::tabulated) {
    return {x0_, x0_ + dx_ * static_cast<double>(samples_.size() - 1)};
  }
  return {center_[axis] - kSupportWidths * sigma_[axis], center_[axis] + kSupportWidths * sigma_[axis]};
}

double PulseProfile::feature_scale() const {
  if (kind_ == ProfileKind::tabulated) return dx_;
  return dimension_ == 1 ? sigma_[0] : std::min(sigma_[0], sigma_[1]);
}

PulseProfile PulseProfile::scaled(cd factor) const {
  PulseProfile p = *this;
  p.scale_ *= factor;
  return p;
}

PulseProfile gaussian_profile(double center, double sigma, int dimension) {
  if (dimension == 1) return PulseProfile::gaussian(center, sigma);
  if (dimension == 2) return PulseProfile::gaussian(Point2{center, center}, Point2{sigma, sigma});
  throw InvalidParameter("pulse dimension must be 1 or 2");
}

PulseProfile coherent_profile(const PulseProfile& base, double nbar) {
  if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
    throw InvalidParameter("mean photon number must be finite and non-negative");
  }
  if (std::abs(mean_photon_number(base) - 1.0) > 1e-8) {
    throw InvalidParameter("coherent envelope needs a unit-normalized base profile");
  }
  return base.scaled(std::sqrt(nbar));
}

double mean_photon_number(const PulseProfile& p) {
  if (p.kind() == ProfileKind::gaussian) return std::norm(p.amplitude_scale());
  const auto s = p.samples();
  double sum = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double w = (i == 0 || i + 1 == s.size()) ? 0.5 : 1.0;
    sum += w * std::norm(s[i]);
  }
  return std::norm(p.amplitude_scale()) * sum * p.grid_step();
}

std::vector<cd> mode_spectrum(const PulseProfile& p, std::span<const double> k_grid) {
  if (p.dimension() != 1) throw InvalidParameter("scalar wavenumbers need a 1-D profile");
  std::vector<cd> out;
  out.reserve(k_grid.size());
  if (p.kind() == ProfileKind::gaussian) {
    for (double k : k_grid) out.push_back(p.amplitude_scale() * gaussian_axis_spectrum(k, p.center(), p.sigma()));
    return out;
  }
  // One 16-point panel per interpolation cell; the interpolant is linear
  // there, so the rule is exact up to the oscillation of exp(-ikx).
  const auto s = p.samples();
  const double dx = p.grid_step();
  const double x0 = p.grid_origin();
  const quad::Rule& rule = quad::gauss_legendre16();
  for (double k : k_grid) {
    cd sum{};
    const int sub = std::max(1, static_cast<int>(std::ceil(std::abs(k) * dx / 2.0)));
    const double h = dx / sub;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      for (int q = 0; q < sub; ++q) {
        const double a = x0 + dx * static_cast<double>(i) + q * h;
        for (int n = 0; n < quad::kOrder; ++n) {
          const double x = a + 0.5 * h * (1.0 + rule.nodes[n]);
          const double w = (x - (x0 + dx * static_cast<double>(i))) / dx;
          const cd v = (1.0 - w) * s[i] + w * s[i + 1];
          sum += 0.5 * h * rule.weights[n] * v * std::polar(1.0, -k * x);
        }
      }
    }
    out.push_back(p.amplitude_scale() * sum / std::sqrt(2.0 * kPi));
  }
  return out;
}

std::vector<cd> mode_spectrum(const PulseProfile& p, std::span<const Point2> k_grid) {
  if (p.dimension() != 2) throw InvalidParameter("2-D wavevectors need a 2-D profile");
  std::vector<cd> out;
  out.reserve(k_grid.size());
  for (const Point2& k : k_grid) {
    out.push_back(p.amplitude_scale() * gaussian_axis_spectrum(k[0], p.center(0), p.sigma(0)) *
                  gaussian_axis_spectrum(k[1], p.center(1), p.sigma(1)));
  }
  return out;
}

}  // namespace xpm
