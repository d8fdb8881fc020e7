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

// Co-propagating overlap with a Gaussian-regularized contact phase.
//
// phi(x, y) = chi_t g_eps(x - y) vanishes outside a window of a few sqrt(eps)
// around x = y, so D(y) only sees that window. In u = (x - y) / (2 sqrt(eps)),
//
//   D(y) = 2 sqrt(eps) Integral |alpha(y + 2 sqrt(eps) u)|^2 (exp{-i A e^{-u^2}} - 1) du,
//   A    = chi_t / (2 sqrt(pi eps)).
//
// When the window is far below the envelope scale, |alpha|^2 is constant over
// it and D(y) = 2 sqrt(eps) |alpha(y)|^2 J(A) with J the spike integral below.

#include <cmath>
#include <numbers>

#include "xpm/errors.hpp"
#include "xpm/overlap.hpp"

namespace xpm {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// Spike window in u; the phase there is below A e^{-36}.
constexpr double kWindow = 6.0;
// Relative envelope variation tolerated across the window before the
// factorized form is abandoned.
constexpr double kNarrowEpsilon = 1e-12;

cd minus_i_phase_minus_one(double phase) {
  const double s = std::sin(0.5 * phase);
  return {-2.0 * s * s, -std::sin(phase)};
}

cd spike_direct(double a) {
  quad::Options o;
  o.abs_tol = 1e-15;
  o.rel_floor = 1e-15;
  const double cuts[] = {-8.0, -3.0, -1.0, 0.0, 1.0, 3.0, 8.0};
  return quad::integrate_pieces<cd>([&](double u) { return minus_i_phase_minus_one(a * std::exp(-u * u)); }, cuts, o)
      .value;
}

// Large-amplitude route. With s = u^2 and w = A e^{-s} the half-line integral
// becomes (1/2) Integral_0^A (e^{-iw} - 1) h(w) dw, h(w) = 1 / (w sqrt(ln(A/w))).
// The piece w < 1 is smooth in s; on [1, A] the oscillatory part is moved onto
// the vertical rays Re w = 1 and Re w = A, where e^{-iw} decays.
cd spike_contour(double a) {
  const double ln_a = std::log(a);
  quad::Options o;
  o.abs_tol = 1e-15;
  o.rel_floor = 1e-15;

  const cd small_w = quad::integrate<cd>(
                         [&](double s) { return minus_i_phase_minus_one(std::exp(-s)) / std::sqrt(ln_a + s); },
                         0.0, 40.0, o)
                         .value;

  const cd ray_one = quad::integrate<cd>(
                         [&](double r) {
                           const cd log_term{ln_a - 0.5 * std::log1p(r * r), std::atan(r)};
                           return std::exp(-r) / (cd{1.0, -r} * std::sqrt(log_term));
                         },
                         0.0, 50.0, o)
                         .value;

  // r = tau^2 removes the inverse-square-root singularity at w = A.
  const cd ray_a = quad::integrate<cd>(
                       [&](double tau) {
                         const double r = tau * tau;
                         const double q = r / a;
                         const cd log_term{-0.5 * std::log1p(q * q), std::atan(q)};
                         return 2.0 * tau * std::exp(-r) / (cd{a, -r} * std::sqrt(log_term));
                       },
                       0.0, 8.0, o)
                       .value;

  const cd i{0.0, 1.0};
  const cd oscillatory = -i * std::polar(1.0, -1.0) * ray_one + i * std::polar(1.0, -a) * ray_a;
  const cd half = 0.5 * small_w + 0.5 * oscillatory - std::sqrt(ln_a);
  return 2.0 * half;
}

}  // namespace

cd gaussian_spike_integral(double amplitude) {
  if (!std::isfinite(amplitude)) throw InvalidParameter("spike amplitude must be finite");
  if (amplitude == 0.0) return {0.0, 0.0};
  if (amplitude < 0.0) return std::conj(gaussian_spike_integral(-amplitude));
  return amplitude < 4.0 ? spike_direct(amplitude) : spike_contour(amplitude);
}

CopropagatingModel::CopropagatingModel(PulseProfile alpha, PulseProfile f, double chi_t, double epsilon,
                                       OverlapOptions opts)
    : CoherentPhotonBase(std::move(alpha), std::move(f), opts), chi_t_(chi_t), epsilon_(epsilon) {
  if (!std::isfinite(chi_t)) throw InvalidParameter("chi_t must be finite");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw InvalidParameter("regularization epsilon must be positive");
  amplitude_ = chi_t_ / (2.0 * std::sqrt(kPi * epsilon_));
  const double scale = alpha_.feature_scale();
  narrow_ = epsilon_ <= kNarrowEpsilon * scale * scale;
  spike_ = narrow_ ? gaussian_spike_integral(amplitude_) : cd{};
}

quad::Estimate<cd> CopropagatingModel::compute_core(double y) const {
  quad::Estimate<cd> e;
  e.converged = true;
  if (chi_t_ == 0.0) return e;
  const double width = 2.0 * std::sqrt(epsilon_);
  if (narrow_) {
    e.value = width * alpha_.intensity(y) * spike_;
    e.error = 1e-12 * std::abs(e.value);
    e.magnitude = std::abs(e.value);
    return e;
  }
  quad::Options o = opts_.inner;
  o.abs_tol = opts_.inner.abs_tol / width;
  const double cuts[] = {-kWindow, -3.0, -1.0, 0.0, 1.0, 3.0, kWindow};
  e = quad::integrate_pieces<cd>(
      [&](double u) {
        return alpha_.intensity(y + width * u) * minus_i_phase_minus_one(amplitude_ * std::exp(-u * u));
      },
      cuts, o);
  e.value *= width;
  e.error *= width;
  e.magnitude *= width;
  return e;
}

}  // namespace xpm
