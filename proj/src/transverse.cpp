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

// Transverse pass-through overlap. phi = (chi/|v|) g(|x - y|) with the 2-D
// regularized delta g(r) = exp(-r^2 / (4 eps)) / (4 pi eps). D(y) is taken in
// polar coordinates about y with r = 2 sqrt(eps) u, so the phase is
// A e^{-u^2}, A = chi / (|v| 4 pi eps).

#include <algorithm>
#include <cmath>
#include <numbers>

#include <gsl/gsl_sf_expint.h>

#include "xpm/errors.hpp"
#include "xpm/overlap.hpp"

namespace xpm {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kWindow = 6.0;

cd minus_i_phase_minus_one(double phase) {
  const double s = std::sin(0.5 * phase);
  return {-2.0 * s * s, -std::sin(phase)};
}

bool isotropic(const PulseProfile& p) { return p.sigma(0) == p.sigma(1); }

}  // namespace

cd radial_spike_integral(double amplitude) {
  if (amplitude < 0.0) return std::conj(radial_spike_integral(-amplitude));
  if (amplitude == 0.0) return {};
  if (amplitude < 1.0) {
    cd term = 1.0;
    cd sum = 0.0;
    for (int n = 1; n < 40; ++n) {
      term *= cd(0.0, -amplitude) / static_cast<double>(n);
      sum += term / static_cast<double>(n);
      if (std::abs(term) < 1e-18) break;
    }
    return sum;
  }
  // Integral_0^A (e^{-iw} - 1) / w dw = Ci(A) - gamma - ln A - i Si(A)
  return {gsl_sf_Ci(amplitude) - std::numbers::egamma - std::log(amplitude), -gsl_sf_Si(amplitude)};
}

TransverseModel::TransverseModel(PulseProfile alpha, PulseProfile f, PhaseField field, OverlapOptions opts)
    : alpha_(std::move(alpha)), f_(std::move(f)), field_(std::move(field)), opts_(opts) {
  if (alpha_.dimension() != 2 || f_.dimension() != 2) throw InvalidParameter("transverse overlap needs 2-D profiles");
  if (field_.geometry() != Geometry::transverse) throw InvalidParameter("transverse overlap needs a transverse field");
  if (std::abs(mean_photon_number(f_) - 1.0) > 1e-8) {
    throw InvalidParameter("single-photon profile must be unit-normalized");
  }
  nbar_ = mean_photon_number(alpha_);
  amplitude_ = field_.plateau() / (4.0 * kPi * field_.kernel().epsilon());
  // An isotropic coherent envelope makes D depend only on the distance to
  // its center; the photon envelope then enters through ring averages.
  radial_ = isotropic(alpha_);
}

double TransverseModel::photon_ring(double r) {
  auto it = rings_.find(r);
  if (it != rings_.end()) return it->second;
  const Point2 c{alpha_.center(0), alpha_.center(1)};
  double value = 0.0;
  if (r == 0.0) {
    value = 2.0 * kPi * f_.intensity(c);
  } else {
    value = quad::integrate<double>(
                [&](double psi) { return f_.intensity(Point2{c[0] + r * std::cos(psi), c[1] + r * std::sin(psi)}); },
                0.0, 2.0 * kPi, opts_.outer)
                .value;
  }
  rings_.emplace(r, value);
  return value;
}

const quad::Estimate<cd>& TransverseModel::core(Point2 y) {
  const auto key = std::make_pair(y[0], y[1]);
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, compute_core(y)).first;
  return it->second;
}

quad::Estimate<cd> TransverseModel::compute_core(Point2 y) const {
  quad::Estimate<cd> e;
  e.converged = true;
  const double offset = field_.offset();
  if (field_.kernel().strength() != 0.0) {
    const double eps = field_.kernel().epsilon();
    const double step = 2.0 * std::sqrt(eps);
    const double jacobian = 4.0 * eps;

    quad::Options radial_opts = opts_.inner;
    radial_opts.abs_tol = opts_.inner.abs_tol / jacobian;
    quad::Options angle_opts = opts_.inner;
    angle_opts.abs_tol = radial_opts.abs_tol / (2.0 * kWindow);

    bool angles_converged = true;
    auto ring = [&](double u) -> double {
      const double r = step * u;
      const auto a = quad::integrate<double>(
          [&](double psi) { return alpha_.intensity(Point2{y[0] + r * std::cos(psi), y[1] + r * std::sin(psi)}); },
          0.0, 2.0 * kPi, angle_opts);
      angles_converged = angles_converged && a.converged;
      return a.value;
    };
    // The spike is integrated in closed form against the ring average at
    // the center; only the smooth remainder goes through quadrature.
    const double center = 2.0 * kPi * alpha_.intensity(y);
    const double cuts[] = {0.0, 1.0, 2.0, 3.0, kWindow};
    e = quad::integrate_pieces<cd>(
        [&](double u) {
          return u * (ring(u) - center) * minus_i_phase_minus_one(amplitude_ * std::exp(-u * u));
        },
        cuts, radial_opts);
    e.value = jacobian * (e.value + 0.5 * center * radial_spike_integral(amplitude_));
    e.error *= jacobian;
    e.magnitude *= jacobian;
    e.converged = e.converged && angles_converged;
  }
  if (offset != 0.0) {
    // exp(-i(p + c)) - 1 = exp(-ic)(exp(-ip) - 1) + (exp(-ic) - 1)
    const cd shift = minus_i_phase_minus_one(offset);
    e.value = (1.0 + shift) * e.value + nbar_ * shift;
  }
  return e;
}

OverlapResult TransverseModel::at(double theta) {
  if (!std::isfinite(theta)) throw InvalidParameter("theta must be finite");
  const cd rot = std::polar(1.0, theta);
  const double sh = std::sin(0.5 * theta);
  const cd rot_minus_one{-2.0 * sh * sh, std::sin(theta)};

  double inner_error = 0.0;
  bool inner_converged = true;
  auto weight = [&](Point2 y) -> cd {
    const quad::Estimate<cd>& d = core(y);
    inner_error = std::max(inner_error, d.error);
    inner_converged = inner_converged && d.converged;
    const cd exponent = rot * d.value + nbar_ * rot_minus_one;
    if (exponent.real() > 1e-12 * (nbar_ + std::abs(d.value)) + d.error) {
      throw InvariantViolation("coherent overlap exponent has positive real part");
    }
    return f_.intensity(y) * std::exp(exponent);
  };

  quad::Estimate<cd> outer;
  if (radial_) {
    const Point2 c{alpha_.center(0), alpha_.center(1)};
    const double offset = std::hypot(f_.center(0) - c[0], f_.center(1) - c[1]);
    const double half = kSupportWidths * std::max(f_.sigma(0), f_.sigma(1));
    const double r_lo = std::max(0.0, offset - half);
    const double r_hi = offset + half;
    const double mid[] = {offset};
    const auto cuts = quad::make_cuts(r_lo, r_hi, mid);
    outer = quad::integrate_pieces<cd>(
        [&](double r) {
          const double ring = photon_ring(r);
          if (ring == 0.0) return cd{};
          const quad::Estimate<cd>& d = core(Point2{c[0] + r, c[1]});
          inner_error = std::max(inner_error, d.error);
          inner_converged = inner_converged && d.converged;
          const cd exponent = rot * d.value + nbar_ * rot_minus_one;
          if (exponent.real() > 1e-12 * (nbar_ + std::abs(d.value)) + d.error) {
            throw InvariantViolation("coherent overlap exponent has positive real part");
          }
          return r * ring * std::exp(exponent);
        },
        cuts, opts_.outer);
  } else {
    const auto [lo0, hi0] = f_.support(0);
    const auto [lo1, hi1] = f_.support(1);
    bool rows_converged = true;
    outer = quad::integrate<cd>(
        [&](double y0) {
          const auto row =
              quad::integrate<cd>([&](double y1) { return weight(Point2{y0, y1}); }, lo1, hi1, opts_.outer);
          rows_converged = rows_converged && row.converged;
          return row.value;
        },
        lo0, hi0, opts_.outer);
    outer.converged = outer.converged && rows_converged;
  }
  if (!outer.converged || !inner_converged) {
    throw NumericError("transverse overlap quadrature did not converge", outer.value, outer.error + inner_error);
  }
  return make_result(outer.value, outer.error + inner_error);
}

}  // namespace xpm
