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

#include "xpm/phase_field.hpp"

#include <cmath>

#include "xpm/errors.hpp"
#include "xpm/quadrature.hpp"

namespace xpm {

PhaseField PhaseField::longitudinal(const InteractionKernel& kernel, double v1, double v2, double t) {
  if (!std::isfinite(v1) || !std::isfinite(v2)) throw InvalidParameter("velocities must be finite");
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidParameter("elapsed time must be finite and non-negative");
  if (kernel.kind() == KernelKind::transverse_contact) {
    throw InvalidParameter("transverse kernel in a longitudinal phase field");
  }
  return {kernel, Geometry::longitudinal, v1 - v2, t};
}

PhaseField PhaseField::transverse(const InteractionKernel& kernel, double relative_velocity) {
  if (kernel.kind() != KernelKind::transverse_contact) {
    throw InvalidParameter("transverse geometry needs a transverse_contact kernel");
  }
  if (relative_velocity == 0.0 || !std::isfinite(relative_velocity)) {
    throw InvalidParameter("transverse pass-through needs a finite non-zero relative velocity");
  }
  return {kernel, Geometry::transverse, relative_velocity, 0.0};
}

PhaseField PhaseField::with_offset(double c) const {
  PhaseField f = *this;
  f.offset_ += c;
  return f;
}

double PhaseField::plateau() const {
  if (v_ == 0.0) throw UnsupportedOperation("no pass-through plateau for co-propagating pulses");
  return kernel_.strength() / std::abs(v_);
}

PhaseSample PhaseField::sample(double x, double y) const {
  if (geometry_ != Geometry::longitudinal) throw InvalidParameter("1-D phase query on a transverse field");
  const double d = x - y;
  if (v_ == 0.0) {
    if (kernel_.kind() == KernelKind::contact) {
      throw UnsupportedOperation(
          "co-propagating exact contact phase is a bare delta; use copropagating_overlap or a regularized kernel");
    }
    return {t_ * evaluate_kernel(kernel_, d) + offset_, false};
  }
  if (t_ == 0.0) return {offset_, false};
  const double end = d + v_ * t_;
  const double a = std::min(d, end);
  const double b = std::max(d, end);
  return {integrated_kernel(kernel_, a, b) / std::abs(v_) + offset_, contact_boundary(kernel_, a, b)};
}

double PhaseField::phi(Point2 x, Point2 y) const {
  if (geometry_ != Geometry::transverse) throw InvalidParameter("2-D phase query on a longitudinal field");
  const double r = std::hypot(x[0] - y[0], x[1] - y[1]);
  return evaluate_kernel(kernel_, r) / std::abs(v_) + offset_;
}

std::vector<double> PhaseField::breakpoints(double y) const {
  std::vector<double> out;
  if (geometry_ != Geometry::longitudinal) return out;
  const double w = kernel_.width();
  for (double k : kernel_.kinks()) {
    if (v_ == 0.0) {
      out.push_back(y + k);
      if (kernel_.kind() == KernelKind::gaussian_regularized) {
        for (double m : {1.0, 3.0, 6.0}) {
          out.push_back(y + k - m * w);
          out.push_back(y + k + m * w);
        }
      }
      continue;
    }
    // d = x - y at which an end of the swept interval [d, d + v t] hits k.
    out.push_back(y + k);
    out.push_back(y + k - v_ * t_);
    if (kernel_.kind() == KernelKind::gaussian_regularized) {
      for (double m : {-3.0, 3.0}) {
        out.push_back(y + k + m * w);
        out.push_back(y + k - v_ * t_ + m * w);
      }
    }
  }
  return out;
}

double pass_through_fraction(const PhaseField& field, const PulseProfile& p1, const PulseProfile& p2) {
  if (field.geometry() != Geometry::longitudinal) throw InvalidParameter("pass-through fraction is longitudinal");
  const double v = field.relative_velocity();
  if (v == 0.0) throw InvalidParameter("pass-through fraction needs a non-zero relative velocity");
  const double nbar = mean_photon_number(p1);
  if (!(nbar > 0.0)) return 0.0;
  const double sweep = v * field.elapsed();
  // Plateau region: x - y between min(0, -v t) and max(0, -v t).
  const double lo_off = std::min(0.0, -sweep);
  const double hi_off = std::max(0.0, -sweep);
  if (hi_off == lo_off) return 0.0;

  quad::Options opts;
  opts.abs_tol = 1e-13;
  const auto [a1, b1] = p1.support();
  const auto [a2, b2] = p2.support();
  auto inner = [&](double y) {
    const double lo = std::max(a1, y + lo_off);
    const double hi = std::min(b1, y + hi_off);
    if (!(hi > lo)) return 0.0;
    return quad::integrate<double>([&](double x) { return p1.intensity(x); }, lo, hi, opts).value;
  };
  const double cut_vals[] = {a1 - lo_off, b1 - lo_off, a1 - hi_off, b1 - hi_off};
  const auto cuts = quad::make_cuts(a2, b2, cut_vals);
  const auto outer = quad::integrate_pieces<double>([&](double y) { return p2.intensity(y) * inner(y); }, cuts, opts);
  return outer.value / (nbar * mean_photon_number(p2));
}

}  // namespace xpm
