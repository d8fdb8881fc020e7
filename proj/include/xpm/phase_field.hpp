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

// Accumulated interaction phase between a point x of pulse 1 and a point y of
// pulse 2. In the longitudinal geometry
//
//   phi(x, y) = Integral_0^t Delta(x - y + v t') dt',   v = v1 - v2,
//
// which for v != 0 is the kernel's line integral over the swept interval
// divided by |v|. In the transverse geometry the longitudinal motion is a
// completed pass-through and phi = (chi/|v|) g_eps(|x_T - y_T|).

#include <vector>

#include "xpm/potentials.hpp"
#include "xpm/pulses.hpp"

namespace xpm {

enum class Geometry { longitudinal, transverse };

struct PhaseSample {
  double value = 0.0;
  bool boundary_degenerate = false;
};

class PhaseField {
 public:
  /// Pulses with group velocities v1, v2 interacting for a time t >= 0.
  static PhaseField longitudinal(const InteractionKernel& kernel, double v1, double v2, double t);
  /// Completed pass-through at relative speed v != 0 with a transverse kernel.
  static PhaseField transverse(const InteractionKernel& kernel, double relative_velocity);

  /// Same field with a constant phase c added everywhere.
  PhaseField with_offset(double c) const;

  const InteractionKernel& kernel() const { return kernel_; }
  Geometry geometry() const { return geometry_; }
  double relative_velocity() const { return v_; }
  double elapsed() const { return t_; }
  double offset() const { return offset_; }

  /// chi / |v|: the phase a fully swept delta contributes.
  double plateau() const;

  PhaseSample sample(double x, double y) const;
  double phi(double x, double y) const { return sample(x, y).value; }
  double phi(Point2 x, Point2 y) const;

  /// Positions x where phi(., y) is discontinuous or changes character.
  std::vector<double> breakpoints(double y) const;

 private:
  PhaseField(const InteractionKernel& kernel, Geometry g, double v, double t)
      : kernel_(kernel), geometry_(g), v_(v), t_(t) {}

  InteractionKernel kernel_;
  Geometry geometry_;
  double v_;
  double t_;
  double offset_ = 0.0;
};

/// Probability mass of |alpha(z)|^2 |f(z')|^2 / nbar on the region where the
/// contact phase sits on its plateau chi/|v| (the delta crossing is swept).
double pass_through_fraction(const PhaseField& field, const PulseProfile& p1, const PulseProfile& p2);

}  // namespace xpm
