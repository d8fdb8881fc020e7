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

#include "xpm/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "xpm/errors.hpp"

namespace xpm {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(double chi) {
  if (!std::isfinite(chi)) throw InvalidParameter("interaction strength must be finite");
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw InvalidParameter(what);
}

// (1/2)[erf(b/s) - erf(a/s)] without cancellation in the tails.
double erf_window(double a, double b, double s) {
  if (a >= 0.0) return 0.5 * (std::erfc(a / s) - std::erfc(b / s));
  if (b <= 0.0) return 0.5 * (std::erfc(-b / s) - std::erfc(-a / s));
  return 0.5 * (std::erf(b / s) - std::erf(a / s));
}

}  // namespace

InteractionKernel InteractionKernel::contact(double chi) {
  require_finite(chi);
  return {KernelKind::contact, chi, 0.0, 0.0};
}

InteractionKernel InteractionKernel::gaussian_regularized(double chi, double epsilon) {
  require_finite(chi);
  require_positive(epsilon, "regularization epsilon must be positive");
  return {KernelKind::gaussian_regularized, chi, epsilon, 0.0};
}

InteractionKernel InteractionKernel::top_hat(double chi, double range) {
  require_finite(chi);
  require_positive(range, "top-hat range must be positive");
  return {KernelKind::top_hat, chi, 0.0, range};
}

InteractionKernel InteractionKernel::transverse_contact(double chi, double epsilon) {
  require_finite(chi);
  require_positive(epsilon, "transverse regularization epsilon must be positive");
  return {KernelKind::transverse_contact, chi, epsilon, 0.0};
}

std::vector<double> InteractionKernel::kinks() const {
  switch (kind_) {
    case KernelKind::top_hat:
      return {-range_, range_};
    default:
      return {0.0};
  }
}

double InteractionKernel::width() const {
  switch (kind_) {
    case KernelKind::contact:
      return 0.0;
    case KernelKind::top_hat:
      return range_;
    default:
      return 2.0 * std::sqrt(epsilon_);
  }
}

double evaluate_kernel(const InteractionKernel& k, double u) {
  switch (k.kind()) {
    case KernelKind::contact:
      throw UnsupportedOperation("the exact contact kernel has no pointwise value; use integrated_kernel");
    case KernelKind::gaussian_regularized:
      return k.strength() / (2.0 * std::sqrt(kPi * k.epsilon())) * std::exp(-u * u / (4.0 * k.epsilon()));
    case KernelKind::top_hat: {
      const double a = std::abs(u);
      const double level = k.strength() / (2.0 * k.range());
      if (a < k.range()) return level;
      return a == k.range() ? 0.5 * level : 0.0;
    }
    case KernelKind::transverse_contact:
      return k.strength() / (4.0 * kPi * k.epsilon()) * std::exp(-u * u / (4.0 * k.epsilon()));
  }
  return 0.0;
}

double integrated_kernel(const InteractionKernel& k, double a, double b) {
  if (b < a) throw InvalidParameter("integrated_kernel needs a <= b");
  switch (k.kind()) {
    case KernelKind::contact:
      if (a == b) return 0.0;
      if (a < 0.0 && b > 0.0) return k.strength();
      if (a == 0.0 || b == 0.0) return 0.5 * k.strength();
      return 0.0;
    case KernelKind::gaussian_regularized:
    case KernelKind::transverse_contact:
      return k.strength() * erf_window(a, b, 2.0 * std::sqrt(k.epsilon()));
    case KernelKind::top_hat: {
      const double lo = std::max(a, -k.range());
      const double hi = std::min(b, k.range());
      return hi > lo ? k.strength() * (hi - lo) / (2.0 * k.range()) : 0.0;
    }
  }
  return 0.0;
}

bool contact_boundary(const InteractionKernel& k, double a, double b) {
  return k.kind() == KernelKind::contact && a != b && (a == 0.0 || b == 0.0);
}

}  // namespace xpm
