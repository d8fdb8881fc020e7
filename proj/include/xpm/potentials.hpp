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

// Two-body interaction kernels Delta(u) and their line integrals.
//
// All 1-D kinds integrate to the strength chi. The Gaussian regularization of
// the delta function uses
//
//   g_eps(u) = (2 sqrt(pi eps))^(-1) exp(-u^2 / (4 eps)),
//
// and the transverse kind is the isotropic 2-D product of two such factors.

#include <vector>

namespace xpm {

enum class KernelKind { contact, gaussian_regularized, top_hat, transverse_contact };

class InteractionKernel {
 public:
  static InteractionKernel contact(double chi);
  static InteractionKernel gaussian_regularized(double chi, double epsilon);
  static InteractionKernel top_hat(double chi, double range);
  static InteractionKernel transverse_contact(double chi, double epsilon);

  KernelKind kind() const { return kind_; }
  double strength() const { return chi_; }
  double epsilon() const { return epsilon_; }
  double range() const { return range_; }

  /// Offsets u at which the kernel (or, for Gaussians, its bulk) changes
  /// character; used to place quadrature breakpoints.
  std::vector<double> kinks() const;

  /// Length over which the kernel falls off: 0 for contact, 2 sqrt(eps) for
  /// Gaussians, the range for top-hat.
  double width() const;

 private:
  InteractionKernel(KernelKind kind, double chi, double epsilon, double range)
      : kind_(kind), chi_(chi), epsilon_(epsilon), range_(range) {}

  KernelKind kind_;
  double chi_;
  double epsilon_;
  double range_;
};

/// Pointwise kernel value. For the transverse kind `u` is the radial
/// distance in the transverse plane. Throws UnsupportedOperation for the
/// exact contact kernel.
double evaluate_kernel(const InteractionKernel& k, double u);

/// Integral of the kernel over a <= u <= b. An exact delta sitting on an
/// endpoint counts one half of chi. For the transverse kind this is the
/// integral over the slab a <= u_x <= b of the 2-D kernel.
double integrated_kernel(const InteractionKernel& k, double a, double b);

/// True when [a, b] has the contact delta exactly on an endpoint.
bool contact_boundary(const InteractionKernel& k, double a, double b);

}  // namespace xpm
