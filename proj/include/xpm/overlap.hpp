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

// Overlaps between the actual output state of a cross-phase-modulation
// interaction and the ideal phase-shifted output state.
//
// Coherent state alpha with a single photon f:
//
//   <Phi0(theta)|Phi_out> = Integral dy |f(y)|^2 exp{E(y, theta)},
//   E(y, theta) = Integral dx |alpha(x)|^2 (exp{i(theta - phi(x, y))} - 1)
//               = e^{i theta} D(y) + nbar (e^{i theta} - 1),
//   D(y)        = Integral dx |alpha(x)|^2 (exp{-i phi(x, y)} - 1).
//
// D is independent of theta and is cached per outer node, so a whole
// fidelity curve costs one set of inner integrals. Writing the exponent this
// way never forms exp(-nbar) * exp(nbar * ...) and stays accurate for nbar
// up to 1e6.
//
// Photon pair: <Phi_in|Phi_out> = Integral |f1|^2 |f2|^2 exp{-i phi}.

#include <complex>
#include <map>
#include <optional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xpm/phase_field.hpp"
#include "xpm/pulses.hpp"
#include "xpm/quadrature.hpp"

namespace xpm {

namespace flags {
inline constexpr unsigned kNone = 0;
inline constexpr unsigned kBoundaryDegenerate = 1u << 0;
inline constexpr unsigned kLowPassThrough = 1u << 1;
inline constexpr unsigned kNotConverged = 1u << 2;
inline constexpr unsigned kFailed = 1u << 3;
inline constexpr unsigned kFlat = 1u << 4;
inline constexpr unsigned kExactLimit = 1u << 5;
}  // namespace flags

/// "none" or '|'-joined flag names.
std::string flag_names(unsigned f);

struct OverlapResult {
  std::complex<double> value;
  double fidelity = 0.0;        // |value|^2
  double error_estimate = 0.0;  // absolute bound on |value| error
  unsigned flags = flags::kNone;
};

OverlapResult make_result(std::complex<double> value, double error, unsigned f = flags::kNone);

struct OverlapOptions {
  quad::Options inner{};
  quad::Options outer{};
  /// Pass-through fraction below which kLowPassThrough is raised.
  double pass_through_warning = 1e-3;
};

/// A fidelity functional theta -> overlap. Implementations cache
/// theta-independent inner integrals and are therefore not thread-safe.
class OverlapModel {
 public:
  virtual ~OverlapModel() = default;
  virtual OverlapResult at(double theta) = 0;
  /// False when the overlap does not depend on theta (photon pairs).
  virtual bool theta_dependent() const { return true; }
};

/// Shared outer integral for 1-D coherent/single-photon overlaps. Subclasses
/// supply D(y).
class CoherentPhotonBase : public OverlapModel {
 public:
  OverlapResult at(double theta) override;

  double nbar() const { return nbar_; }
  /// D(y) with its quadrature estimate, cached per node.
  const quad::Estimate<std::complex<double>>& core(double y);

 protected:
  CoherentPhotonBase(PulseProfile alpha, PulseProfile f, OverlapOptions opts);
  virtual quad::Estimate<std::complex<double>> compute_core(double y) const = 0;

  PulseProfile alpha_;
  PulseProfile f_;
  OverlapOptions opts_;
  double nbar_;
  unsigned base_flags_ = flags::kNone;

 private:
  std::map<double, quad::Estimate<std::complex<double>>> cache_;
};

/// Generic 1-D coherent/single-photon overlap for any longitudinal field.
class CoherentPhotonModel : public CoherentPhotonBase {
 public:
  CoherentPhotonModel(PulseProfile alpha, PulseProfile f, PhaseField field, OverlapOptions opts = {});

 protected:
  quad::Estimate<std::complex<double>> compute_core(double y) const override;

 private:
  PhaseField field_;
};

/// Co-propagating pulses with phi = chi_t g_eps(x - y). The inner integral is
/// done in u = (x - y) / (2 sqrt(eps)) around the spike, so eps can go down to
/// 1e-20 without the outer grid resolving it.
class CopropagatingModel : public CoherentPhotonBase {
 public:
  CopropagatingModel(PulseProfile alpha, PulseProfile f, double chi_t, double epsilon, OverlapOptions opts = {});

  double spike_amplitude() const { return amplitude_; }
  bool narrow() const { return narrow_; }

 protected:
  quad::Estimate<std::complex<double>> compute_core(double y) const override;

 private:
  double chi_t_;
  double epsilon_;
  double amplitude_;
  bool narrow_;
  std::complex<double> spike_;
};

/// Completed pass-through with a transverse regularized delta; 2-D profiles.
class TransverseModel : public OverlapModel {
 public:
  TransverseModel(PulseProfile alpha, PulseProfile f, PhaseField field, OverlapOptions opts = {});
  OverlapResult at(double theta) override;

  double nbar() const { return nbar_; }
  /// True when the coherent envelope is isotropic and the outer integral
  /// reduces to one radial dimension.
  /// True when the coherent envelope is isotropic and the outer integral
  /// reduces to one radial dimension.
  bool radial() const { return radial_; }
  const quad::Estimate<std::complex<double>>& core(Point2 y);

 private:
  quad::Estimate<std::complex<double>> compute_core(Point2 y) const;
  // Integral of |f|^2 over the circle of radius r about the coherent center.
  double photon_ring(double r);

  PulseProfile alpha_;
  PulseProfile f_;
  PhaseField field_;
  OverlapOptions opts_;
  double nbar_;
  double amplitude_;
  bool radial_;
  std::map<std::pair<double, double>, quad::Estimate<std::complex<double>>> cache_;
  std::map<double, double> rings_;
};

/// Photon pair; theta-independent.
class PhotonPhotonModel : public OverlapModel {
 public:
  PhotonPhotonModel(PulseProfile f1, PulseProfile f2, PhaseField field, OverlapOptions opts = {});
  OverlapResult at(double theta) override;
  bool theta_dependent() const override { return false; }

 private:
  PulseProfile f1_;
  PulseProfile f2_;
  PhaseField field_;
  OverlapOptions opts_;
  std::optional<OverlapResult> result_;
};

/// Integral (exp{-i A e^{-u^2}} - 1) du over the real line.
std::complex<double> gaussian_spike_integral(double amplitude);

/// Integral_0^inf (exp{-i A e^{-s}} - 1) ds, the planar counterpart:
/// 2 Integral u (exp{-i A e^{-u^2}} - 1) du over u >= 0.
std::complex<double> radial_spike_integral(double amplitude);

OverlapResult photon_photon_overlap(const PulseProfile& f1, const PulseProfile& f2, const PhaseField& field,
                                    const OverlapOptions& opts = {});

OverlapResult coherent_photon_overlap(const PulseProfile& alpha, const PulseProfile& f, const PhaseField& field,
                                      double theta, const OverlapOptions& opts = {});

OverlapResult copropagating_overlap(const PulseProfile& alpha, const PulseProfile& f, double chi_t, double epsilon,
                                    double theta, const OverlapOptions& opts = {});

/// exp{nbar (e^{i theta} - 1)}: the overlap in the exact transverse-delta
/// limit, where the phase is supported on a null set.
OverlapResult transverse_exact_limit(double nbar, double theta);

struct CurvePoint {
  double theta = 0.0;
  OverlapResult result;
  bool failed = false;
  std::string error;
};

/// Evaluates the model at every theta in order. A failing point is recorded
/// with kFailed and does not stop the remaining points.
std::vector<CurvePoint> fidelity_curve(OverlapModel& model, std::span<const double> thetas);

}  // namespace xpm
