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

#include <cmath>
#include <limits>

#include "xpm/errors.hpp"

namespace xpm {

namespace {

using cd = std::complex<double>;

// exp(-i phi) - 1 without cancellation for small phi.
cd phase_factor_minus_one(double phi) {
  const double s = std::sin(0.5 * phi);
  return {-2.0 * s * s, -std::sin(phi)};
}

void require_unit_norm(const PulseProfile& f, const char* what) {
  if (std::abs(mean_photon_number(f) - 1.0) > 1e-8) throw InvalidParameter(what);
}

}  // namespace

std::string flag_names(unsigned f) {
  static const std::pair<unsigned, const char*> names[] = {
      {flags::kBoundaryDegenerate, "boundary_degenerate"},
      {flags::kLowPassThrough, "low_pass_through"},
      {flags::kNotConverged, "not_converged"},
      {flags::kFailed, "failed"},
      {flags::kFlat, "flat"},
      {flags::kExactLimit, "exact_limit"},
  };
  std::string out;
  for (const auto& [bit, name] : names) {
    if ((f & bit) == 0) continue;
    if (!out.empty()) out += '|';
    out += name;
  }
  return out.empty() ? "none" : out;
}

OverlapResult make_result(cd value, double error, unsigned f) {
  OverlapResult r;
  r.value = value;
  r.fidelity = std::norm(value);
  r.error_estimate = error;
  r.flags = f;
  return r;
}

CoherentPhotonBase::CoherentPhotonBase(PulseProfile alpha, PulseProfile f, OverlapOptions opts)
    : alpha_(std::move(alpha)), f_(std::move(f)), opts_(opts) {
  if (alpha_.dimension() != 1 || f_.dimension() != 1) {
    throw InvalidParameter("longitudinal overlaps need 1-D profiles");
  }
  require_unit_norm(f_, "single-photon profile must be unit-normalized");
  nbar_ = mean_photon_number(alpha_);
  if (!std::isfinite(nbar_)) throw InvalidParameter("coherent envelope must have finite mean photon number");
}

const quad::Estimate<cd>& CoherentPhotonBase::core(double y) {
  auto it = cache_.find(y);
  if (it == cache_.end()) it = cache_.emplace(y, compute_core(y)).first;
  return it->second;
}

OverlapResult CoherentPhotonBase::at(double theta) {
  if (!std::isfinite(theta)) throw InvalidParameter("theta must be finite");
  const cd rot = std::polar(1.0, theta);
  const double sh = std::sin(0.5 * theta);
  const cd rot_minus_one{-2.0 * sh * sh, std::sin(theta)};

  double inner_error = 0.0;
  bool inner_converged = true;
  auto integrand = [&](double y) -> cd {
    const quad::Estimate<cd>& d = core(y);
    inner_error = std::max(inner_error, d.error);
    inner_converged = inner_converged && d.converged;
    const cd exponent = rot * d.value + nbar_ * rot_minus_one;
    const double roundoff = 1e-12 * (nbar_ + std::abs(d.value)) + d.error;
    if (exponent.real() > roundoff) {
      throw InvariantViolation("coherent overlap exponent has positive real part");
    }
    return f_.intensity(y) * std::exp(exponent);
  };

  const auto [lo, hi] = f_.support();
  const auto [alo, ahi] = alpha_.support();
  const double extra[] = {alo, ahi};
  const auto cuts = quad::make_cuts(lo, hi, extra);
  const auto outer = quad::integrate_pieces<cd>(integrand, cuts, opts_.outer);
  if (!outer.converged || !inner_converged) {
    throw NumericError("coherent overlap quadrature did not converge", outer.value, outer.error + inner_error);
  }
  return make_result(outer.value, outer.error + inner_error, base_flags_);
}

CoherentPhotonModel::CoherentPhotonModel(PulseProfile alpha, PulseProfile f, PhaseField field, OverlapOptions opts)
    : CoherentPhotonBase(std::move(alpha), std::move(f), opts), field_(std::move(field)) {
  if (field_.geometry() != Geometry::longitudinal) {
    throw InvalidParameter("coherent_photon_overlap with a transverse field needs 2-D profiles (TransverseModel)");
  }
  if (field_.relative_velocity() == 0.0 && field_.kernel().kind() == KernelKind::contact) {
    throw UnsupportedOperation(
        "co-propagating exact contact kernel: use copropagating_overlap or a regularized kernel");
  }
  if (field_.relative_velocity() != 0.0 && nbar_ > 0.0 &&
      pass_through_fraction(field_, alpha_, f_) < 1.0 - opts_.pass_through_warning) {
    base_flags_ |= flags::kLowPassThrough;
  }
}

quad::Estimate<cd> CoherentPhotonModel::compute_core(double y) const {
  const auto [lo, hi] = alpha_.support();
  const auto bp = field_.breakpoints(y);
  const auto cuts = quad::make_cuts(lo, hi, bp);
  return quad::integrate_pieces<cd>(
      [&](double x) { return alpha_.intensity(x) * phase_factor_minus_one(field_.phi(x, y)); }, cuts,
      opts_.inner);
}

PhotonPhotonModel::PhotonPhotonModel(PulseProfile f1, PulseProfile f2, PhaseField field, OverlapOptions opts)
    : f1_(std::move(f1)), f2_(std::move(f2)), field_(std::move(field)), opts_(opts) {
  if (f1_.dimension() != 1 || f2_.dimension() != 1) throw InvalidParameter("photon pair overlap needs 1-D profiles");
  if (field_.geometry() != Geometry::longitudinal) throw InvalidParameter("photon pair overlap is longitudinal");
  require_unit_norm(f1_, "first photon profile must be unit-normalized");
  require_unit_norm(f2_, "second photon profile must be unit-normalized");
}

OverlapResult PhotonPhotonModel::at(double) {
  if (result_) return *result_;
  double inner_error = 0.0;
  bool inner_converged = true;
  bool degenerate = false;
  const auto [lo1, hi1] = f1_.support();
  auto inner = [&](double y) -> cd {
    const auto bp = field_.breakpoints(y);
    const auto cuts = quad::make_cuts(lo1, hi1, bp);
    const auto e = quad::integrate_pieces<cd>(
        [&](double x) {
          const PhaseSample s = field_.sample(x, y);
          degenerate = degenerate || s.boundary_degenerate;
          return f1_.intensity(x) * std::polar(1.0, -s.value);
        },
        cuts, opts_.inner);
    inner_error = std::max(inner_error, e.error);
    inner_converged = inner_converged && e.converged;
    return f2_.intensity(y) * e.value;
  };
  const auto [lo2, hi2] = f2_.support();
  const double extra[] = {lo1, hi1};
  const auto cuts = quad::make_cuts(lo2, hi2, extra);
  const auto outer = quad::integrate_pieces<cd>(inner, cuts, opts_.outer);
  if (!outer.converged || !inner_converged) {
    throw NumericError("photon pair overlap quadrature did not converge", outer.value, outer.error + inner_error);
  }
  result_ = make_result(outer.value, outer.error + inner_error,
                        degenerate ? flags::kBoundaryDegenerate : flags::kNone);
  return *result_;
}

OverlapResult photon_photon_overlap(const PulseProfile& f1, const PulseProfile& f2, const PhaseField& field,
                                    const OverlapOptions& opts) {
  PhotonPhotonModel model(f1, f2, field, opts);
  return model.at(0.0);
}

OverlapResult coherent_photon_overlap(const PulseProfile& alpha, const PulseProfile& f, const PhaseField& field,
                                      double theta, const OverlapOptions& opts) {
  if (field.geometry() == Geometry::transverse) {
    TransverseModel model(alpha, f, field, opts);
    return model.at(theta);
  }
  CoherentPhotonModel model(alpha, f, field, opts);
  return model.at(theta);
}

OverlapResult copropagating_overlap(const PulseProfile& alpha, const PulseProfile& f, double chi_t, double epsilon,
                                    double theta, const OverlapOptions& opts) {
  CopropagatingModel model(alpha, f, chi_t, epsilon, opts);
  return model.at(theta);
}

OverlapResult transverse_exact_limit(double nbar, double theta) {
  if (!(nbar >= 0.0) || !std::isfinite(nbar)) throw InvalidParameter("mean photon number must be non-negative");
  const double sh = std::sin(0.5 * theta);
  const cd exponent = nbar * cd{-2.0 * sh * sh, std::sin(theta)};
  return make_result(std::exp(exponent), 0.0, flags::kExactLimit);
}

std::vector<CurvePoint> fidelity_curve(OverlapModel& model, std::span<const double> thetas) {
  std::vector<CurvePoint> out;
  out.reserve(thetas.size());
  for (double theta : thetas) {
    CurvePoint p;
    p.theta = theta;
    try {
      p.result = model.at(theta);
    } catch (const NumericError& e) {
      p.failed = true;
      p.error = e.what();
      p.result = make_result(e.partial(), e.residual(), flags::kFailed | flags::kNotConverged);
    } catch (const std::exception& e) {
      p.failed = true;
      p.error = e.what();
      p.result = make_result({std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()},
                             std::numeric_limits<double>::infinity(), flags::kFailed);
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace xpm
