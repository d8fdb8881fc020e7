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

// Brute-force references for the coherent/single-photon overlap. Neither
// route shares quadrature code with the overlap engine: both use plain
// midpoint sums (the series route adds Richardson extrapolation).

#include <complex>
#include <functional>
#include <map>
#include <vector>

#include "xpm/phase_field.hpp"
#include "xpm/pulses.hpp"

namespace xpm {

/// Equal-width bins over the union of both supports.
struct DiscreteModeGrid {
  int bin_count = 0;
  double origin = 0.0;     // left edge of bin 0
  double bin_width = 0.0;
  std::vector<double> centers;
  std::vector<std::complex<double>> beta;  // alpha(z_i) sqrt(dz)
  std::vector<double> weights;             // |f(z_j)|^2 dz

  static DiscreteModeGrid build(const PulseProfile& alpha, const PulseProfile& f, int bins);
};

/// phi(z_i, z_j) for coherent bin i and photon bin j, row-major in i.
class PhaseMatrix {
 public:
  PhaseMatrix(const DiscreteModeGrid& grid, const PhaseField& field);
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * size_ + j]; }
  int size() const { return static_cast<int>(size_); }

 private:
  std::size_t size_;
  std::vector<double> data_;
};

/// <a|b> for single-mode coherent states.
std::complex<double> coherent_inner(std::complex<double> a, std::complex<double> b);

/// Sum_j w_j Prod_i <beta_i e^{-i theta} | beta_i e^{-i phi_ij}>, evaluated
/// literally as a product of single-mode overlaps.
std::complex<double> discrete_mode_overlap(const DiscreteModeGrid& grid, const PhaseMatrix& phi, double theta);

/// Same value as discrete_mode_overlap, with the theta-independent column
/// sums precomputed so a curve costs O(M) per point.
class DiscreteModeOracle {
 public:
  DiscreteModeOracle(const DiscreteModeGrid& grid, const PhaseMatrix& phi);
  std::complex<double> at(double theta) const;

 private:
  std::vector<double> weights_;
  std::vector<std::complex<double>> column_;  // Sum_i |beta_i|^2 (e^{-i phi_ij} - 1)
  double mass_;
};

struct SeriesResult {
  std::complex<double> value;
  double tail_bound = 0.0;  // nbar^(N+1) / (N+1)!
  bool tail_warning = false;  // tail_bound > 1e-8
};

/// Photon-number series truncated after N terms:
/// e^{-nbar} Integral dy |f(y)|^2 Sum_{n<=N} I(y)^n / n!.
/// Requires nbar <= 30.
class SeriesOracle {
 public:
  SeriesOracle(PulseProfile alpha, PulseProfile f, PhaseField field);
  SeriesResult at(double theta, int terms);

 private:
  std::complex<double> inner(double y);

  PulseProfile alpha_;
  PulseProfile f_;
  PhaseField field_;
  double nbar_;
  std::map<double, std::complex<double>> cache_;
};

SeriesResult truncated_series_overlap(const PulseProfile& alpha, const PulseProfile& f, const PhaseField& field,
                                      double theta, int terms);

/// Composite midpoint rule with Richardson extrapolation over cell tripling.
double midpoint_romberg(const std::function<double(double)>& f, double a, double b, double tol);
std::complex<double> midpoint_romberg(const std::function<std::complex<double>(double)>& f, double a, double b,
                                      double tol);

}  // namespace xpm
