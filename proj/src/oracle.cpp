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

#include "xpm/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "xpm/errors.hpp"

namespace xpm {

namespace {

using cd = std::complex<double>;

template <class T>
T romberg(const std::function<T(double)>& f, double a, double b, double tol) {
  if (!(b > a)) return T{};
  constexpr int kMaxLevels = 10;
  int cells = 16;
  double h = (b - a) / cells;
  T sum{};
  for (int k = 0; k < cells; ++k) sum += f(a + (k + 0.5) * h);
  std::vector<T> prev{sum * h};
  for (int level = 1; level <= kMaxLevels; ++level) {
    // Tripling keeps the old midpoints; add the two new points per old cell.
    T add{};
    for (int k = 0; k < cells; ++k) {
      const double left = a + k * h;
      add += f(left + h / 6.0) + f(left + 5.0 * h / 6.0);
    }
    sum += add;
    cells *= 3;
    h /= 3.0;
    std::vector<T> row{sum * h};
    double factor = 1.0;
    for (std::size_t j = 1; j <= prev.size(); ++j) {
      factor *= 9.0;
      row.push_back(row[j - 1] + (row[j - 1] - prev[j - 1]) / (factor - 1.0));
    }
    const double diff = std::abs(row.back() - prev.back());
    if (diff <= tol * std::max(1.0, std::abs(row.back()))) return row.back();
    prev = std::move(row);
  }
  return prev.back();
}

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

}  // namespace

double midpoint_romberg(const std::function<double(double)>& f, double a, double b, double tol) {
  return romberg<double>(f, a, b, tol);
}

cd midpoint_romberg(const std::function<cd(double)>& f, double a, double b, double tol) {
  return romberg<cd>(f, a, b, tol);
}

DiscreteModeGrid DiscreteModeGrid::build(const PulseProfile& alpha, const PulseProfile& f, int bins) {
  if (bins < 1) throw InvalidParameter("discrete mode grid needs at least one bin");
  if (alpha.dimension() != 1 || f.dimension() != 1) throw InvalidParameter("discrete modes are 1-D");
  const auto [a0, a1] = alpha.support();
  const auto [f0, f1] = f.support();
  const double lo = std::min(a0, f0);
  const double hi = std::max(a1, f1);
  DiscreteModeGrid g;
  g.bin_count = bins;
  g.origin = lo;
  g.bin_width = (hi - lo) / bins;
  const double root = std::sqrt(g.bin_width);
  g.centers.resize(bins);
  g.beta.resize(bins);
  g.weights.resize(bins);
  for (int i = 0; i < bins; ++i) {
    const double z = lo + (i + 0.5) * g.bin_width;
    g.centers[i] = z;
    g.beta[i] = alpha(z) * root;
    g.weights[i] = f.intensity(z) * g.bin_width;
  }
  return g;
}

PhaseMatrix::PhaseMatrix(const DiscreteModeGrid& grid, const PhaseField& field)
    : size_(static_cast<std::size_t>(grid.bin_count)), data_(size_ * size_) {
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) data_[i * size_ + j] = field.phi(grid.centers[i], grid.centers[j]);
  }
}

cd coherent_inner(cd a, cd b) { return std::exp(-0.5 * std::norm(a) - 0.5 * std::norm(b) + std::conj(a) * b); }

cd discrete_mode_overlap(const DiscreteModeGrid& grid, const PhaseMatrix& phi, double theta) {
  if (phi.size() != grid.bin_count) throw InvalidParameter("phase matrix does not match the grid");
  cd total{};
  const cd ideal = std::polar(1.0, -theta);
  for (int j = 0; j < grid.bin_count; ++j) {
    if (grid.weights[j] == 0.0) continue;
    cd product{1.0, 0.0};
    for (int i = 0; i < grid.bin_count; ++i) {
      product *= coherent_inner(grid.beta[i] * ideal, grid.beta[i] * std::polar(1.0, -phi(i, j)));
    }
    total += grid.weights[j] * product;
  }
  return total;
}

DiscreteModeOracle::DiscreteModeOracle(const DiscreteModeGrid& grid, const PhaseMatrix& phi)
    : weights_(grid.weights), column_(grid.bin_count), mass_(0.0) {
  if (phi.size() != grid.bin_count) throw InvalidParameter("phase matrix does not match the grid");
  for (const cd& b : grid.beta) mass_ += std::norm(b);
  for (int j = 0; j < grid.bin_count; ++j) {
    cd s{};
    for (int i = 0; i < grid.bin_count; ++i) {
      const double h = std::sin(0.5 * phi(i, j));
      s += std::norm(grid.beta[i]) * cd{-2.0 * h * h, -std::sin(phi(i, j))};
    }
    column_[j] = s;
  }
}

cd DiscreteModeOracle::at(double theta) const {
  const cd rot = std::polar(1.0, theta);
  const double h = std::sin(0.5 * theta);
  const cd rot_minus_one{-2.0 * h * h, std::sin(theta)};
  cd total{};
  for (std::size_t j = 0; j < weights_.size(); ++j) {
    total += weights_[j] * std::exp(rot * column_[j] + mass_ * rot_minus_one);
  }
  return total;
}

SeriesOracle::SeriesOracle(PulseProfile alpha, PulseProfile f, PhaseField field)
    : alpha_(std::move(alpha)), f_(std::move(f)), field_(std::move(field)), nbar_(mean_photon_number(alpha_)) {
  if (alpha_.dimension() != 1 || f_.dimension() != 1) throw InvalidParameter("series oracle is 1-D");
  if (field_.geometry() != Geometry::longitudinal) throw InvalidParameter("series oracle is longitudinal");
  if (nbar_ > 30.0) throw InvalidParameter("series oracle is limited to nbar <= 30");
}

cd SeriesOracle::inner(double y) {
  auto it = cache_.find(y);
  if (it != cache_.end()) return it->second;
  const auto [lo, hi] = alpha_.support();
  std::vector<double> cuts{lo, hi};
  for (double b : field_.breakpoints(y)) {
    if (b > lo && b < hi) cuts.push_back(b);
  }
  std::sort(cuts.begin(), cuts.end());
  cd k{};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    k += midpoint_romberg(
        std::function<cd(double)>([&](double x) { return alpha_.intensity(x) * std::polar(1.0, -field_.phi(x, y)); }),
        cuts[i], cuts[i + 1], 1e-14);
  }
  cache_.emplace(y, k);
  return k;
}

SeriesResult SeriesOracle::at(double theta, int terms) {
  if (terms < 0) throw InvalidParameter("series needs N >= 0");
  SeriesResult r;
  r.tail_bound = nbar_ == 0.0 ? 0.0
                              : std::exp((terms + 1) * std::log(nbar_) - log_factorial(terms + 1));
  r.tail_warning = r.tail_bound > 1e-8;

  const cd rot = std::polar(1.0, theta);
  auto integrand = [&](double y) -> cd {
    const double w = f_.intensity(y);
    if (w == 0.0) return {};
    const cd i_y = rot * inner(y);
    cd term{1.0, 0.0};
    cd sum = term;
    for (int n = 1; n <= terms; ++n) {
      term *= i_y / static_cast<double>(n);
      sum += term;
    }
    return w * sum;
  };
  const auto [lo, hi] = f_.support();
  const auto [alo, ahi] = alpha_.support();
  std::vector<double> cuts{lo, hi};
  for (double c : {alo, ahi}) {
    if (c > lo && c < hi) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  cd total{};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    total += midpoint_romberg(std::function<cd(double)>(integrand), cuts[i], cuts[i + 1], 1e-14);
  }
  r.value = std::exp(-nbar_) * total;
  return r;
}

SeriesResult truncated_series_overlap(const PulseProfile& alpha, const PulseProfile& f, const PhaseField& field,
                                      double theta, int terms) {
  SeriesOracle oracle(alpha, f, field);
  return oracle.at(theta, terms);
}

}  // namespace xpm
