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

// Composite Gauss-Legendre quadrature with deterministic panel doubling.
//
// Every integral is refined by doubling the number of equal-width panels of
// a fixed 16-point rule until two successive levels agree. The node set at a
// given level depends only on the interval and the level, so repeated
// evaluations of the same integrand reproduce the same bits.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <type_traits>
#include <vector>

namespace xpm::quad {

inline constexpr int kOrder = 16;

struct Rule {
  std::array<double, kOrder> nodes;    // on [-1, 1], ascending
  std::array<double, kOrder> weights;
};

/// The 16-point Gauss-Legendre rule (computed once by Newton iteration).
const Rule& gauss_legendre16();

struct Options {
  double abs_tol = 1e-10;
  // Roundoff floor relative to the integral of |integrand|; keeps the
  // absolute target reachable when the integral itself is large.
  double rel_floor = 1e-14;
  int min_panels = 1;
  int max_panels = 1 << 14;
};

template <class T>
struct Estimate {
  T value{};
  double error = 0.0;   // |I(n) - I(n/2)| at the final level
  double magnitude = 0.0;  // integral of |integrand|
  int panels = 0;
  bool converged = false;
};

namespace detail {

template <class T>
double abs_of(const T& v) {
  return std::abs(v);
}

}  // namespace detail

/// One composite rule evaluation with `panels` equal panels on [a, b].
template <class T, class F>
Estimate<T> composite(F&& f, double a, double b, int panels) {
  const Rule& rule = gauss_legendre16();
  const double h = (b - a) / panels;
  T sum{};
  double mag = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    const double half = 0.5 * h;
    T panel_sum{};
    double panel_mag = 0.0;
    for (int k = 0; k < kOrder; ++k) {
      const T v = f(mid + half * rule.nodes[k]);
      panel_sum += rule.weights[k] * v;
      panel_mag += rule.weights[k] * detail::abs_of(v);
    }
    sum += half * panel_sum;
    mag += half * panel_mag;
  }
  Estimate<T> e;
  e.value = sum;
  e.magnitude = std::abs(mag);
  e.panels = panels;
  return e;
}

/// Integrates f over [a, b], doubling panels until successive levels agree
/// within max(abs_tol, rel_floor * magnitude). A non-converged estimate is
/// returned with `converged == false`; callers decide whether that is fatal.
template <class T, class F>
Estimate<T> integrate(F&& f, double a, double b, const Options& opts = {}) {
  if (!(b > a)) {
    Estimate<T> e;
    e.converged = true;
    return e;
  }
  int panels = std::max(1, opts.min_panels);
  Estimate<T> prev = composite<T>(f, a, b, panels);
  while (true) {
    panels *= 2;
    Estimate<T> cur = composite<T>(f, a, b, panels);
    const double diff = detail::abs_of(cur.value - prev.value);
    const double target = std::max(opts.abs_tol, opts.rel_floor * cur.magnitude);
    cur.error = diff;
    if (diff <= target) {
      cur.converged = true;
      return cur;
    }
    if (panels >= opts.max_panels) {
      cur.converged = false;
      return cur;
    }
    prev = cur;
  }
}

/// Integrates over consecutive pieces [cuts[i], cuts[i+1]]. Cuts must be
/// sorted; empty pieces are skipped. The tolerance is split evenly.
template <class T, class F>
Estimate<T> integrate_pieces(F&& f, std::span<const double> cuts, const Options& opts = {}) {
  Estimate<T> total;
  total.converged = true;
  if (cuts.size() < 2) return total;
  Options piece_opts = opts;
  piece_opts.abs_tol = opts.abs_tol / static_cast<double>(cuts.size() - 1);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (!(cuts[i + 1] > cuts[i])) continue;
    Estimate<T> e = integrate<T>(f, cuts[i], cuts[i + 1], piece_opts);
    total.value += e.value;
    total.error += e.error;
    total.magnitude += e.magnitude;
    total.panels += e.panels;
    total.converged = total.converged && e.converged;
  }
  return total;
}

/// Sorted cut list: [lo, hi] plus every interior point of `extra`.
std::vector<double> make_cuts(double lo, double hi, std::span<const double> extra);

}  // namespace xpm::quad
