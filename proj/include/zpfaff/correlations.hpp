/*
 * Copyright 2026 The zpfaff Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file correlations.hpp
 * @brief Continuum correlation functions as Pfaffians of the matrix kernel,
 *        and the comparison against rescaled lattice correlations at
 *        θ = 1/2 as ξ ↗ 1.
 */

#ifndef ZPFAFF_CORRELATIONS_HPP
#define ZPFAFF_CORRELATIONS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zpfaff/kernels.hpp"
#include "zpfaff/partitions.hpp"

namespace zpfaff {

/// ϱ_n(x_1..x_n) = Pf[K(x_i, x_j)]. The error is a first-order bound from
/// the per-entry quadrature errors.
Estimate continuum_correlation(std::span<const double> points, const KernelParams& p);
Estimate continuum_correlation(std::span<const double> points, cplx z);

/// Nearest element of ℤ_{≥0} + 1/2 to u/(1-ξ), 0 ≤ ξ < 1; halfway cases go
/// down (within 1e-9 relative).
HalfInteger lattice_point_for(double u, double xi);

struct LimitEntry {
  double xi = 0.0;
  std::vector<HalfInteger> lattice_points;
  /// (1-ξ)^{-n} times the truncated lattice correlation.
  double lattice_value = 0.0;
  /// Tail bound, rescaled the same way.
  double truncation_bound = 0.0;
  double deviation = 0.0;  ///< |lattice_value - continuum|
  /// deviation / |continuum|; empty when the continuum value is 0.
  std::optional<double> relative_deviation;
  /// Tail bound above 10% of the lattice value.
  bool inconclusive = false;
  std::uint64_t terms_summed = 0;
};

struct LimitReport {
  std::vector<double> u;
  cplx z;
  int n_max = 0;
  double continuum_value = 0.0;
  double continuum_error = 0.0;
  std::vector<LimitEntry> entries;  // in ladder order

  bool any_inconclusive() const;
  bool deviations_strictly_decreasing() const;
};

/// One enumeration up to n_max shared by the whole ladder.
LimitReport verify_limit(std::span<const double> u, cplx z, std::span<const double> xi_ladder,
                         int n_max, int workers = 0);

}  // namespace zpfaff

#endif  // ZPFAFF_CORRELATIONS_HPP
