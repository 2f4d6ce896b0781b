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

#ifndef ZPFAFF_MEASURES_HPP
#define ZPFAFF_MEASURES_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <utility>

#include "zpfaff/partitions.hpp"

namespace zpfaff {

inline constexpr int kDefaultLatticeCap = 100;

/// Parameters of the z-measures. ξ is only read by the mixed measures.
struct ZParams {
  std::complex<double> z{1.0, 0.0};
  Theta theta{1, 1};
  double xi = 0.0;

  /// t = z z̄ / θ.
  double t() const { return std::norm(z) / theta.value(); }
  /// Throws ParameterError for z = 0 or a non-finite z.
  void validate() const;
  /// Also checks 0 ≤ ξ < 1.
  void validate_mixed() const;
};

/// Truncated lattice sum with its certified tail.
struct CorrelationReport {
  double value = 0.0;
  double truncation_bound = 0.0;
  int n_max_used = 0;
  std::uint64_t terms_summed = 0;
};

/// M^(n)(λ) = n! |(z)_λ|² / ((t)_n H(λ) H'(λ)). The empty diagram has mass 1.
double z_measure(const YoungDiagram& lambda, const ZParams& p);

/// Both sides of M_{z,θ}(λ) = M_{-z/θ,1/θ}(λ').
std::pair<double, double> z_measure_symmetry_check(const YoungDiagram& lambda, const ZParams& p);

/// (1-ξ)^t (t)_n / n! ξ^n.
double negative_binomial_weight(int n, const ZParams& p);

/// Σ_{n > n_max} of the weights above, summed directly with a geometric
/// remainder, so it stays accurate when the tail is far below 1e-16.
double negative_binomial_tail(int n_max, const ZParams& p);

double mixed_z_measure(const YoungDiagram& lambda, const ZParams& p);

/// Mixed-measure probability that X ⊂ ℤ_{≥0} + 1/2 lies inside the
/// coordinates of λ, summed over |λ| ≤ n_max. `workers` = 0 picks the
/// hardware concurrency; the result does not depend on it.
CorrelationReport lattice_correlation(std::span<const HalfInteger> X, const ZParams& p, int n_max,
                                      int workers = 0);

}  // namespace zpfaff

#endif  // ZPFAFF_MEASURES_HPP
