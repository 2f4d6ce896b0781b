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
 * @file kernels.hpp
 * @brief Whittaker-type kernels and the 2x2 matrix kernel of the spectral
 *        point process at Jack parameter 1/2.
 *
 * Everything is built from w_{±1/2}(x; z1, z2) with z1 = -2z, z2 = conj(z1).
 * The antisymmetric function is
 *
 *   S(x,y) = σ [ -1/2 √y ∫_x^∞ K^W(s,y) ds/√s + κ F(x) G(y) ],
 *   F(x) = ∫_x^∞ w_{-1/2}(s) ds/√s,   G(y) = ∫_y^∞ w_{1/2}(s) ds/√s,
 *
 * with (σ, κ) = (-1, |z|/2) by default. SFormula::as_printed selects
 * (σ, κ) = (+1, |z|/4); that variant is not antisymmetric.
 */

#ifndef ZPFAFF_KERNELS_HPP
#define ZPFAFF_KERNELS_HPP

#include <array>
#include <complex>

#include "zpfaff/specfun.hpp"

namespace zpfaff {

enum class SFormula { corrected, as_printed };

struct KernelParams {
  cplx z{0.5, 0.0};
  SFormula formula = SFormula::corrected;
  /// Absolute and relative target for each semi-infinite integral.
  double quad_tol = 1e-11;

  cplx z1() const { return -2.0 * z; }
  cplx z2() const { return std::conj(z1()); }
  /// Throws ParameterError for z = 0 and DomainError ("unvalidated domain")
  /// outside 0 ≤ Re z ≤ 2.25, |Im z| ≤ 3.
  void validate() const;
};

/// w_a(x; z1, z2) for a ∈ ℤ + 1/2. Zero where Γ(z1 - a + 1/2) has a pole.
double w_a(double a, double x, const KernelParams& p);

/// w_a(x; z, z') for arbitrary complex z, z'; the square root of the gamma
/// product is the principal one.
cplx w_a_generic(double a, double x, cplx z, cplx zp);

/// K^W_{z1,z2}(x, y) = 2|z| (w_{-1/2}(x) w_{1/2}(y) - w_{1/2}(x) w_{-1/2}(y)) / (x - y),
/// with the first-order Taylor limit for |x - y| < 1e-6 max(1, x).
double scalar_whittaker_kernel(double x, double y, const KernelParams& p);

/// Same for generic (z, z'), prefactor √(z z') on the principal branch.
cplx scalar_whittaker_kernel_generic(double x, double y, cplx z, cplx zp);

/// A value with the accumulated quadrature error estimate.
struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

Estimate S_estimate(double x, double y, const KernelParams& p);
double S(double x, double y, const KernelParams& p);

struct SPartials {
  double s_x = 0.0;
  double s_y = 0.0;
  double s_xy = 0.0;
};

/// Analytic ∂S/∂x, ∂S/∂y, ∂²S/∂x∂y.
SPartials S_partials(double x, double y, const KernelParams& p);

/// [[S, S_y], [S_x, S_xy]] at (x, y).
struct MatrixKernelValue {
  std::array<std::array<double, 2>, 2> m{};
  double error = 0.0;

  double s() const { return m[0][0]; }
  double s_y() const { return m[0][1]; }
  double s_x() const { return m[1][0]; }
  double s_xy() const { return m[1][1]; }
};

MatrixKernelValue matrix_kernel(double x, double y, const KernelParams& p);

}  // namespace zpfaff

#endif  // ZPFAFF_KERNELS_HPP
