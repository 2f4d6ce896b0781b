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
 * @file specfun.hpp
 * @brief Gamma-type functions and the Whittaker function W_{k,m}.
 *
 * W_{k,m}(x) = e^{-x/2} x^{m+1/2} U(1/2+m-k, 1+2m, x) with Tricomi's U. Two
 * evaluation routes are available: the Kummer-series connection formula
 * (with the logarithmic formula when 2m is an integer) and the integral
 *
 *   W_{k,m}(x) = x^k e^{-x/2} / Γ(a) ∫_0^∞ e^{-u} u^{a-1} (1 + u/x)^{m+k-1/2} du,
 *
 * a = 1/2 + m - k, combined with the upward recurrence in k when Re a is
 * small. For large x the asymptotic series is used when it converges.
 */

#ifndef ZPFAFF_SPECFUN_HPP
#define ZPFAFF_SPECFUN_HPP

#include <complex>

namespace zpfaff {

using cplx = std::complex<double>;

/// Principal branch of log Γ(w). Throws PoleError at w ∈ {0, -1, -2, ...}.
cplx log_gamma(cplx w);
/// 1/Γ(w); exactly zero at the poles of Γ.
cplx rgamma(cplx w);
/// ψ(w) = Γ'(w)/Γ(w). Throws PoleError at the poles of Γ.
cplx digamma(cplx w);

/// Kummer's M(a, b, x) by its power series. Throws DomainError when b is a
/// nonpositive integer.
cplx kummer_M(cplx a, cplx b, double x);

/// Validated parameter box for the Whittaker routines.
struct WhittakerDomain {
  static constexpr double x_min = 1e-3;
  static constexpr double x_max = 200.0;
  static constexpr double index_max = 6.0;
};

struct WhittakerIndex {
  cplx k;
  cplx m;

  /// k real and m real or purely imaginary: W is then real on x > 0.
  bool real_valued() const;
};

/// Throws DomainError for x ≤ 0 and for anything outside WhittakerDomain,
/// naming the unvalidated parameter.
void check_whittaker_domain(const WhittakerIndex& idx, double x);

enum class WhittakerMethod { automatic, series, integral, asymptotic };

/// W_{k,m}(x) by the chosen route. The asymptotic route throws NumericalError
/// when its smallest term is not below 1e-15 of the sum.
cplx whittaker_W_complex(const WhittakerIndex& idx, double x,
                         WhittakerMethod method = WhittakerMethod::automatic);

/// Real W_{k,m}(x) for real-valued indices; the imaginary rounding residue is
/// checked against 1e-10 |W| (NumericalError otherwise).
double whittaker_W(const WhittakerIndex& idx, double x);

/// dW/dx from x W' = (k - x/2) W_{k,m} - (m² - (k - 1/2)²) W_{k-1,m}.
double whittaker_W_deriv(const WhittakerIndex& idx, double x);

/// W_{k-2,m}, W_{k-1,m}, W_{k,m} at one point, sharing the work.
struct WhittakerTriple {
  cplx w_km2, w_km1, w_k;
};
WhittakerTriple whittaker_W_triple(const WhittakerIndex& top, double x);

}  // namespace zpfaff

#endif  // ZPFAFF_SPECFUN_HPP
