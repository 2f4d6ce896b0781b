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

#include "zpfaff/measures.hpp"

#include <cmath>

#include "zpfaff/errors.hpp"
#include "zpfaff/lattice.hpp"

namespace zpfaff {

namespace {

// log of the rising factorial (t)_n for t > 0, summed term by term.
double log_rising(double t, int n) {
  double s = 0.0;
  for (int k = 0; k < n; ++k) s += std::log(t + k);
  return s;
}

double log_factorial(int n) {
  double s = 0.0;
  for (int k = 2; k <= n; ++k) s += std::log(static_cast<double>(k));
  return s;
}

}  // namespace

void ZParams::validate() const {
  if (!(std::isfinite(z.real()) && std::isfinite(z.imag()))) throw ParameterError("z must be finite");
  if (z == std::complex<double>(0.0, 0.0)) throw ParameterError("z must be nonzero");
}

void ZParams::validate_mixed() const {
  validate();
  if (!(xi >= 0.0 && xi < 1.0)) throw ParameterError("xi must lie in [0, 1), got " + std::to_string(xi));
}

double z_measure(const YoungDiagram& lambda, const ZParams& p) {
  p.validate();
  const double theta = p.theta.value();
  if (lambda.empty()) return 1.0;
  const LogPochhammer lz = log_generalized_pochhammer(p.z, lambda, theta);
  if (lz.zero) return 0.0;
  const LogHookProducts lh = log_hook_products(lambda, theta);
  const int n = lambda.size();
  // |(z)_λ|² = (z)_λ (z̄)_λ, hence twice the real part of the log
  const double lg = log_factorial(n) + 2.0 * lz.log.real() - log_rising(p.t(), n) - lh.log_h - lh.log_h_prime;
  return std::exp(lg);
}

std::pair<double, double> z_measure_symmetry_check(const YoungDiagram& lambda, const ZParams& p) {
  p.validate();
  ZParams dual = p;
  dual.z = -p.z / p.theta.value();
  dual.theta = p.theta.reciprocal();
  return {z_measure(lambda, p), z_measure(lambda.transpose(), dual)};
}

double negative_binomial_weight(int n, const ZParams& p) {
  p.validate_mixed();
  if (n < 0) throw DomainError("n must be nonnegative");
  const double t = p.t();
  if (n == 0) return std::exp(t * std::log1p(-p.xi));
  if (p.xi == 0.0) return 0.0;
  const double lg = t * std::log1p(-p.xi) + log_rising(t, n) - log_factorial(n) + n * std::log(p.xi);
  return std::exp(lg);
}

double negative_binomial_tail(int n_max, const ZParams& p) {
  p.validate_mixed();
  if (n_max < 0) return 1.0;
  if (p.xi == 0.0) return 0.0;
  const double t = p.t();
  int n = n_max + 1;
  double term = negative_binomial_weight(n, p);
  double sum = 0.0;
  for (int iter = 0; iter < 1000000; ++iter, ++n) {
    sum += term;
    // ratio of consecutive terms, bounded for all later n as well
    const double r = p.xi * std::max(1.0, (t + n + 1) / (n + 2.0));
    const double next = term * p.xi * (t + n) / (n + 1.0);
    if (r < 1.0 && next * r / (1.0 - r) <= 1e-17 * sum) {
      return sum + next / (1.0 - r);
    }
    if (next == 0.0) return sum;
    term = next;
  }
  throw NumericalError("negative-binomial tail did not converge");
}

double mixed_z_measure(const YoungDiagram& lambda, const ZParams& p) {
  p.validate_mixed();
  const double w = negative_binomial_weight(lambda.size(), p);
  if (lambda.empty()) return w;
  return w * z_measure(lambda, p);
}

CorrelationReport lattice_correlation(std::span<const HalfInteger> X, const ZParams& p, int n_max,
                                      int workers) {
  p.validate_mixed();
  LatticeSweep sweep(p.z, p.theta, n_max, workers, kDefaultLatticeCap);
  const std::size_t q = sweep.add_query(X);
  sweep.run();
  CorrelationReport rep;
  rep.n_max_used = n_max;
  rep.terms_summed = sweep.query_terms(q);
  rep.truncation_bound = negative_binomial_tail(n_max, p);
  if (p.xi == 0.0) return rep;
  const double t = p.t();
  const double lx = std::log(p.xi), l1 = t * std::log1p(-p.xi);
  for (int n = 1; n <= n_max; ++n) {
    const double s = sweep.query_stratum(q, n);
    if (s > 0.0) rep.value += std::exp(l1 + n * lx) * s;
  }
  return rep;
}

}  // namespace zpfaff
