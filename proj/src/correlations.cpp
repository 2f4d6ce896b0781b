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

#include "zpfaff/correlations.hpp"

#include <algorithm>
#include <cmath>

#include "zpfaff/errors.hpp"
#include "zpfaff/lattice.hpp"
#include "zpfaff/measures.hpp"
#include "zpfaff/pfaffian.hpp"

namespace zpfaff {

namespace {

// Pf with rows/columns i, j removed.
double minor_pfaffian(const AntisymmetricMatrix& A, int i, int j) {
  const int d = A.dim();
  AntisymmetricMatrix M(d - 2);
  int r = 0;
  for (int a = 0; a < d; ++a) {
    if (a == i || a == j) continue;
    int c = 0;
    for (int b = 0; b < d; ++b) {
      if (b == i || b == j) continue;
      if (c > r) M.set(r, c, A(a, b));
      ++c;
    }
    ++r;
  }
  return pfaffian(M);
}

}  // namespace

Estimate continuum_correlation(std::span<const double> points, const KernelParams& p) {
  const AssembledKernel ak = assemble_report(points, p);
  Estimate e;
  e.value = pfaffian(ak.matrix);
  // ∂Pf/∂a_ij = ± Pf of the complementary minor
  const int d = ak.matrix.dim();
  double sens = 0.0;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) sens += std::abs(minor_pfaffian(ak.matrix, i, j));
  }
  e.error = sens * (ak.entry_error + ak.violation);
  return e;
}

Estimate continuum_correlation(std::span<const double> points, cplx z) {
  KernelParams p;
  p.z = z;
  return continuum_correlation(points, p);
}

HalfInteger lattice_point_for(double u, double xi) {
  if (!(xi >= 0.0 && xi < 1.0)) throw ParameterError("xi must lie in [0, 1)");
  if (!(u > 0.0) || !std::isfinite(u)) throw ParameterError("u must be positive");
  const double v = u / (1.0 - xi);
  const double tol = 1e-9 * std::max(1.0, v);
  const double b = std::max(0.0, std::ceil(v - 1.0 - tol));
  return HalfInteger::from_twice(2 * static_cast<std::int64_t>(b) + 1);
}

bool LimitReport::any_inconclusive() const {
  return std::any_of(entries.begin(), entries.end(), [](const LimitEntry& e) { return e.inconclusive; });
}

bool LimitReport::deviations_strictly_decreasing() const {
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (!(entries[i].deviation < entries[i - 1].deviation)) return false;
  }
  return true;
}

LimitReport verify_limit(std::span<const double> u, cplx z, std::span<const double> xi_ladder,
                         int n_max, int workers) {
  if (u.empty()) throw ParameterError("at least one u point is required");
  if (xi_ladder.empty()) throw ParameterError("xi ladder is empty");
  const Theta half(1, 2);
  LimitReport rep;
  rep.u.assign(u.begin(), u.end());
  rep.z = z;
  rep.n_max = n_max;
  const Estimate cont = continuum_correlation(u, z);
  rep.continuum_value = cont.value;
  rep.continuum_error = cont.error;

  LatticeSweep sweep(z, half, n_max, workers, kDefaultLatticeCap);
  std::vector<std::size_t> qid;
  for (double xi : xi_ladder) {
    LimitEntry e;
    e.xi = xi;
    ZParams zp{z, half, xi};
    zp.validate_mixed();
    for (double ui : u) e.lattice_points.push_back(lattice_point_for(ui, xi));
    std::vector<HalfInteger> sorted = e.lattice_points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParameterError("u points collapse to the same lattice point at this xi");
    }
    qid.push_back(sweep.add_query(e.lattice_points));
    rep.entries.push_back(std::move(e));
  }
  sweep.run();

  const double t = ZParams{z, half, 0.0}.t();
  const double npts = static_cast<double>(u.size());
  for (std::size_t k = 0; k < rep.entries.size(); ++k) {
    LimitEntry& e = rep.entries[k];
    const ZParams zp{z, half, e.xi};
    double value = 0.0;
    const double lx = std::log(e.xi), l1 = t * std::log1p(-e.xi);
    for (int n = 1; n <= n_max && e.xi > 0.0; ++n) {
      const double s = sweep.query_stratum(qid[k], n);
      if (s > 0.0) value += std::exp(l1 + n * lx) * s;
    }
    const double bound = negative_binomial_tail(n_max, zp);
    const double resc = std::pow(1.0 - e.xi, -npts);
    e.lattice_value = value * resc;
    e.truncation_bound = bound * resc;
    e.terms_summed = sweep.query_terms(qid[k]);
    e.deviation = std::abs(e.lattice_value - rep.continuum_value);
    if (rep.continuum_value != 0.0) e.relative_deviation = e.deviation / std::abs(rep.continuum_value);
    e.inconclusive = e.truncation_bound > 0.1 * std::abs(e.lattice_value);
  }
  return rep;
}

}  // namespace zpfaff
