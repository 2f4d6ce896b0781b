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

#include <doctest.h>

#include <cmath>
#include <complex>

#include "zpfaff/errors.hpp"
#include "zpfaff/lattice.hpp"
#include "zpfaff/measures.hpp"

using namespace zpfaff;
using cd = std::complex<double>;

namespace {

// Plain product formula, no logs.
double z_measure_direct(const YoungDiagram& lam, cd z, double theta) {
  const int n = lam.size();
  const double t = std::norm(z) / theta;
  double num = 1.0, den = 1.0;
  for (int k = 1; k <= n; ++k) {
    num *= k;
    den *= t + k - 1;
  }
  num *= std::norm(generalized_pochhammer(z, lam, theta));
  const HookProducts h = hook_products(lam, theta);
  return num / (den * h.h * h.h_prime);
}

bool contains_all(const LatticeConfig& c, const std::vector<HalfInteger>& X) {
  for (const auto& x : X) {
    if (std::find(c.positives.begin(), c.positives.end(), x) == c.positives.end()) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("measures") {
  TEST_CASE("hand values at z = 1, theta = 1/2") {
    const ZParams p{1.0, Theta(1, 2)};
    CHECK(z_measure(YoungDiagram({2}), p) == doctest::Approx(8.0 / 9.0).epsilon(1e-14));
    CHECK(z_measure(YoungDiagram({1, 1}), p) == doctest::Approx(1.0 / 9.0).epsilon(1e-14));
    CHECK(z_measure(YoungDiagram({1}), p) == doctest::Approx(1.0));
    const auto [l, r] = z_measure_symmetry_check(YoungDiagram({2}), p);
    CHECK(l == doctest::Approx(8.0 / 9.0));
    CHECK(r == doctest::Approx(8.0 / 9.0));
    CHECK(z_measure(YoungDiagram({1, 1}), ZParams{-2.0, Theta(2, 1)}) == doctest::Approx(8.0 / 9.0));
  }

  TEST_CASE("log-domain evaluation matches the plain product") {
    for (cd z : {cd(0.5), cd(1.0, 1.0), cd(0.3, 0.7)}) {
      for (double th : {0.5, 1.0, 2.0}) {
        const ZParams p{z, Theta::from_double(th)};
        for (const auto& lam : enumerate_partitions(9)) {
          const double want = z_measure_direct(lam, z, th);
          CHECK(z_measure(lam, p) == doctest::Approx(want).epsilon(1e-12));
        }
      }
    }
  }

  TEST_CASE("normalization for n <= 30") {
    for (cd z : {cd(0.5), cd(1.0), cd(1.0, 1.0), cd(0.3, 0.7)}) {
      for (const Theta th : {Theta(1, 2), Theta(1, 1), Theta(2, 1)}) {
        const ZParams p{z, th};
        for (int n : {1, 2, 5, 13, 22, 30}) {
          double s = 0.0;
          for (const auto& lam : enumerate_partitions(n)) s += z_measure(lam, p);
          CHECK(std::abs(s - 1.0) < 1e-10);
        }
      }
    }
  }

  TEST_CASE("degenerate z charges only diagrams with few rows") {
    // z = 0.5 = theta: the box (2,1) factor vanishes
    const ZParams p{0.5, Theta(1, 2)};
    for (const auto& lam : enumerate_partitions(8)) {
      if (lam.length() > 1) CHECK(z_measure(lam, p) == 0.0);
    }
    CHECK(z_measure(YoungDiagram({8}), p) == doctest::Approx(1.0));
  }

  TEST_CASE("transpose symmetry") {
    for (cd z : {cd(0.5), cd(1.0, 1.0), cd(0.3, 0.7)}) {
      const ZParams p{z, Theta(1, 2)};
      for (int n = 1; n <= 20; n += 3) {
        for (const auto& lam : enumerate_partitions(n)) {
          const auto [l, r] = z_measure_symmetry_check(lam, p);
          CHECK(std::abs(l - r) <= 1e-12 * std::max(std::abs(l), 1e-300));
        }
      }
    }
  }

  TEST_CASE("parameter errors") {
    CHECK_THROWS_AS(z_measure(YoungDiagram({1}), ZParams{0.0, Theta(1, 2)}), ParameterError);
    CHECK_THROWS_AS(negative_binomial_weight(1, ZParams{0.5, Theta(1, 2), 1.0}), ParameterError);
    CHECK_THROWS_AS(negative_binomial_weight(1, ZParams{0.5, Theta(1, 2), -0.1}), ParameterError);
  }

  TEST_CASE("negative binomial weights and tail") {
    ZParams p{0.5, Theta(1, 2), 0.9};
    double s = 0.0;
    for (int n = 0; n <= 400; ++n) s += negative_binomial_weight(n, p);
    CHECK(std::abs(s - 1.0) < 1e-10);
    CHECK(negative_binomial_weight(0, p) == doctest::Approx(std::pow(0.1, 0.5)));
    for (int nm : {0, 10, 40, 80}) {
      double head = 0.0;
      for (int n = 0; n <= nm; ++n) head += negative_binomial_weight(n, p);
      CHECK(negative_binomial_tail(nm, p) == doctest::Approx(1.0 - head).epsilon(1e-9));
    }
    // deep tail stays relative-accurate: compare with a long direct sum
    double direct = 0.0;
    for (int n = 301; n < 3000; ++n) direct += negative_binomial_weight(n, p);
    CHECK(negative_binomial_tail(300, p) == doctest::Approx(direct).epsilon(1e-10));
    const ZParams q{0.5, Theta(1, 2), 0.0};
    CHECK(negative_binomial_weight(0, q) == 1.0);
    CHECK(negative_binomial_weight(3, q) == 0.0);
  }

  TEST_CASE("mixed measure") {
    const ZParams p{0.5, Theta(1, 2), 0.5};
    CHECK(mixed_z_measure(YoungDiagram(), p) == doctest::Approx(0.70710678118654752));
    CHECK(mixed_z_measure(YoungDiagram({1}), ZParams{0.5, Theta(1, 2), 0.0}) == 0.0);
    for (std::complex<double> z : {std::complex<double>(0.5), std::complex<double>(0.3, 0.7)}) {
      const ZParams r{z, Theta(1, 2), 0.85};
      double s = 0.0;
      for (int n = 0; n <= 36; ++n) {
        for (const auto& lam : enumerate_partitions(n)) s += mixed_z_measure(lam, r);
      }
      CHECK(std::abs(s + negative_binomial_tail(36, r) - 1.0) < 1e-8);
    }
    // at z = theta only one-row diagrams carry mass, so the full range is cheap
    const ZParams r{0.5, Theta(1, 2), 0.85};
    double s = 0.0;
    for (int n = 0; n <= 80; ++n) s += mixed_z_measure(n == 0 ? YoungDiagram() : YoungDiagram({n}), r);
    CHECK(std::abs(s + negative_binomial_tail(80, r) - 1.0) < 1e-8);
  }

  TEST_CASE("lattice correlation matches brute force") {
    const ZParams p{cd(0.3, 0.4), Theta(1, 2), 0.6};
    const int nmax = 14;
    const std::vector<std::vector<HalfInteger>> sets = {
        {HalfInteger::from_twice(3)},
        {HalfInteger::from_twice(5)},
        {HalfInteger::from_twice(3), HalfInteger::from_twice(7)},
        {HalfInteger::from_twice(9), HalfInteger::from_twice(5), HalfInteger::from_twice(3)}};
    for (const auto& X : sets) {
      double brute = 0.0;
      for (int n = 1; n <= nmax; ++n) {
        for (const auto& lam : enumerate_partitions(n)) {
          if (contains_all(frobenius_coordinates(lam, p.theta), X)) brute += mixed_z_measure(lam, p);
        }
      }
      const CorrelationReport r = lattice_correlation(X, p, nmax, 1);
      CHECK(r.value == doctest::Approx(brute).epsilon(1e-12));
      CHECK(r.truncation_bound == doctest::Approx(negative_binomial_tail(nmax, p)));
      CHECK(r.n_max_used == nmax);
    }
  }

  TEST_CASE("lattice correlation edge cases") {
    const ZParams p{0.5, Theta(1, 2), 0.5};
    const std::vector<HalfInteger> half = {HalfInteger::from_twice(1)};
    CHECK(lattice_correlation(half, p, 20).value == 0.0);
    const std::vector<HalfInteger> a = {HalfInteger::from_twice(3)};
    const std::vector<HalfInteger> ab = {HalfInteger::from_twice(3), HalfInteger::from_twice(5)};
    const CorrelationReport r40 = lattice_correlation(a, p, 40), r60 = lattice_correlation(a, p, 60);
    CHECK(std::abs(r60.value - r40.value) <= r40.truncation_bound);
    CHECK(r60.truncation_bound < r40.truncation_bound);
    CHECK(lattice_correlation(ab, p, 40).value <= r40.value);
    const std::vector<HalfInteger> bad = {HalfInteger::from_twice(-1)};
    CHECK_THROWS_AS(lattice_correlation(bad, p, 10), DomainError);
    const std::vector<HalfInteger> dup = {HalfInteger::from_twice(3), HalfInteger::from_twice(3)};
    CHECK_THROWS_AS(lattice_correlation(dup, p, 10), DomainError);
  }

  TEST_CASE("sweep results do not depend on the worker count") {
    const std::vector<HalfInteger> X = {HalfInteger::from_twice(5), HalfInteger::from_twice(9)};
    const ZParams p{cd(0.3, 0.4), Theta(1, 2), 0.7};
    const CorrelationReport a = lattice_correlation(X, p, 30, 1);
    const CorrelationReport b = lattice_correlation(X, p, 30, 3);
    const CorrelationReport c = lattice_correlation(X, p, 30, 8);
    CHECK(a.value == b.value);
    CHECK(a.value == c.value);
    CHECK(a.terms_summed == c.terms_summed);
  }

  TEST_CASE("stratum masses") {
    LatticeSweep sw(cd(1.0, 1.0), Theta(1, 2), 25, 2);
    sw.run();
    const double t = 2.0 / 0.5;
    double poch = 1.0;
    for (int n = 1; n <= 25; ++n) {
      poch *= (t + n - 1) / n;
      CHECK(sw.stratum_mass(n) == doctest::Approx(poch).epsilon(1e-11));
    }
  }
}
