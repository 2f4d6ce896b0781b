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
#include <map>

#include "zpfaff/errors.hpp"
#include "zpfaff/partitions.hpp"

using namespace zpfaff;

namespace {

// Euler's pentagonal recurrence.
std::vector<long long> pentagonal_counts(int n) {
  std::vector<long long> p(static_cast<std::size_t>(n + 1), 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long long s = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long long sign = (k % 2 == 1) ? 1 : -1;
      s += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) s += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = s;
  }
  return p;
}

// Coordinates straight from the content signs of the boxes.
LatticeConfig coordinates_by_boxes(const YoungDiagram& lam, const Theta& th) {
  std::vector<int> rows, cols;
  for (int i = 1; i <= lam.length(); ++i) {
    int c = 0;
    for (int j = 1; j <= lam.part(i); ++j) c += theta_content_sign({i, j}, th) > 0;
    rows.push_back(c);
  }
  const YoungDiagram tr = lam.transpose();
  for (int j = 1; j <= tr.length(); ++j) {
    int c = 0;
    for (int i = 1; i <= tr.part(j); ++i) c += theta_content_sign({i, j}, th) <= 0;
    cols.push_back(c);
  }
  LatticeConfig out;
  for (int a : rows) {
    if (a > 0) out.negatives.push_back(HalfInteger::from_twice(-2 * a - 1));
  }
  for (int b : cols) {
    if (b > 0) out.positives.push_back(HalfInteger::from_twice(2 * b + 1));
  }
  return out;
}

}  // namespace

TEST_SUITE("partitions") {
  TEST_CASE("partition counts follow the pentagonal recurrence") {
    const auto p = pentagonal_counts(30);
    for (int n = 0; n <= 30; ++n) {
      CHECK(static_cast<long long>(enumerate_partitions(n).size()) == p[static_cast<std::size_t>(n)]);
    }
    CHECK(p[30] == 5604);
  }

  TEST_CASE("reverse lexicographic order") {
    const auto ps = enumerate_partitions(4);
    REQUIRE(ps.size() == 5);
    CHECK(ps[0].to_string() == "(4)");
    CHECK(ps[1].to_string() == "(3,1)");
    CHECK(ps[2].to_string() == "(2,2)");
    CHECK(ps[3].to_string() == "(2,1,1)");
    CHECK(ps[4].to_string() == "(1,1,1,1)");
    for (int n = 1; n <= 12; ++n) {
      const auto v = enumerate_partitions(n);
      for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i - 1] > v[i]);
    }
    CHECK(enumerate_partitions(0).size() == 1);
    CHECK_THROWS_AS(enumerate_partitions(101), ResourceError);
  }

  TEST_CASE("diagram validation, parsing and transpose") {
    CHECK_THROWS_AS(YoungDiagram({1, 2}), DomainError);
    CHECK_THROWS_AS(YoungDiagram({2, 0}), DomainError);
    CHECK(YoungDiagram::parse("(3,1)") == YoungDiagram({3, 1}));
    CHECK(YoungDiagram::parse("3,1") == YoungDiagram({3, 1}));
    CHECK(YoungDiagram::parse("()").empty());
    CHECK(YoungDiagram({3, 1}).transpose() == YoungDiagram({2, 1, 1}));
    for (const auto& lam : enumerate_partitions(9)) CHECK(lam.transpose().transpose() == lam);
    CHECK(YoungDiagram({4, 2, 2}).size() == 8);
    CHECK(YoungDiagram({4, 2}).contains({2, 2}));
    CHECK_FALSE(YoungDiagram({4, 2}).contains({2, 3}));
  }

  TEST_CASE("theta and half-integer parsing") {
    CHECK(Theta::parse("1/2") == Theta(1, 2));
    CHECK(Theta::parse("0.5") == Theta(1, 2));
    CHECK(Theta::parse("2/4") == Theta(1, 2));
    CHECK(Theta::parse("2") == Theta(2, 1));
    CHECK(Theta(1, 2).reciprocal() == Theta(2, 1));
    CHECK_THROWS_AS(Theta::parse("-1"), ParameterError);
    CHECK(HalfInteger::parse("3/2").twice == 3);
    CHECK(HalfInteger::parse("1.5").twice == 3);
    CHECK(HalfInteger::parse("-5/2").twice == -5);
    CHECK_THROWS_AS(HalfInteger::parse("2"), DomainError);
    CHECK(HalfInteger::from_twice(7).to_string() == "7/2");
  }

  TEST_CASE("content sign is exact") {
    const Theta half(1, 2);
    CHECK(theta_content_sign({3, 2}, half) == 0);   // 1 - 2/2
    CHECK(theta_content_sign({3, 3}, half) == 1);
    CHECK(theta_content_sign({3, 1}, half) == -1);
    CHECK(theta_content({2, 3}, 0.5) == doctest::Approx(1.5));
  }

  TEST_CASE("hook products reduce to classical hooks at theta = 1") {
    // (3,1): hooks 4,2,1,1
    const HookProducts h = hook_products(YoungDiagram({3, 1}), 1.0);
    CHECK(h.h == doctest::Approx(8.0));
    CHECK(h.h_prime == doctest::Approx(8.0));
    // theta = 1/2, (2): arm/leg (1,0),(0,0) -> (2)(1) and (1.5)(0.5)
    const HookProducts g = hook_products(YoungDiagram({2}), 0.5);
    CHECK(g.h == doctest::Approx(2.0));
    CHECK(g.h_prime == doctest::Approx(0.75));
    for (const auto& lam : enumerate_partitions(8)) {
      const auto a = hook_products(lam, 2.0);
      const auto b = log_hook_products(lam, 2.0);
      CHECK(std::log(a.h) == doctest::Approx(b.log_h));
      CHECK(std::log(a.h_prime) == doctest::Approx(b.log_h_prime));
    }
  }

  TEST_CASE("generalized Pochhammer symbol") {
    // theta = 1, (2,1), z = 2: 2 * 3 * 1
    CHECK(std::abs(generalized_pochhammer(2.0, YoungDiagram({2, 1}), 1.0) - 6.0) < 1e-12);
    // the box (2,1) vanishes at z = theta
    const auto lp = log_generalized_pochhammer(0.5, YoungDiagram({1, 1}), 0.5);
    CHECK(lp.zero);
    const std::complex<double> z(0.3, 0.7);
    const auto v = generalized_pochhammer(z, YoungDiagram({3, 2}), 0.5);
    const auto l = log_generalized_pochhammer(z, YoungDiagram({3, 2}), 0.5);
    CHECK_FALSE(l.zero);
    CHECK(std::abs(std::exp(l.log) - v) < 1e-12 * std::abs(v));
  }

  TEST_CASE("coordinates agree with the box-by-box construction") {
    for (const Theta th : {Theta(1, 2), Theta(1, 1), Theta(2, 1), Theta(2, 3)}) {
      for (int n = 1; n <= 10; ++n) {
        for (const auto& lam : enumerate_partitions(n)) {
          const LatticeConfig got = frobenius_coordinates(lam, th);
          const LatticeConfig want = coordinates_by_boxes(lam, th);
          CHECK(got.negatives == want.negatives);
          CHECK(got.positives == want.positives);
          // |λ| = Σ|x| - (number of points)/2
          double s = 0;
          for (const auto& h : got.negatives) s -= h.value();
          for (const auto& h : got.positives) s += h.value();
          CHECK(s - 0.5 * static_cast<double>(got.count()) == doctest::Approx(n));
        }
      }
    }
  }

  TEST_CASE("positive side is repetition-free for theta <= 1") {
    for (const Theta th : {Theta(1, 2), Theta(1, 1)}) {
      for (const auto& lam : enumerate_partitions(12)) {
        const auto pos = frobenius_coordinates(lam, th).positives;
        for (std::size_t i = 1; i < pos.size(); ++i) CHECK(pos[i - 1].twice > pos[i].twice);
      }
    }
  }

  TEST_CASE("examples at theta = 1") {
    const auto c = frobenius_coordinates(YoungDiagram({2, 2}), Theta(1, 1));
    REQUIRE(c.negatives.size() == 1);
    CHECK(c.negatives[0].to_string() == "-3/2");
    REQUIRE(c.positives.size() == 2);
    CHECK(c.positives[0].to_string() == "5/2");
    CHECK(c.positives[1].to_string() == "3/2");
  }
}
