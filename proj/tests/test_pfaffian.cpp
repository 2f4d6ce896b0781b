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

#include <Eigen/Dense>
#include <cmath>
#include <numeric>
#include <random>

#include "zpfaff/errors.hpp"
#include "zpfaff/pfaffian.hpp"

using namespace zpfaff;

namespace {

AntisymmetricMatrix random_matrix(int d, std::mt19937& rng) {
  std::normal_distribution<double> nd;
  AntisymmetricMatrix A(d);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) A.set(i, j, nd(rng));
  }
  return A;
}

double det(const AntisymmetricMatrix& A) {
  const int d = A.dim();
  Eigen::MatrixXd M(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) M(i, j) = A(i, j);
  }
  return M.determinant();
}

// Expansion along the first row.
double pf_expand(const AntisymmetricMatrix& A) {
  const int d = A.dim();
  if (d == 0) return 1.0;
  double s = 0.0;
  for (int j = 1; j < d; ++j) {
    AntisymmetricMatrix M(d - 2);
    std::vector<int> keep;
    for (int k = 1; k < d; ++k) {
      if (k != j) keep.push_back(k);
    }
    for (int a = 0; a < d - 2; ++a) {
      for (int b = a + 1; b < d - 2; ++b) M.set(a, b, A(keep[static_cast<std::size_t>(a)], keep[static_cast<std::size_t>(b)]));
    }
    s += ((j % 2 == 1) ? 1.0 : -1.0) * A(0, j) * pf_expand(M);
  }
  return s;
}

}  // namespace

TEST_SUITE("pfaffian") {
  TEST_CASE("small closed forms") {
    AntisymmetricMatrix A(2);
    A.set(0, 1, 3.5);
    CHECK(pfaffian(A) == 3.5);
    std::mt19937 rng(1);
    for (int rep = 0; rep < 20; ++rep) {
      const auto B = random_matrix(4, rng);
      const double want = B(0, 1) * B(2, 3) - B(0, 2) * B(1, 3) + B(0, 3) * B(1, 2);
      CHECK(pfaffian(B) == doctest::Approx(want).epsilon(1e-13));
    }
    CHECK(pfaffian(AntisymmetricMatrix(0)) == 1.0);
  }

  TEST_CASE("Pf squared equals det") {
    std::mt19937 rng(2);
    for (int d = 2; d <= 12; d += 2) {
      for (int rep = 0; rep < 10; ++rep) {
        const auto A = random_matrix(d, rng);
        const double pf = pfaffian(A);
        CHECK(pf * pf == doctest::Approx(det(A)).epsilon(1e-10));
      }
    }
  }

  TEST_CASE("agrees with the recursive expansion") {
    std::mt19937 rng(3);
    for (int d = 2; d <= 8; d += 2) {
      for (int rep = 0; rep < 10; ++rep) {
        const auto A = random_matrix(d, rng);
        CHECK(pfaffian(A) == doctest::Approx(pf_expand(A)).epsilon(1e-11));
      }
    }
  }

  TEST_CASE("signed permutation covariance") {
    std::mt19937 rng(4);
    for (int d = 2; d <= 10; d += 2) {
      const auto A = random_matrix(d, rng);
      std::vector<int> perm(static_cast<std::size_t>(d));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<double> sgn(static_cast<std::size_t>(d));
      for (auto& s : sgn) s = (rng() % 2) ? 1.0 : -1.0;
      // B = Pᵀ A P with P e_j = s_j e_{perm[j]}
      AntisymmetricMatrix B(d);
      for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
          B.set(i, j, sgn[static_cast<std::size_t>(i)] * sgn[static_cast<std::size_t>(j)] *
                          A(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]));
        }
      }
      // det P = sign(perm) * Π s_j
      int inv = 0;
      for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) inv += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
      }
      double detp = (inv % 2 == 0) ? 1.0 : -1.0;
      for (double s : sgn) detp *= s;
      CHECK(pfaffian(B) == doctest::Approx(detp * pfaffian(A)).epsilon(1e-12));
    }
    // a single transposition flips the sign exactly
    AntisymmetricMatrix C(4);
    C.set(0, 1, 1.0);
    C.set(2, 3, 2.0);
    C.set(0, 2, 0.5);
    AntisymmetricMatrix D(4);
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        const int a = i == 0 ? 1 : (i == 1 ? 0 : i), b = j == 0 ? 1 : (j == 1 ? 0 : j);
        D.set(i, j, C(a, b));
      }
    }
    CHECK(pfaffian(D) == -pfaffian(C));
  }

  TEST_CASE("construction checks") {
    CHECK_THROWS_AS(AntisymmetricMatrix(3), DomainError);
    CHECK_THROWS_AS(AntisymmetricMatrix::from_rows({{0, 1}, {-1.1, 0}}), NumericalError);
    const auto A = AntisymmetricMatrix::from_rows({{0, 1}, {-1 - 1e-10, 0}});
    CHECK(A(1, 0) == -A(0, 1));
    CHECK_THROWS_AS(AntisymmetricMatrix::from_rows({{0, 1, 2}, {-1, 0}}), DomainError);
    AntisymmetricMatrix B(2);
    CHECK_THROWS_AS(B.set(0, 0, 1.0), DomainError);
  }

  TEST_CASE("singular input is flagged") {
    AntisymmetricMatrix A(4);
    A.set(0, 1, 1.0);
    A.set(0, 2, 2.0);
    A.set(1, 2, 3.0);
    const PfaffianResult r = pfaffian_checked(A);
    CHECK(r.near_singular);
    CHECK(r.value == 0.0);
  }

  TEST_CASE("assembly from the matrix kernel") {
    KernelParams p;
    p.z = cplx(0.3, 0.4);
    const std::vector<double> one = {1.2};
    const auto A = assemble(one, p);
    REQUIRE(A.dim() == 2);
    CHECK(A(0, 1) == doctest::Approx(matrix_kernel(1.2, 1.2, p).s_y()).epsilon(1e-9));
    const std::vector<double> pts = {0.6, 1.4, 3.0};
    const AssembledKernel ak = assemble_report(pts, p);
    CHECK(ak.violation < 1e-8);
    CHECK(ak.entry_error < 1e-9);
    const std::vector<double> shuffled = {3.0, 0.6, 1.4};
    CHECK(pfaffian(assemble(shuffled, p)) == doctest::Approx(pfaffian(ak.matrix)).epsilon(1e-10));
    const std::vector<double> dup = {1.0, 1.0};
    CHECK_THROWS_AS(assemble(dup, p), ParameterError);
    const std::vector<double> neg = {-1.0};
    CHECK_THROWS_AS(assemble(neg, p), ParameterError);
  }

  TEST_CASE("assembly rejects a non-antisymmetric kernel") {
    KernelParams p;
    p.z = cplx(0.3, 0.4);
    p.formula = SFormula::as_printed;
    const std::vector<double> pts = {1.0, 2.0};
    CHECK_THROWS_AS(assemble(pts, p), NumericalError);
  }
}
