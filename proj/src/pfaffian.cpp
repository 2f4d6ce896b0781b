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

#include "zpfaff/pfaffian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zpfaff/errors.hpp"

namespace zpfaff {

AntisymmetricMatrix::AntisymmetricMatrix(int dim) : dim_(dim) {
  if (dim < 0 || dim % 2 != 0) {
    throw DomainError("antisymmetric matrix needs even dimension, got " + std::to_string(dim));
  }
  a_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0.0);
}

AntisymmetricMatrix AntisymmetricMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  AntisymmetricMatrix A(n);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) throw DomainError("matrix is not square");
  }
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double aij = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const double aji = rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      worst = std::max(worst, std::abs(aij + aji));
      if (i != j) A.set(i, j, 0.5 * (aij - aji));
    }
  }
  if (!(worst < 1e-8)) {
    throw NumericalError("matrix is not antisymmetric (violation " + std::to_string(worst) + ")");
  }
  return A;
}

void AntisymmetricMatrix::set(int i, int j, double v) {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_) throw DomainError("matrix index out of range");
  if (i == j) {
    if (v != 0.0) throw DomainError("diagonal of an antisymmetric matrix is zero");
    return;
  }
  a_[idx(i, j)] = v;
  a_[idx(j, i)] = -v;
}

double AntisymmetricMatrix::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

PfaffianResult pfaffian_checked(const AntisymmetricMatrix& A) {
  const int n = A.dim();
  PfaffianResult res;
  if (n == 0) {
    res.value = 1.0;
    return res;
  }
  std::vector<double> a = A.data();
  auto at = [&](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
  };
  const double scale = A.max_abs();
  if (scale == 0.0) {
    res.near_singular = true;
    return res;
  }
  double pf = 1.0;
  for (int k = 0; k + 1 < n; k += 2) {
    int piv = k + 1;
    for (int i = k + 2; i < n; ++i) {
      if (std::abs(at(i, k)) > std::abs(at(piv, k))) piv = i;
    }
    if (piv != k + 1) {
      for (int j = 0; j < n; ++j) std::swap(at(k + 1, j), at(piv, j));
      for (int i = 0; i < n; ++i) std::swap(at(i, k + 1), at(i, piv));
      pf = -pf;
    }
    const double head = at(k, k + 1);
    if (std::abs(head) < 1e-14 * scale) {
      res.near_singular = true;
      return res;
    }
    pf *= head;
    // Gauss step: remove row/column k from the trailing block.
    for (int i = k + 2; i < n; ++i) {
      const double tau_i = at(k, i) / head;
      const double c_i = at(i, k + 1);
      for (int j = k + 2; j < n; ++j) {
        at(i, j) += tau_i * at(j, k + 1) - c_i * (at(k, j) / head);
      }
    }
  }
  res.value = pf;
  return res;
}

double pfaffian(const AntisymmetricMatrix& A) { return pfaffian_checked(A).value; }

AssembledKernel assemble_report(std::span<const double> points, const KernelParams& p) {
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i) {
    const double x = points[static_cast<std::size_t>(i)];
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw ParameterError("points must be positive and finite");
    }
    for (int j = 0; j < i; ++j) {
      if (points[static_cast<std::size_t>(j)] == x) throw ParameterError("points must be distinct");
    }
  }
  std::vector<double> raw(static_cast<std::size_t>(4 * n * n), 0.0);
  const int d = 2 * n;
  auto r = [&](int i, int j) -> double& {
    return raw[static_cast<std::size_t>(i) * static_cast<std::size_t>(d) + static_cast<std::size_t>(j)];
  };
  AssembledKernel out;
  out.matrix = AntisymmetricMatrix(d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const MatrixKernelValue kv =
          matrix_kernel(points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)], p);
      out.entry_error = std::max(out.entry_error, kv.error);
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          r(2 * i + a, 2 * j + b) = kv.m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        }
      }
    }
  }
  double worst = 0.0;
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) worst = std::max(worst, std::abs(r(i, j) + r(j, i)));
  }
  out.violation = worst;
  if (worst > 1e-6) {
    throw NumericalError("assembled kernel matrix is not antisymmetric (violation " +
                         std::to_string(worst) + ")");
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) out.matrix.set(i, j, 0.5 * (r(i, j) - r(j, i)));
  }
  return out;
}

AntisymmetricMatrix assemble(std::span<const double> points, const KernelParams& p) {
  return assemble_report(points, p).matrix;
}

}  // namespace zpfaff
