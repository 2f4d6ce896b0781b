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
 * @file pfaffian.hpp
 * @brief Pfaffians of real antisymmetric matrices, and the block matrix
 *        built from the matrix kernel at a set of points.
 */

#ifndef ZPFAFF_PFAFFIAN_HPP
#define ZPFAFF_PFAFFIAN_HPP

#include <span>
#include <vector>

#include "zpfaff/kernels.hpp"

namespace zpfaff {

/// Dense row-major antisymmetric matrix of even dimension.
class AntisymmetricMatrix {
 public:
  /// Zero matrix. Odd `dim` is a DomainError.
  explicit AntisymmetricMatrix(int dim);

  /// From dense rows. Throws DomainError on odd or non-square input and
  /// NumericalError when max |a_ij + a_ji| ≥ 1e-8; otherwise the matrix
  /// is replaced by (A - Aᵀ)/2.
  static AntisymmetricMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int dim() const { return dim_; }
  double operator()(int i, int j) const { return a_[idx(i, j)]; }
  /// Sets a_ij = v and a_ji = -v. Diagonal writes must be zero.
  void set(int i, int j, double v);
  /// Largest |a_ij|.
  double max_abs() const;
  const std::vector<double>& data() const { return a_; }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j);
  }
  int dim_;
  std::vector<double> a_;
};

struct PfaffianResult {
  double value = 0.0;
  /// Set when a pivot fell below 1e-14 times the matrix scale; value is 0.
  bool near_singular = false;
};

/// Parlett-Reid reduction with partial pivoting.
PfaffianResult pfaffian_checked(const AntisymmetricMatrix& A);
double pfaffian(const AntisymmetricMatrix& A);

/// 2n x 2n matrix whose (i, j) block is matrix_kernel(x_i, x_j).
/// Points must be positive and distinct (ParameterError). A kernel
/// antisymmetry violation above 1e-6 is a NumericalError.
AntisymmetricMatrix assemble(std::span<const double> points, const KernelParams& p);

struct AssembledKernel {
  AntisymmetricMatrix matrix{0};
  /// max |a_ij + a_ji| before antisymmetrization.
  double violation = 0.0;
  /// Largest quadrature error over the kernel entries.
  double entry_error = 0.0;
};

/// assemble, keeping the diagnostics.
AssembledKernel assemble_report(std::span<const double> points, const KernelParams& p);

}  // namespace zpfaff

#endif  // ZPFAFF_PFAFFIAN_HPP
