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

// Depth-first enumeration of all diagrams up to a given size, carrying the
// unnormalized weight |(z)_λ|²/(H H') and the positive lattice coordinates
// along the way.

#ifndef ZPFAFF_LATTICE_HPP
#define ZPFAFF_LATTICE_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "zpfaff/partitions.hpp"

namespace zpfaff {

class LatticeSweep {
 public:
  /// Throws ParameterError for z = 0 and ResourceError above `cap`.
  LatticeSweep(std::complex<double> z, const Theta& theta, int n_max, int workers = 0,
               int cap = kDefaultPartitionCap);

  /// Registers a subset X of ℤ_{≥0} + 1/2; returns its index.
  std::size_t add_query(std::span<const HalfInteger> X);

  /// Runs the enumeration once for all registered queries.
  void run();

  int n_max() const { return n_max_; }
  /// Σ_{λ ⊢ n} |(z)_λ|²/(H H'); equals (t)_n / n! exactly.
  double stratum_mass(int n) const { return mass_.at(static_cast<std::size_t>(n)); }
  /// Same sum restricted to λ whose coordinates contain query q.
  double query_stratum(std::size_t q, int n) const;
  std::uint64_t query_terms(std::size_t q) const { return terms_.at(q); }
  std::uint64_t nodes_visited() const { return nodes_; }

 private:
  struct Partial;

  std::complex<double> z_;
  Theta theta_;
  int n_max_;
  int workers_;
  std::vector<std::vector<int>> queries_;  // b-values, x = b + 1/2
  std::vector<double> mass_;
  std::vector<std::vector<double>> qsum_;
  std::vector<std::uint64_t> terms_;
  std::uint64_t nodes_ = 0;
  bool done_ = false;
};

}  // namespace zpfaff

#endif  // ZPFAFF_LATTICE_HPP
