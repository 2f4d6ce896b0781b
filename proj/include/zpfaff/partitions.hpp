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
 * @file partitions.hpp
 * @brief Young diagrams with Jack-parameter geometry.
 *
 * Boxes are indexed (row, column), both 1-based. The θ-content of a box is
 * (column - 1) - θ (row - 1); its sign splits a diagram into a positive and a
 * negative part, which in turn give the lattice coordinates on ℤ + 1/2.
 */

#ifndef ZPFAFF_PARTITIONS_HPP
#define ZPFAFF_PARTITIONS_HPP

#include <complex>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zpfaff {

inline constexpr int kDefaultPartitionCap = 100;

/// Positive rational Jack parameter θ = num/den, kept exact so that the sign
/// of a θ-content is decided in integer arithmetic.
class Theta {
 public:
  Theta() = default;
  Theta(std::int64_t num, std::int64_t den);

  /// Nearest rational with denominator ≤ 10^6 reproducing `value` to 1e-12
  /// relative; anything else is rejected as a parameter error.
  static Theta from_double(double value);
  /// Accepts "p/q" or a decimal literal.
  static Theta parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  Theta reciprocal() const { return Theta(den_, num_); }
  std::string to_string() const;

  friend bool operator==(const Theta&, const Theta&) = default;

 private:
  std::int64_t num_ = 1;
  std::int64_t den_ = 1;
};

struct Box {
  int row = 1;
  int col = 1;
};

/// An integer partition λ_1 ≥ λ_2 ≥ ... > 0.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  /// Throws DomainError unless the parts are positive and weakly decreasing.
  explicit YoungDiagram(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// λ_i with 1-based i; zero past the last row.
  int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
  bool contains(Box b) const { return b.row >= 1 && b.col >= 1 && b.col <= part(b.row); }

  YoungDiagram transpose() const;
  /// "(3,1)"; the empty diagram prints as "()".
  std::string to_string() const;
  /// Parses "(3,1)", "3,1" or "()".
  static YoungDiagram parse(std::string_view text);

  friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

inline YoungDiagram transpose(const YoungDiagram& lambda) { return lambda.transpose(); }

/// A point of ℤ + 1/2 stored as its (odd) double.
struct HalfInteger {
  std::int64_t twice = 1;

  static HalfInteger from_twice(std::int64_t t);
  /// "3/2", "-5/2" or a decimal ending in .5; anything else is a DomainError.
  static HalfInteger parse(std::string_view text);

  double value() const { return static_cast<double>(twice) / 2.0; }
  std::string to_string() const;

  friend auto operator<=>(const HalfInteger&, const HalfInteger&) = default;
};

/// (A|B)_θ(λ): negatives -a_i - 1/2 from the rows of λ⁺, positives b_j + 1/2
/// from the columns of λ⁻, in the order a_1 ≥ a_2 ≥ ... and b_1 ≥ b_2 ≥ ....
/// The positive side is repetition-free for θ ≤ 1 and the
/// negative side for θ ≥ 1; otherwise coincident lengths are kept.
struct LatticeConfig {
  std::vector<HalfInteger> negatives;
  std::vector<HalfInteger> positives;
  Theta theta;

  bool empty() const { return negatives.empty() && positives.empty(); }
  std::size_t count() const { return negatives.size() + positives.size(); }
};

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), (n-2,2), ...
/// Throws ResourceError when n exceeds `cap`.
std::vector<YoungDiagram> enumerate_partitions(int n, int cap = kDefaultPartitionCap);

/// θ-content (j-1) - θ(i-1). Throws ParameterError for θ ≤ 0.
double theta_content(Box b, double theta);
/// Exact sign of the θ-content: -1, 0 or +1.
int theta_content_sign(Box b, const Theta& theta);

struct HookProducts {
  double h = 1.0;        ///< ∏ (arm + θ·leg + 1)
  double h_prime = 1.0;  ///< ∏ (arm + θ·leg + θ)
};

HookProducts hook_products(const YoungDiagram& lambda, double theta);

struct LogHookProducts {
  double log_h = 0.0;
  double log_h_prime = 0.0;
};

LogHookProducts log_hook_products(const YoungDiagram& lambda, double theta);

/// (z)_{λ,θ} = ∏_{(i,j)∈λ} (z + (j-1) - (i-1)θ).
std::complex<double> generalized_pochhammer(std::complex<double> z, const YoungDiagram& lambda,
                                            double theta);

/// log of the generalized Pochhammer symbol, with exact zeros reported
/// separately (some factor of modulus below 1e-300) instead of as -inf.
struct LogPochhammer {
  std::complex<double> log{0.0, 0.0};
  bool zero = false;
};

LogPochhammer log_generalized_pochhammer(std::complex<double> z, const YoungDiagram& lambda,
                                         double theta);

LatticeConfig frobenius_coordinates(const YoungDiagram& lambda, const Theta& theta);

/// Length of column j (1-based) of λ⁻ = {b : c_θ(b) ≤ 0}, i.e. λ'_j minus the
/// number of leading rows whose box in column j has positive content.
inline int negative_column_length(int column_length, int j, const Theta& theta) {
  // rows i with q(j-1) ≤ p(i-1) start at 1 + ceil(q(j-1)/p)
  const std::int64_t q = theta.den(), p = theta.num();
  const std::int64_t skip = (q * (j - 1) + p - 1) / p;
  const std::int64_t len = column_length - skip;
  return len > 0 ? static_cast<int>(len) : 0;
}

/// Length of row i (1-based) of λ⁺ = {b : c_θ(b) > 0}.
inline int positive_row_length(int row_length, int i, const Theta& theta) {
  const std::int64_t q = theta.den(), p = theta.num();
  const std::int64_t skip = 1 + (p * (i - 1)) / q;
  const std::int64_t len = row_length - skip;
  return len > 0 ? static_cast<int>(len) : 0;
}

}  // namespace zpfaff

#endif  // ZPFAFF_PARTITIONS_HPP
