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

#ifndef ZPFAFF_GELFAND_HPP
#define ZPFAFF_GELFAND_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "zpfaff/measures.hpp"
#include "zpfaff/partitions.hpp"
#include "zpfaff/permutation.hpp"

namespace zpfaff {

inline constexpr int kCharacterDegreeCap = 12;
inline constexpr int kZonalLevelCap = 4;

/// Reduced fraction with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Partition of n recording the component half-sizes of Γ(g).
using CosetType = YoungDiagram;

/// Γ(g) on {1..2n} has edges {2i-1, 2i} and {g(2i-1), g(2i)}. Throws
/// DomainError for odd degree.
CosetType coset_type(const Permutation& g);

/// The 2^n n! permutations fixing the matching {{1,2}, ..., {2n-1,2n}}.
std::vector<Permutation> hyperoctahedral_group(int n);

/// Irreducible characters of S(N), rows and columns both indexed by the
/// partitions of N in reverse lexicographic order.
class CharacterTable {
 public:
  explicit CharacterTable(int degree);
  /// Shared instance, built on first use.
  static const CharacterTable& of(int degree);

  int degree() const { return degree_; }
  const std::vector<YoungDiagram>& partitions() const { return parts_; }
  std::int64_t at(std::size_t irrep, std::size_t cls) const { return table_[irrep * parts_.size() + cls]; }
  std::int64_t value(const YoungDiagram& irrep, const YoungDiagram& cls) const;
  std::size_t index_of(const YoungDiagram& lambda) const;
  /// N! / ∏ k^{m_k} m_k!
  std::int64_t class_size(std::size_t cls) const;

 private:
  int degree_;
  std::vector<YoungDiagram> parts_;
  std::vector<std::int64_t> table_;
};

/// Murnaghan-Nakayama evaluation of χ^μ on the class of cycle type `cls`.
/// Throws DomainError on size mismatch.
std::int64_t character_S2n(const YoungDiagram& mu, const YoungDiagram& cls);

/// w^λ(g) = |H(n)|^{-1} Σ_h χ^{2λ}(g h), with 2λ = (2λ_1, 2λ_2, ...).
Rational zonal_spherical(const YoungDiagram& lambda, const Permutation& g);

/// Σ_{λ ⊢ n} M^(n)(λ) w^λ(g) at θ = 1/2; g of degree ≤ 2n is padded.
double spherical_restriction(const ZParams& p, int n, const Permutation& g);

/// Point of the Thoma simplex with finitely many nonzero coordinates.
struct ThomaPoint {
  std::vector<double> alpha;
  std::vector<double> beta;
  /// Throws DomainError unless both lists are nonnegative, weakly decreasing
  /// and Σα + Σβ ≤ 1.
  void validate() const;
};

/// 1 for k = 1, otherwise Σ α_j^k + (-θ)^{k-1} Σ β_j^k.
double ptilde(int k, const ThomaPoint& omega, double theta);

/// ∏ over the parts k of ρ of ptilde(k, ω, θ); parts equal to 1 give 1.
double extreme_character(const ThomaPoint& omega, const CosetType& rho, double theta = 0.5);

}  // namespace zpfaff

#endif  // ZPFAFF_GELFAND_HPP
