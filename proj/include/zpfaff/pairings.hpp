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
 * @file pairings.hpp
 * @brief Perfect matchings of {-n, ..., -1, 1, ..., n}.
 *
 * These realize the coset space of the hyperoctahedral group in S(2n). Signed
 * symbols are identified with slots 1..2n by -i <-> 2i-1 and i <-> 2i, so that
 * the base matching {{-1,1}, ..., {-n,n}} becomes {{1,2}, ..., {2n-1,2n}}.
 */

#ifndef ZPFAFF_PAIRINGS_HPP
#define ZPFAFF_PAIRINGS_HPP

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zpfaff/permutation.hpp"

namespace zpfaff {

inline constexpr int kDefaultMatchingCap = 8;

/// Slot of a signed symbol. Throws DomainError for 0.
int symbol_to_slot(int symbol);
/// Inverse of symbol_to_slot. Throws DomainError for slot < 1.
int slot_to_symbol(int slot);

/// Bijection of the signed symbols {±1, ..., ±n}, stored as a permutation of
/// the slots.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(Permutation on_slots);
  /// From explicit pairs (symbol, image); unspecified symbols are fixed.
  static SignedPermutation from_images(const std::vector<std::pair<int, int>>& images, int n);
  /// Cycle notation on signed symbols, e.g. "(1 -2 3)(4 -4)".
  static SignedPermutation parse_cycles(std::string_view text, int n);
  static SignedPermutation identity(int n);

  int n() const { return slots_.degree() / 2; }
  int operator()(int symbol) const { return slot_to_symbol(slots_(symbol_to_slot(symbol))); }
  const Permutation& on_slots() const { return slots_; }
  /// First *this, then g.
  SignedPermutation then(const SignedPermutation& g) const;
  /// Largest n' with g(±n') != ±n', i.e. the level where g lives; 0 for e.
  int support_level() const;

 private:
  Permutation slots_;
};

/// A perfect matching stored as a partner map over slots.
class Matching {
 public:
  Matching() = default;
  /// Throws DomainError unless `pairs` partition {±1, ..., ±n}.
  Matching(int n, const std::vector<std::pair<int, int>>& pairs);
  /// {{-1,1}, ..., {-n,n}}.
  static Matching base(int n);
  /// Parses "{{1,3},{-2,5},...}" (braces optional around the whole).
  static Matching parse(std::string_view text);

  int n() const { return static_cast<int>(partner_.size()) / 2; }
  int partner(int symbol) const {
    return slot_to_symbol(partner_[static_cast<std::size_t>(symbol_to_slot(symbol) - 1)]);
  }
  /// Pairs (a, b) with a < b, sorted by a.
  std::vector<std::pair<int, int>> pairs() const;
  std::string to_string() const;

  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  std::vector<int> partner_;  // 1-based slots
};

/// All (2n-1)!! matchings. Order: the lowest free slot is paired with each
/// higher free slot in turn, recursively.
std::vector<Matching> enumerate_matchings(int n, int cap = kDefaultMatchingCap);

/// Number of cycles j_1 -> -j_2 -> j_2 -> ... -> -j_1 -> j_1; these are the
/// connected components of x ∪ base.
int cycle_count(const Matching& x);

/// t^{cycles} / (t (t+2) ... (t+2n-2)).
double t_measure(const Matching& x, double t);

/// Canonical projection X(n+1) -> X(n). Requires n+1 ≥ 1.
Matching project(const Matching& x);

/// Right action: every pair {a, b} becomes {g(a), g(b)}. A g of lower level
/// is extended by fixed points; a higher level is a DomainError.
Matching act(const Matching& x, const SignedPermutation& g);

/// c(x; g) = cycle_count(x g) - cycle_count(x).
int cocycle(const Matching& x, const SignedPermutation& g);

}  // namespace zpfaff

#endif  // ZPFAFF_PAIRINGS_HPP
