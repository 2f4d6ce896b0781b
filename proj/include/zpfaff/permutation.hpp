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

#ifndef ZPFAFF_PERMUTATION_HPP
#define ZPFAFF_PERMUTATION_HPP

#include <string>
#include <string_view>
#include <vector>

namespace zpfaff {

/// Bijection of {1, ..., N}.
class Permutation {
 public:
  Permutation() = default;
  /// images[i-1] = g(i). Throws DomainError unless this is a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  /// Cycle notation over {1..degree}: "(1 3 5)(6 7)", "(1,3,5)(6,7)", or
  /// "(135)(67)" when every symbol is a single digit. "()" and "e" give the
  /// identity.
  static Permutation parse_cycles(std::string_view text, int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return img_; }

  /// Apply *this first, then g. Degrees are padded with fixed points.
  Permutation then(const Permutation& g) const;
  Permutation inverse() const;
  /// Same permutation on {1..degree}, fixing the new symbols.
  Permutation extended(int degree) const;

  /// Cycle lengths, including fixed points, sorted decreasingly.
  std::vector<int> cycle_type() const;
  int sign() const;
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

/// g1 g2 acting on the right: first g1, then g2.
inline Permutation compose(const Permutation& g1, const Permutation& g2) { return g1.then(g2); }

}  // namespace zpfaff

#endif  // ZPFAFF_PERMUTATION_HPP
