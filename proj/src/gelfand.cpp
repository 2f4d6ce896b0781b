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

#include "zpfaff/gelfand.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "zpfaff/errors.hpp"

namespace zpfaff {

// ---------------------------------------------------------------- Rational

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

// ---------------------------------------------------------------- coset type

CosetType coset_type(const Permutation& g) {
  const int deg = g.degree();
  if (deg % 2 != 0) throw DomainError("coset type needs a permutation of even degree");
  std::vector<int> parent(static_cast<std::size_t>(deg) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  for (int i = 1; i <= deg / 2; ++i) {
    unite(2 * i - 1, 2 * i);
    unite(g(2 * i - 1), g(2 * i));
  }
  std::map<int, int> comp;
  for (int v = 1; v <= deg; ++v) ++comp[find(v)];
  std::vector<int> parts;
  for (auto [root, size] : comp) {
    if (size % 2 != 0) throw Error("internal: odd component in the coset graph");
    parts.push_back(size / 2);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return CosetType(std::move(parts));
}

std::vector<Permutation> hyperoctahedral_group(int n) {
  if (n < 0) throw DomainError("negative level");
  if (n > kZonalLevelCap + 2) throw ResourceError("hyperoctahedral group above level " + std::to_string(kZonalLevelCap + 2));
  std::vector<int> blocks(static_cast<std::size_t>(n));
  std::iota(blocks.begin(), blocks.end(), 1);
  std::vector<Permutation> out;
  do {
    for (unsigned flips = 0; flips < (1u << n); ++flips) {
      std::vector<int> img(static_cast<std::size_t>(2 * n));
      for (int i = 1; i <= n; ++i) {
        const int b = blocks[static_cast<std::size_t>(i - 1)];
        const int f = (flips >> (i - 1)) & 1u;
        img[static_cast<std::size_t>(2 * i - 2)] = 2 * b - 1 + f;
        img[static_cast<std::size_t>(2 * i - 1)] = 2 * b - f;
      }
      out.emplace_back(std::move(img));
    }
  } while (std::next_permutation(blocks.begin(), blocks.end()));
  return out;
}

// ---------------------------------------------------------------- characters

namespace {

// χ^λ on cycle type ρ by rim-hook removal on beta-numbers.
class MurnaghanNakayama {
 public:
  explicit MurnaghanNakayama(std::vector<int> rho) : rho_(std::move(rho)) {}

  std::int64_t eval(const std::vector<int>& lambda) {
    int size = 0;
    for (int v : lambda) size += v;
    if (size == 0) return 1;
    if (auto it = memo_.find(lambda); it != memo_.end()) return it->second;
    // parts of ρ are consumed largest first, so the remaining size fixes the index
    int used = total() - size;
    std::size_t idx = 0;
    while (used > 0) used -= rho_[idx++];
    const int k = rho_[idx];
    const int l = static_cast<int>(lambda.size());
    std::vector<int> beta(lambda.size());
    for (int i = 0; i < l; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (l - 1 - i);
    std::int64_t sum = 0;
    for (int i = 0; i < l; ++i) {
      const int b = beta[static_cast<std::size_t>(i)];
      const int nb = b - k;
      if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
      int between = 0;
      for (int c : beta) between += (c > nb && c < b);
      std::vector<int> nbeta = beta;
      nbeta[static_cast<std::size_t>(i)] = nb;
      std::sort(nbeta.begin(), nbeta.end(), std::greater<>());
      std::vector<int> mu;
      for (int j = 0; j < l; ++j) {
        const int part = nbeta[static_cast<std::size_t>(j)] - (l - 1 - j);
        if (part > 0) mu.push_back(part);
      }
      const std::int64_t sub = eval(mu);
      sum += (between % 2 == 0) ? sub : -sub;
    }
    memo_.emplace(lambda, sum);
    return sum;
  }

 private:
  int total() const { return std::accumulate(rho_.begin(), rho_.end(), 0); }
  std::vector<int> rho_;
  std::map<std::vector<int>, std::int64_t> memo_;
};

}  // namespace

std::int64_t character_S2n(const YoungDiagram& mu, const YoungDiagram& cls) {
  if (mu.size() != cls.size()) throw DomainError("character and class sizes differ");
  if (mu.size() > kCharacterDegreeCap) throw ResourceError("character degree above " + std::to_string(kCharacterDegreeCap));
  MurnaghanNakayama mn({cls.parts().begin(), cls.parts().end()});
  return mn.eval({mu.parts().begin(), mu.parts().end()});
}

CharacterTable::CharacterTable(int degree) : degree_(degree) {
  if (degree < 0) throw DomainError("negative degree");
  if (degree > kCharacterDegreeCap) throw ResourceError("character degree above " + std::to_string(kCharacterDegreeCap));
  parts_ = enumerate_partitions(degree);
  const std::size_t k = parts_.size();
  table_.assign(k * k, 0);
  for (std::size_t c = 0; c < k; ++c) {
    MurnaghanNakayama mn({parts_[c].parts().begin(), parts_[c].parts().end()});
    for (std::size_t r = 0; r < k; ++r) {
      table_[r * k + c] = mn.eval({parts_[r].parts().begin(), parts_[r].parts().end()});
    }
  }
}

const CharacterTable& CharacterTable::of(int degree) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CharacterTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[degree];
  if (!slot) slot = std::make_unique<CharacterTable>(degree);
  return *slot;
}

std::size_t CharacterTable::index_of(const YoungDiagram& lambda) const {
  const auto it = std::find(parts_.begin(), parts_.end(), lambda);
  if (it == parts_.end()) throw DomainError(lambda.to_string() + " is not a partition of " + std::to_string(degree_));
  return static_cast<std::size_t>(it - parts_.begin());
}

std::int64_t CharacterTable::value(const YoungDiagram& irrep, const YoungDiagram& cls) const {
  return at(index_of(irrep), index_of(cls));
}

std::int64_t CharacterTable::class_size(std::size_t cls) const {
  std::int64_t denom = 1;
  std::map<int, int> mult;
  for (int k : parts_[cls].parts()) ++mult[k];
  for (auto [k, m] : mult) {
    for (int i = 0; i < m; ++i) denom *= k;
    for (int i = 2; i <= m; ++i) denom *= i;
  }
  std::int64_t fact = 1;
  for (int i = 2; i <= degree_; ++i) fact *= i;
  return fact / denom;
}

// ---------------------------------------------------------------- zonal spherical functions

Rational zonal_spherical(const YoungDiagram& lambda, const Permutation& g) {
  const int n = lambda.size();
  if (n > kZonalLevelCap) throw ResourceError("zonal spherical functions above level " + std::to_string(kZonalLevelCap));
  if (g.degree() > 2 * n) throw DomainError("permutation degree exceeds 2n");
  const Permutation gg = g.extended(2 * n);
  std::vector<int> doubled;
  for (int v : lambda.parts()) doubled.push_back(2 * v);
  const YoungDiagram two_lambda(doubled);
  const CharacterTable& table = CharacterTable::of(2 * n);
  const std::size_t row = table.index_of(two_lambda);
  const auto group = hyperoctahedral_group(n);
  std::int64_t sum = 0;
  for (const Permutation& h : group) {
    sum += table.at(row, table.index_of(YoungDiagram(gg.then(h).cycle_type())));
  }
  return Rational(sum, static_cast<std::int64_t>(group.size()));
}

double spherical_restriction(const ZParams& p, int n, const Permutation& g) {
  p.validate();
  if (!(p.theta == Theta(1, 2))) throw ParameterError("the spherical expansion is defined at theta = 1/2");
  if (n < 1) throw DomainError("level must be positive");
  double sum = 0.0;
  for (const YoungDiagram& lambda : enumerate_partitions(n)) {
    const double m = z_measure(lambda, p);
    if (m == 0.0) continue;
    sum += m * zonal_spherical(lambda, g).value();
  }
  return sum;
}

// ---------------------------------------------------------------- Thoma side

void ThomaPoint::validate() const {
  double total = 0.0;
  for (const auto* v : {&alpha, &beta}) {
    for (std::size_t i = 0; i < v->size(); ++i) {
      const double x = (*v)[i];
      if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("Thoma coordinates must be nonnegative");
      if (i > 0 && x > (*v)[i - 1]) throw DomainError("Thoma coordinates must be weakly decreasing");
      total += x;
    }
  }
  if (total > 1.0 + 1e-12) throw DomainError("Thoma coordinates must sum to at most 1");
}

double ptilde(int k, const ThomaPoint& omega, double theta) {
  if (k < 1) throw DomainError("ptilde index must be positive");
  if (k == 1) return 1.0;
  double a = 0.0, b = 0.0;
  for (double x : omega.alpha) a += std::pow(x, k);
  for (double y : omega.beta) b += std::pow(y, k);
  return a + std::pow(-theta, k - 1) * b;
}

double extreme_character(const ThomaPoint& omega, const CosetType& rho, double theta) {
  omega.validate();
  double v = 1.0;
  for (int k : rho.parts()) {
    if (k >= 2) v *= ptilde(k, omega, theta);
  }
  return v;
}

}  // namespace zpfaff
