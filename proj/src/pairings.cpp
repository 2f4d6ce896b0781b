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

#include "zpfaff/pairings.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>

#include "zpfaff/errors.hpp"

namespace zpfaff {

int symbol_to_slot(int symbol) {
  if (symbol == 0) throw DomainError("0 is not a signed symbol");
  return symbol < 0 ? -2 * symbol - 1 : 2 * symbol;
}

int slot_to_symbol(int slot) {
  if (slot < 1) throw DomainError("slots are 1-based");
  return slot % 2 == 1 ? -(slot + 1) / 2 : slot / 2;
}

// ---------------------------------------------------------------- SignedPermutation

SignedPermutation::SignedPermutation(Permutation on_slots) : slots_(std::move(on_slots)) {
  if (slots_.degree() % 2 != 0) throw DomainError("signed permutations act on an even number of slots");
}

SignedPermutation SignedPermutation::identity(int n) { return SignedPermutation(Permutation::identity(2 * n)); }

SignedPermutation SignedPermutation::from_images(const std::vector<std::pair<int, int>>& images, int n) {
  std::vector<int> img = Permutation::identity(2 * n).images();
  for (auto [s, v] : images) {
    if (std::abs(s) > n || std::abs(v) > n) throw DomainError("symbol outside ±1..±" + std::to_string(n));
    img[static_cast<std::size_t>(symbol_to_slot(s) - 1)] = symbol_to_slot(v);
  }
  return SignedPermutation(Permutation(std::move(img)));
}

SignedPermutation SignedPermutation::parse_cycles(std::string_view text, int n) {
  std::vector<std::pair<int, int>> images;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw DomainError("cannot parse signed permutation '" + std::string(text) + "': " + why);
  };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] == 'e' && pos + 1 == text.size()) break;
    if (text[pos] != '(') fail("expected '('");
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) fail("unbalanced parentheses");
    const std::string_view body = text.substr(pos + 1, close - pos - 1);
    pos = close + 1;
    std::vector<int> cyc;
    std::size_t i = 0;
    while (i < body.size()) {
      if (body[i] == ',' || std::isspace(static_cast<unsigned char>(body[i]))) {
        ++i;
        continue;
      }
      if (body[i] == '+') ++i;
      int v = 0;
      auto [ptr, ec] = std::from_chars(body.data() + i, body.data() + body.size(), v);
      if (ec != std::errc() || v == 0) fail("bad symbol");
      cyc.push_back(v);
      i = static_cast<std::size_t>(ptr - body.data());
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) images.emplace_back(cyc[k], cyc[(k + 1) % cyc.size()]);
  }
  std::vector<int> seen;
  for (auto [s, v] : images) seen.push_back(s);
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) fail("symbol repeated");
  return from_images(images, n);
}

SignedPermutation SignedPermutation::then(const SignedPermutation& g) const {
  return SignedPermutation(slots_.then(g.slots_));
}

int SignedPermutation::support_level() const {
  for (int i = n(); i >= 1; --i) {
    if ((*this)(i) != i || (*this)(-i) != -i) return i;
  }
  return 0;
}

// ---------------------------------------------------------------- Matching

Matching::Matching(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 0) throw DomainError("negative matching size");
  if (static_cast<int>(pairs.size()) != n) throw DomainError("a matching of 2n symbols has n pairs");
  partner_.assign(static_cast<std::size_t>(2 * n), 0);
  for (auto [a, b] : pairs) {
    if (a == 0 || b == 0 || std::abs(a) > n || std::abs(b) > n || a == b) {
      throw DomainError("bad pair {" + std::to_string(a) + "," + std::to_string(b) + "}");
    }
    const int sa = symbol_to_slot(a), sb = symbol_to_slot(b);
    if (partner_[static_cast<std::size_t>(sa - 1)] || partner_[static_cast<std::size_t>(sb - 1)]) {
      throw DomainError("symbol used twice in matching");
    }
    partner_[static_cast<std::size_t>(sa - 1)] = sb;
    partner_[static_cast<std::size_t>(sb - 1)] = sa;
  }
}

Matching Matching::base(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i) pairs.emplace_back(-i, i);
  return Matching(n, pairs);
}

Matching Matching::parse(std::string_view text) {
  std::vector<int> nums;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
      if (ec != std::errc()) throw DomainError("cannot parse matching '" + std::string(text) + "'");
      nums.push_back(v);
      i = static_cast<std::size_t>(ptr - text.data());
    } else if (c == '{' || c == '}' || c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else {
      throw DomainError("cannot parse matching '" + std::string(text) + "'");
    }
  }
  if (nums.size() % 2 != 0) throw DomainError("matching has an odd number of symbols");
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t k = 0; k < nums.size(); k += 2) pairs.emplace_back(nums[k], nums[k + 1]);
  return Matching(static_cast<int>(pairs.size()), pairs);
}

std::vector<std::pair<int, int>> Matching::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int s = 1; s <= 2 * n(); ++s) {
    const int a = slot_to_symbol(s), b = slot_to_symbol(partner_[static_cast<std::size_t>(s - 1)]);
    if (a < b) out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Matching::to_string() const {
  std::string s = "{";
  bool first = true;
  for (auto [a, b] : pairs()) {
    if (!first) s += ',';
    first = false;
    s += "{" + std::to_string(a) + "," + std::to_string(b) + "}";
  }
  return s + "}";
}

// ---------------------------------------------------------------- operations

std::vector<Matching> enumerate_matchings(int n, int cap) {
  if (n < 0) throw DomainError("negative matching size");
  if (n > cap) throw ResourceError("matching size " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  std::vector<Matching> out;
  std::vector<int> partner(static_cast<std::size_t>(2 * n), 0);
  std::vector<std::pair<int, int>> pairs;
  auto rec = [&](auto&& self) -> void {
    int lo = 0;
    while (lo < 2 * n && partner[static_cast<std::size_t>(lo)]) ++lo;
    if (lo == 2 * n) {
      out.emplace_back(n, pairs);
      return;
    }
    for (int hi = lo + 1; hi < 2 * n; ++hi) {
      if (partner[static_cast<std::size_t>(hi)]) continue;
      partner[static_cast<std::size_t>(lo)] = hi + 1;
      partner[static_cast<std::size_t>(hi)] = lo + 1;
      pairs.emplace_back(slot_to_symbol(lo + 1), slot_to_symbol(hi + 1));
      self(self);
      pairs.pop_back();
      partner[static_cast<std::size_t>(lo)] = 0;
      partner[static_cast<std::size_t>(hi)] = 0;
    }
  };
  rec(rec);
  return out;
}

int cycle_count(const Matching& x) {
  const int n = x.n();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  int cycles = 0;
  for (int j = 1; j <= n; ++j) {
    if (seen[static_cast<std::size_t>(j)]) continue;
    ++cycles;
    // j -> partner(j) -> -partner(j) -> ...; marks |symbol| only
    int cur = j;
    do {
      seen[static_cast<std::size_t>(std::abs(cur))] = 1;
      cur = -x.partner(cur);
    } while (cur != j && cur != -j);
  }
  return cycles;
}

double t_measure(const Matching& x, double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw ParameterError("t must be positive");
  double v = std::pow(t, cycle_count(x));
  for (int k = 0; k < x.n(); ++k) v /= t + 2.0 * k;
  return v;
}

Matching project(const Matching& x) {
  const int m = x.n();
  if (m < 1) throw DomainError("cannot project the empty matching");
  std::vector<std::pair<int, int>> out;
  const int pm = x.partner(-m), pp = x.partner(m);
  for (auto [a, b] : x.pairs()) {
    if (std::abs(a) == m || std::abs(b) == m) continue;
    out.emplace_back(a, b);
  }
  if (pm != m) out.emplace_back(pm, pp);
  return Matching(m - 1, out);
}

Matching act(const Matching& x, const SignedPermutation& g) {
  SignedPermutation h = g;
  if (g.n() > x.n()) {
    if (g.support_level() > x.n()) {
      throw DomainError("permutation moves symbols beyond ±" + std::to_string(x.n()));
    }
    std::vector<int> img(g.on_slots().images().begin(), g.on_slots().images().begin() + 2 * x.n());
    h = SignedPermutation(Permutation(std::move(img)));
  } else if (g.n() < x.n()) {
    h = SignedPermutation(g.on_slots().extended(2 * x.n()));
  }
  std::vector<std::pair<int, int>> out;
  for (auto [a, b] : x.pairs()) out.emplace_back(h(a), h(b));
  return Matching(x.n(), out);
}

int cocycle(const Matching& x, const SignedPermutation& g) {
  return cycle_count(act(x, g)) - cycle_count(x);
}

}  // namespace zpfaff
