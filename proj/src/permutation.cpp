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

#include "zpfaff/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>

#include "zpfaff/errors.hpp"

namespace zpfaff {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size() + 1, 0);
  for (int v : img_) {
    if (v < 1 || v > degree() || seen[static_cast<std::size_t>(v)]) {
      throw DomainError("permutation images must form a bijection of 1..N");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 0) throw DomainError("negative permutation degree");
  std::vector<int> v(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::parse_cycles(std::string_view text, int degree) {
  std::vector<int> img = identity(degree).img_;
  std::vector<char> used(static_cast<std::size_t>(degree) + 1, 0);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw DomainError("cannot parse permutation '" + std::string(text) + "': " + why);
  };
  auto skip_ws = [&]() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (text.substr(pos) == "e" || pos == text.size()) return Permutation(std::move(img));
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') fail("expected '('");
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) fail("unbalanced parentheses");
    const std::string_view body = text.substr(pos + 1, close - pos - 1);
    pos = close + 1;
    std::vector<int> cyc;
    const bool separated = body.find_first_of(", \t") != std::string_view::npos;
    if (separated) {
      std::size_t i = 0;
      while (i < body.size()) {
        while (i < body.size() && (body[i] == ',' || std::isspace(static_cast<unsigned char>(body[i])))) ++i;
        if (i == body.size()) break;
        int v = 0;
        auto [ptr, ec] = std::from_chars(body.data() + i, body.data() + body.size(), v);
        if (ec != std::errc()) fail("bad symbol");
        cyc.push_back(v);
        i = static_cast<std::size_t>(ptr - body.data());
      }
    } else {
      for (char ch : body) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) fail("bad symbol");
        cyc.push_back(ch - '0');
      }
    }
    for (int v : cyc) {
      if (v < 1 || v > degree) fail("symbol " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      if (used[static_cast<std::size_t>(v)]) fail("symbol " + std::to_string(v) + " repeated");
      used[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      img[static_cast<std::size_t>(cyc[k] - 1)] = cyc[(k + 1) % cyc.size()];
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::then(const Permutation& g) const {
  const int n = std::max(degree(), g.degree());
  const Permutation a = extended(n), b = g.extended(n);
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i - 1)] = b(a(i));
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (int i = 1; i <= degree(); ++i) v[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(v));
}

Permutation Permutation::extended(int n) const {
  if (n < degree()) throw DomainError("cannot shrink a permutation");
  std::vector<int> v = img_;
  for (int i = degree() + 1; i <= n; ++i) v.push_back(i);
  Permutation p;
  p.img_ = std::move(v);
  return p;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<char> seen(img_.size() + 1, 0);
  std::vector<int> out;
  for (int i = 1; i <= degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
      seen[static_cast<std::size_t>(j)] = 1;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

int Permutation::sign() const {
  int s = 1;
  for (int len : cycle_type()) {
    if (len % 2 == 0) s = -s;
  }
  return s;
}

std::string Permutation::to_cycle_string() const {
  std::vector<char> seen(img_.size() + 1, 0);
  std::string s;
  for (int i = 1; i <= degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)] || (*this)(i) == i) continue;
    s += '(';
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
      if (j != i) s += ' ';
      s += std::to_string(j);
      seen[static_cast<std::size_t>(j)] = 1;
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

}  // namespace zpfaff
