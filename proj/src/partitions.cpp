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

#include "zpfaff/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <cmath>
#include <numeric>
#include <sstream>

#include "zpfaff/errors.hpp"

namespace zpfaff {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_int64(std::string_view s, std::int64_t& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (s.empty()) return false;
  std::string buf(s);
  char* end = nullptr;
  out = std::strtod(buf.c_str(), &end);
  return end == buf.c_str() + buf.size() && std::isfinite(out);
}

void check_theta(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw ParameterError("theta must be a positive finite number, got " + std::to_string(theta));
  }
}

}  // namespace

// ---------------------------------------------------------------- Theta

Theta::Theta(std::int64_t num, std::int64_t den) {
  if (num <= 0 || den <= 0) {
    throw ParameterError("theta must be a positive rational, got " + std::to_string(num) + "/" +
                         std::to_string(den));
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Theta Theta::from_double(double value) {
  check_theta(value);
  // continued fraction convergents
  std::int64_t h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double x = value;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(x);
    if (a > 1e12) break;
    const auto ai = static_cast<std::int64_t>(a);
    const std::int64_t h2 = ai * h1 + h0;
    const std::int64_t k2 = ai * k1 + k0;
    if (k2 > 1000000) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    const double approx = static_cast<double>(h1) / static_cast<double>(k1);
    if (std::abs(approx - value) <= 1e-12 * value) return Theta(h1, k1);
    const double frac = x - a;
    if (frac <= 0.0) break;
    x = 1.0 / frac;
  }
  throw ParameterError("theta " + std::to_string(value) +
                       " has no rational form with denominator <= 1e6");
}

Theta Theta::parse(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash != std::string_view::npos) {
    std::int64_t p = 0, q = 0;
    if (!parse_int64(t.substr(0, slash), p) || !parse_int64(t.substr(slash + 1), q)) {
      throw ParameterError("cannot parse theta '" + std::string(text) + "'");
    }
    return Theta(p, q);
  }
  double v = 0.0;
  if (!parse_double(t, v)) throw ParameterError("cannot parse theta '" + std::string(text) + "'");
  return from_double(v);
}

std::string Theta::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

// ---------------------------------------------------------------- YoungDiagram

YoungDiagram::YoungDiagram(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

YoungDiagram YoungDiagram::transpose() const {
  if (parts_.empty()) return {};
  std::vector<int> cols(static_cast<std::size_t>(parts_.front()), 0);
  for (int len : parts_) {
    for (int j = 0; j < len; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return YoungDiagram(std::move(cols));
}

std::string YoungDiagram::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

YoungDiagram YoungDiagram::parse(std::string_view text) {
  std::string_view t = trim(text);
  if (!t.empty() && t.front() == '(') {
    if (t.back() != ')') throw DomainError("cannot parse diagram '" + std::string(text) + "'");
    t = trim(t.substr(1, t.size() - 2));
  }
  std::vector<int> parts;
  while (!t.empty()) {
    const auto comma = t.find(',');
    std::int64_t v = 0;
    if (!parse_int64(t.substr(0, comma), v) || v > 1000000) {
      throw DomainError("cannot parse diagram '" + std::string(text) + "'");
    }
    parts.push_back(static_cast<int>(v));
    if (comma == std::string_view::npos) break;
    t = t.substr(comma + 1);
  }
  return YoungDiagram(std::move(parts));
}

// ---------------------------------------------------------------- HalfInteger

HalfInteger HalfInteger::from_twice(std::int64_t t) {
  if (t % 2 == 0) throw DomainError("not a half-integer: " + std::to_string(t) + "/2");
  return HalfInteger{t};
}

HalfInteger HalfInteger::parse(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash != std::string_view::npos) {
    std::int64_t p = 0, q = 0;
    if (parse_int64(t.substr(0, slash), p) && parse_int64(t.substr(slash + 1), q) && q == 2) {
      return from_twice(p);
    }
    throw DomainError("not a half-integer: '" + std::string(text) + "'");
  }
  double v = 0.0;
  if (!parse_double(t, v) || std::abs(v) > 1e15) {
    throw DomainError("not a half-integer: '" + std::string(text) + "'");
  }
  const double tw = 2.0 * v;
  if (tw != std::round(tw)) throw DomainError("not a half-integer: '" + std::string(text) + "'");
  return from_twice(static_cast<std::int64_t>(tw));
}

std::string HalfInteger::to_string() const { return std::to_string(twice) + "/2"; }

// ---------------------------------------------------------------- enumeration

std::vector<YoungDiagram> enumerate_partitions(int n, int cap) {
  if (n < 0) throw DomainError("partition size must be nonnegative");
  if (n > cap) {
    throw ResourceError("partition size " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  }
  std::vector<YoungDiagram> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> a{n};
  while (true) {
    out.emplace_back(a);
    // rightmost part > 1
    int k = static_cast<int>(a.size()) - 1;
    int ones = 0;
    while (k >= 0 && a[static_cast<std::size_t>(k)] == 1) {
      ++ones;
      --k;
    }
    if (k < 0) break;
    const int v = --a[static_cast<std::size_t>(k)];
    int rem = ones + 1;
    a.resize(static_cast<std::size_t>(k) + 1);
    while (rem > 0) {
      const int piece = std::min(v, rem);
      a.push_back(piece);
      rem -= piece;
    }
  }
  return out;
}

// ---------------------------------------------------------------- contents & hooks

double theta_content(Box b, double theta) {
  check_theta(theta);
  if (b.row < 1 || b.col < 1) throw DomainError("box indices are 1-based");
  return static_cast<double>(b.col - 1) - theta * static_cast<double>(b.row - 1);
}

int theta_content_sign(Box b, const Theta& theta) {
  if (b.row < 1 || b.col < 1) throw DomainError("box indices are 1-based");
  // sign of q(j-1) - p(i-1)
  const std::int64_t v = theta.den() * (b.col - 1) - theta.num() * (b.row - 1);
  return (v > 0) - (v < 0);
}

HookProducts hook_products(const YoungDiagram& lambda, double theta) {
  check_theta(theta);
  const YoungDiagram lt = lambda.transpose();
  HookProducts hp;
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      const double arm = lambda.part(i) - j;
      const double leg = lt.part(j) - i;
      hp.h *= arm + theta * leg + 1.0;
      hp.h_prime *= arm + theta * leg + theta;
    }
  }
  return hp;
}

LogHookProducts log_hook_products(const YoungDiagram& lambda, double theta) {
  check_theta(theta);
  const YoungDiagram lt = lambda.transpose();
  LogHookProducts lp;
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      const double arm = lambda.part(i) - j;
      const double leg = lt.part(j) - i;
      lp.log_h += std::log(arm + theta * leg + 1.0);
      lp.log_h_prime += std::log(arm + theta * leg + theta);
    }
  }
  return lp;
}

std::complex<double> generalized_pochhammer(std::complex<double> z, const YoungDiagram& lambda,
                                            double theta) {
  check_theta(theta);
  std::complex<double> prod{1.0, 0.0};
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      const std::complex<double> f = z + static_cast<double>(j - 1) - theta * static_cast<double>(i - 1);
      if (std::abs(f) < 1e-300) return {0.0, 0.0};
      prod *= f;
    }
  }
  return prod;
}

LogPochhammer log_generalized_pochhammer(std::complex<double> z, const YoungDiagram& lambda,
                                         double theta) {
  check_theta(theta);
  LogPochhammer lp;
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      const std::complex<double> f = z + static_cast<double>(j - 1) - theta * static_cast<double>(i - 1);
      if (std::abs(f) < 1e-300) {
        lp.zero = true;
        lp.log = {0.0, 0.0};
        return lp;
      }
      lp.log += std::log(f);
    }
  }
  return lp;
}

// ---------------------------------------------------------------- coordinates

LatticeConfig frobenius_coordinates(const YoungDiagram& lambda, const Theta& theta) {
  LatticeConfig cfg;
  cfg.theta = theta;
  for (int i = 1; i <= lambda.length(); ++i) {
    const int a = positive_row_length(lambda.part(i), i, theta);
    if (a == 0) break;  // row lengths of λ⁺ are nonincreasing in i
    cfg.negatives.push_back(HalfInteger{-2 * static_cast<std::int64_t>(a) - 1});
  }
  const YoungDiagram lt = lambda.transpose();
  for (int j = 1; j <= lt.length(); ++j) {
    const int b = negative_column_length(lt.part(j), j, theta);
    if (b == 0) break;
    cfg.positives.push_back(HalfInteger{2 * static_cast<std::int64_t>(b) + 1});
  }
  // a_1 ≥ a_2 ≥ ..., so the negatives come out in increasing order of value
  return cfg;
}

}  // namespace zpfaff
