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

// Adaptive Gauss-Legendre quadrature on finite intervals.

#ifndef ZPFAFF_QUADRATURE_HPP
#define ZPFAFF_QUADRATURE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <type_traits>
#include <vector>

namespace zpfaff {

/// 16-point Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre16 {
  std::array<double, 16> x{};
  std::array<double, 16> w{};
  static const GaussLegendre16& get();
};

struct QuadOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_panels = 2000;
};

template <class T>
struct QuadResult {
  T value{};
  double error = 0.0;
  int panels = 0;
  bool converged = false;
};

namespace detail {

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <class F>
auto gauss16(F& f, double a, double b) {
  const GaussLegendre16& gl = GaussLegendre16::get();
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  using T = std::decay_t<decltype(f(c))>;
  T s{};
  for (int i = 0; i < 16; ++i) s += gl.w[static_cast<std::size_t>(i)] * f(c + h * gl.x[static_cast<std::size_t>(i)]);
  return T(s * h);
}

}  // namespace detail

/// Integrates f over [a, b]. Each panel compares the 16-point rule with the
/// sum over its two halves; the panel with the largest difference is split
/// until the summed difference meets the tolerance.
template <class F>
auto integrate(F&& f, double a, double b, const QuadOptions& opt = {}) {
  using T = std::decay_t<decltype(f(a))>;
  struct Panel {
    double a, b;
    T left, right;
    double err;
  };
  auto make = [&](double lo, double hi, T coarse) {
    const double mid = 0.5 * (lo + hi);
    const T l = detail::gauss16(f, lo, mid), r = detail::gauss16(f, mid, hi);
    return Panel{lo, hi, l, r, detail::magnitude(l + r - coarse)};
  };
  auto cmp = [](const Panel& p, const Panel& q) { return p.err < q.err; };
  std::vector<Panel> heap;
  heap.push_back(make(a, b, detail::gauss16(f, a, b)));
  QuadResult<T> res;
  while (true) {
    T total{};
    double err = 0.0;
    for (const Panel& p : heap) {
      total += p.left + p.right;
      err += p.err;
    }
    res.value = total;
    res.error = err;
    res.panels = static_cast<int>(heap.size());
    if (err <= std::max(opt.abs_tol, opt.rel_tol * detail::magnitude(total))) {
      res.converged = true;
      return res;
    }
    if (res.panels >= opt.max_panels) return res;
    std::pop_heap(heap.begin(), heap.end(), cmp);
    const Panel worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) return res;
    heap.push_back(make(worst.a, mid, worst.left));
    std::push_heap(heap.begin(), heap.end(), cmp);
    heap.push_back(make(mid, worst.b, worst.right));
    std::push_heap(heap.begin(), heap.end(), cmp);
  }
}

}  // namespace zpfaff

#endif  // ZPFAFF_QUADRATURE_HPP
