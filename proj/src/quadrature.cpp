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

#include "zpfaff/quadrature.hpp"

namespace zpfaff {

const GaussLegendre16& GaussLegendre16::get() {
  static const GaussLegendre16 rule = [] {
    GaussLegendre16 r;
    constexpr int n = 16;
    const double pi = std::acos(-1.0);
    for (int i = 0; i < n / 2; ++i) {
      double x = std::cos(pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      const double w = 2.0 / ((1.0 - x * x) * dp * dp);
      r.x[static_cast<std::size_t>(i)] = -x;
      r.x[static_cast<std::size_t>(n - 1 - i)] = x;
      r.w[static_cast<std::size_t>(i)] = w;
      r.w[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return r;
  }();
  return rule;
}

}  // namespace zpfaff
