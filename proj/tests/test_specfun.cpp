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

#include <doctest.h>

#include <cmath>
#include <functional>

#include "zpfaff/errors.hpp"
#include "zpfaff/quadrature.hpp"
#include "zpfaff/specfun.hpp"

using namespace zpfaff;

namespace {

bool close(cplx a, cplx b, double rel) { return std::abs(a - b) <= rel * std::max(std::abs(b), 1e-300); }

// Richardson-extrapolated central difference.
double richardson(const std::function<double(double)>& f, double x, double h) {
  auto d = [&](double s) { return (f(x + s) - f(x - s)) / (2 * s); };
  return (4 * d(h / 2) - d(h)) / 3;
}

}  // namespace

TEST_SUITE("specfun") {
  TEST_CASE("log gamma and friends against reference values") {
    CHECK(close(log_gamma(0.5), cplx(0.57236494292470008707, 0), 1e-14));
    CHECK(close(log_gamma(cplx(3.7, 2.1)), cplx(0.78534695807382238876, 2.5830129251152622486), 1e-13));
    CHECK(close(log_gamma(cplx(20, -15)), cplx(34.037167215398750531, -45.829409160898124966), 1e-13));
    // principal branch of log Γ, not of log(Γ)
    CHECK(close(log_gamma(cplx(-2.5, 0.3)), cplx(-0.43208889261320192052, -9.0933454212897415073), 1e-12));
    CHECK(close(digamma(1.0), cplx(-0.57721566490153286061, 0), 1e-14));
    CHECK(close(digamma(cplx(0.3, 1.0)), cplx(-0.030890545733147842558, 1.7882858119251811291), 1e-12));
    CHECK(rgamma(0.0) == cplx(0.0, 0.0));
    CHECK(rgamma(-3.0) == cplx(0.0, 0.0));
    CHECK(close(rgamma(5.0), cplx(1.0 / 24, 0), 1e-14));
  }

  TEST_CASE("Kummer M") {
    CHECK(close(kummer_M(cplx(0.7, 0.2), 1.9, 3.5), cplx(5.8319268088735672007, 2.1951167293781032792), 1e-12));
    CHECK(close(kummer_M(1.0, 1.0, 2.0), cplx(std::exp(2.0), 0), 1e-14));
    CHECK_THROWS_AS(kummer_M(1.0, -2.0, 1.0), DomainError);
  }

  TEST_CASE("Whittaker W against reference values") {
    struct Ref {
      cplx k, m;
      double x, w;
    };
    const Ref refs[] = {
        {0.3, 0.8, 1.5, 0.71338784751792135025},
        {-2.1, cplx(0, 0.8), 0.7, 0.053708998185751833328},
        {1.2, 2.5, 10, 0.19018854297669141063},
        {-3.5, cplx(0, 1.25), 25.0, 2.6050483494567278686e-11},
        {0.5, 0.0, 0.01, 0.099501247919268232361},
        {2.0, 1.0, 3.0, 1.0588258733146134912},
        {-0.1, cplx(0, 0.8), 60.0, 6.1127943664956618336e-14},
        {-5.2, 3.3, 150.0, 1.1275232626355070633e-44},
        {1.0, 0.25, 0.002, -0.069237984832781075775},
        {0.3, 0.5 + 1e-8, 2.0, 0.491665212216817105855830871194},
        {-1.7, 1.0, 0.9, 0.157324372750580530989207460072},
    };
    for (const Ref& r : refs) {
      const WhittakerIndex idx{r.k, r.m};
      CAPTURE(r.x);
      CHECK(whittaker_W(idx, r.x) == doctest::Approx(r.w).epsilon(1e-11));
    }
  }

  TEST_CASE("closed form W_{m+1/2,m}") {
    for (double m : {0.0, 0.3, 1.0, 2.2, -0.7}) {
      for (double x : {1e-3, 0.05, 0.7, 2.0, 9.0, 31.0, 120.0, 200.0}) {
        const double want = std::pow(x, m + 0.5) * std::exp(-x / 2);
        CHECK(whittaker_W({m + 0.5, m}, x) == doctest::Approx(want).epsilon(1e-10));
      }
    }
  }

  TEST_CASE("W is even in m") {
    for (cplx m : {cplx(0.3), cplx(1.7), cplx(0, 0.8), cplx(0, 2.5)}) {
      for (double k : {-3.2, -0.4, 0.9}) {
        for (double x : {0.01, 0.6, 4.0, 20.0, 90.0}) {
          CHECK(close(whittaker_W_complex({k, m}, x), whittaker_W_complex({k, -m}, x), 1e-10));
        }
      }
    }
  }

  TEST_CASE("series and integral routes agree") {
    for (cplx m : {cplx(0.3), cplx(1.2), cplx(0, 0.8)}) {
      for (double k : {-2.1, -0.3, 0.4}) {
        for (double x : {0.5, 1.5, 4.0, 10.0}) {
          const cplx a = whittaker_W_complex({k, m}, x, WhittakerMethod::series);
          const cplx b = whittaker_W_complex({k, m}, x, WhittakerMethod::integral);
          CAPTURE(x);
          CHECK(close(a, b, 1e-8));
        }
      }
    }
  }

  TEST_CASE("asymptotic and integral routes agree at large x") {
    for (double x : {90.0, 140.0, 200.0}) {
      const cplx a = whittaker_W_complex({-0.6, cplx(0, 0.8)}, x, WhittakerMethod::asymptotic);
      const cplx b = whittaker_W_complex({-0.6, cplx(0, 0.8)}, x, WhittakerMethod::integral);
      CHECK(close(a, b, 1e-8));
    }
    CHECK_THROWS_AS(whittaker_W_complex({-4.0, 3.0}, 2.0, WhittakerMethod::asymptotic), NumericalError);
  }

  TEST_CASE("logarithmic case joins the generic one") {
    for (double x : {0.3, 1.3, 6.0}) {
      const double w0 = whittaker_W({0.3, 0.0}, x);
      CHECK(whittaker_W({0.3, 1e-4}, x) == doctest::Approx(w0).epsilon(1e-7));
      CHECK(whittaker_W({0.3, -1e-4}, x) == doctest::Approx(w0).epsilon(1e-7));
      const double w1 = whittaker_W({0.3, 1.0}, x);
      CHECK(whittaker_W({0.3, 1.0 + 1e-9}, x) == doctest::Approx(w1).epsilon(1e-7));
    }
    CHECK(whittaker_W({0.3, 1e-4}, 1.3) == doctest::Approx(0.552378673971050618512).epsilon(1e-11));
    CHECK(whittaker_W({0.3, 0.0}, 1.3) == doctest::Approx(0.552378670895048122713).epsilon(1e-11));
    CHECK_THROWS_AS(whittaker_W_complex({0.3, 0.5 + 1e-8}, 2.0, WhittakerMethod::series), NumericalError);
  }

  TEST_CASE("derivative against Richardson differences") {
    for (cplx m : {cplx(0.4), cplx(0, 1.1)}) {
      for (double k : {-1.5, 0.2, 1.3}) {
        for (double x : {0.2, 1.0, 5.0, 30.0}) {
          const WhittakerIndex idx{k, m};
          const double fd = richardson([&](double s) { return whittaker_W(idx, s); }, x, 1e-3 * x);
          CHECK(whittaker_W_deriv(idx, x) == doctest::Approx(fd).epsilon(1e-5));
        }
      }
    }
  }

  TEST_CASE("triples satisfy the contiguous recurrence") {
    const WhittakerIndex top{0.4, cplx(0, 0.9)};
    for (double x : {0.05, 0.8, 6.0, 15.0, 45.0, 180.0}) {
      const WhittakerTriple t = whittaker_W_triple(top, x);
      const cplx k = top.k - 1.0, m = top.m;
      // W_{k+1} = (x - 2k) W_k + (m² - (k - 1/2)²) W_{k-1}, scaled by the largest term
      const cplx lhs = t.w_k;
      const cplx rhs = (x - 2.0 * k) * t.w_km1 + (m * m - (k - 0.5) * (k - 0.5)) * t.w_km2;
      const double scale = std::abs(t.w_k) + std::abs((x - 2.0 * k) * t.w_km1);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * scale);
      CHECK(close(t.w_k, whittaker_W_complex(top, x), 1e-11));
    }
  }

  TEST_CASE("domain errors") {
    CHECK_THROWS_AS(whittaker_W({0.0, 0.5}, 0.0), DomainError);
    CHECK_THROWS_AS(whittaker_W({0.0, 0.5}, 250.0), DomainError);
    CHECK_THROWS_AS(whittaker_W({7.0, 0.5}, 1.0), DomainError);
    CHECK_THROWS_AS(whittaker_W({0.0, 6.5}, 1.0), DomainError);
    CHECK_THROWS_AS(whittaker_W({cplx(0.0, 1.0), 0.5}, 1.0), DomainError);
    CHECK(WhittakerIndex{0.3, cplx(0, 2)}.real_valued());
    CHECK_FALSE(WhittakerIndex{0.3, cplx(1, 2)}.real_valued());
  }
}

TEST_SUITE("quadrature") {
  TEST_CASE("Gauss-Legendre nodes integrate polynomials exactly") {
    const auto& gl = GaussLegendre16::get();
    for (int deg = 0; deg <= 31; ++deg) {
      double s = 0.0;
      for (int i = 0; i < 16; ++i) s += gl.w[static_cast<std::size_t>(i)] * std::pow(gl.x[static_cast<std::size_t>(i)], deg);
      const double want = (deg % 2 == 1) ? 0.0 : 2.0 / (deg + 1);
      CHECK(s == doctest::Approx(want).epsilon(1e-14));
    }
  }

  TEST_CASE("adaptive integration") {
    const auto r = integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    const auto c = integrate([](double x) { return std::exp(cplx(0, 3) * x); }, 0.0, 2.0);
    CHECK(close(c.value, (std::exp(cplx(0, 6)) - 1.0) / cplx(0, 3), 1e-12));
    QuadOptions tight;
    tight.max_panels = 3;
    const auto bad = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, tight);
    CHECK_FALSE(bad.converged);
  }
}
