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

#include "zpfaff/specfun.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "zpfaff/errors.hpp"
#include "zpfaff/quadrature.hpp"

namespace zpfaff {

namespace {

template <class T>
using C = std::complex<T>;

// Argument shift for the Stirling-type series.
constexpr int kShift = 12;

template <class T>
T bernoulli(int j) {
  // B_{2j} for j = 1..9
  static const T b[9] = {T(1) / T(6),          T(-1) / T(30), T(1) / T(42),       T(-1) / T(30),
                         T(5) / T(66),         T(-691) / T(2730), T(7) / T(6),   T(-3617) / T(510),
                         T(43867) / T(798)};
  return b[j - 1];
}

template <class T>
bool is_pole(C<T> w) {
  return w.imag() == 0 && w.real() <= 0 && w.real() == std::round(w.real());
}

bool near_nonpositive_integer(cplx w, double tol) {
  return std::abs(w.imag()) <= tol && w.real() < 0.5 && std::abs(w.real() - std::round(w.real())) <= tol;
}

template <class T>
std::string show(C<T> w) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", static_cast<double>(w.real()), static_cast<double>(w.imag()));
  return buf;
}

template <class T>
C<T> lgamma_t(C<T> w) {
  if (is_pole(w)) throw PoleError("log_gamma has a pole at " + show(w));
  C<T> shift_sum(0, 0);
  C<T> z = w;
  while (z.real() < kShift) {
    shift_sum += std::log(z);
    z += T(1);
  }
  const C<T> zinv = T(1) / z;
  const C<T> zinv2 = zinv * zinv;
  C<T> series(0, 0);
  C<T> pw = zinv;
  for (int j = 1; j <= 9; ++j) {
    series += bernoulli<T>(j) / (T(2 * j) * T(2 * j - 1)) * pw;
    pw *= zinv2;
  }
  const T half_log_2pi = T(0.918938533204672741780329736405617639861L);
  return (z - T(0.5)) * std::log(z) - z + half_log_2pi + series - shift_sum;
}

template <class T>
C<T> rgamma_t(C<T> w) {
  if (is_pole(w)) return C<T>(0, 0);
  return std::exp(-lgamma_t(w));
}

template <class T>
C<T> digamma_t(C<T> w) {
  if (is_pole(w)) throw PoleError("digamma has a pole at " + show(w));
  C<T> shift_sum(0, 0);
  C<T> z = w;
  while (z.real() < kShift) {
    shift_sum += T(1) / z;
    z += T(1);
  }
  const C<T> zinv2 = T(1) / (z * z);
  C<T> series(0, 0);
  C<T> pw = zinv2;
  for (int j = 1; j <= 9; ++j) {
    series += bernoulli<T>(j) / T(2 * j) * pw;
    pw *= zinv2;
  }
  return std::log(z) - T(0.5) / z - series - shift_sum;
}

template <class T>
C<T> kummer_t(C<T> a, C<T> b, T x, T* maxterm = nullptr) {
  if (is_pole(b)) throw DomainError("kummer_M undefined for b = " + show(b));
  C<T> sum(1, 0), term(1, 0);
  if (maxterm) *maxterm = 1;
  const T jmin = std::abs(a) + std::abs(x) + 2;
  const T eps = std::numeric_limits<T>::epsilon() * T(0.1);
  for (int j = 0; j < 100000; ++j) {
    term *= (a + T(j)) / (b + T(j)) * (x / T(j + 1));
    sum += term;
    if (maxterm) *maxterm = std::max(*maxterm, std::abs(term));
    if (term == C<T>(0, 0)) return sum;
    if (j > jmin && std::abs(term) < eps * std::abs(sum)) return sum;
  }
  throw NumericalError("kummer_M series did not converge");
}

}  // namespace

// ---------------------------------------------------------------- gamma family

cplx log_gamma(cplx w) {
  if (!(std::isfinite(w.real()) && std::isfinite(w.imag()))) throw DomainError("log_gamma of a non-finite argument");
  return lgamma_t<double>(w);
}

cplx rgamma(cplx w) { return rgamma_t<double>(w); }

cplx digamma(cplx w) { return digamma_t<double>(w); }

cplx kummer_M(cplx a, cplx b, double x) { return kummer_t<double>(a, b, x); }

// ---------------------------------------------------------------- domain

bool WhittakerIndex::real_valued() const {
  return k.imag() == 0.0 && (m.imag() == 0.0 || m.real() == 0.0);
}

void check_whittaker_domain(const WhittakerIndex& idx, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("Whittaker argument must be positive, got " + std::to_string(x));
  const double lim = WhittakerDomain::index_max;
  if (x < WhittakerDomain::x_min || x > WhittakerDomain::x_max) {
    throw DomainError("unvalidated domain: x = " + std::to_string(x) + " outside [1e-3, 200]");
  }
  if (std::abs(idx.k) > lim + 1e-12) throw DomainError("unvalidated domain: |k| = " + std::to_string(std::abs(idx.k)) + " > 6");
  if (std::abs(idx.m) > lim + 1e-12) throw DomainError("unvalidated domain: |m| = " + std::to_string(std::abs(idx.m)) + " > 6");
}

// ---------------------------------------------------------------- routes

namespace {

// Extended precision for the series route, whose terms cancel like e^x.
using Real = long double;
using CL = C<Real>;

// Distance from 2m to the nearest integer below which the connection
// formula is replaced by the logarithmic one.
constexpr double kIntegerSnap = 1e-5;

// U(a, n+1, x) for integer n ≥ 0, a not a nonpositive integer.
CL tricomi_U_log_case(CL a, int n, Real x, Real& scale) {
  const Real lx = std::log(x);
  CL first(0, 0);
  const CL rg = rgamma_t<Real>(a - Real(n));
  const Real eps = std::numeric_limits<Real>::epsilon() * Real(0.1);
  if (rg != CL(0, 0)) {
    // ψ(1+j) and ψ(n+1+j) by upward recurrence from ψ(1) = -γ
    const Real euler_gamma = 0.577215664901532860606512090082402431L;
    Real psi1 = -euler_gamma;
    Real psin = -euler_gamma;
    for (int j = 1; j <= n; ++j) psin += Real(1) / Real(j);
    CL psia = digamma_t<Real>(a);
    CL coef(1, 0);  // (a)_j x^j / ((n+1)_j j!)
    CL sum(0, 0);
    const Real jmin = std::abs(a) + x + 2;
    bool done = false;
    for (int j = 0; j < 100000; ++j) {
      const CL term = coef * (lx + psia - psi1 - psin);
      sum += term;
      scale = std::max(scale, std::abs(term) * std::abs(rg));
      if (j > jmin && std::abs(coef) * (std::abs(lx) + std::abs(psia) + std::abs(psi1) + std::abs(psin) + 1) <
                          eps * std::abs(sum)) {
        done = true;
        break;
      }
      coef *= (a + Real(j)) / (Real(n + 1 + j) * Real(j + 1)) * x;
      psia += Real(1) / (a + Real(j));
      psi1 += Real(1) / Real(j + 1);
      psin += Real(1) / Real(n + j + 1);
    }
    if (!done) throw NumericalError("logarithmic Tricomi series did not converge");
    Real nfact = 1;
    for (int j = 2; j <= n; ++j) nfact *= j;
    first = Real((n + 1) % 2 == 0 ? 1 : -1) / nfact * rg * sum;
  }
  CL second(0, 0);
  if (n > 0) {
    const CL rga = rgamma_t<Real>(a);
    for (int k = 1; k <= n; ++k) {
      Real kfact = 1;  // (k-1)!
      for (int j = 2; j < k; ++j) kfact *= j;
      Real nkfact = 1;  // (n-k)!
      for (int j = 2; j <= n - k; ++j) nkfact *= j;
      CL poch(1, 0);  // (1-a+k)_{n-k}
      for (int j = 0; j < n - k; ++j) poch *= Real(1) - a + Real(k + j);
      const CL t = kfact * poch / nkfact * std::pow(x, Real(-k));
      second += t;
      scale = std::max(scale, std::abs(t * rga));
    }
    second *= rga;
  }
  return first + second;
}

// Series route. `cond` receives an estimate of the relative rounding error,
// driven by the cancellation between terms of size up to e^{x/2}.
cplx whittaker_series(cplx k_in, cplx m_in, double x_in, double* cond = nullptr) {
  CL k(k_in.real(), k_in.imag()), m(m_in.real(), m_in.imag());
  const Real x = x_in;
  const Real eps = std::numeric_limits<Real>::epsilon();
  if (m.real() < 0 || (m.real() == 0 && m.imag() < 0)) m = -m;
  const CL two_m = Real(2) * m;
  const Real n_near = std::round(two_m.real());
  const double dist = static_cast<double>(std::abs(two_m - n_near));
  auto out = [](CL v) { return cplx(static_cast<double>(v.real()), static_cast<double>(v.imag())); };
  auto report = [&](CL v, Real scale) {
    if (cond) cond[0] = static_cast<double>(16 * eps * scale / std::max(std::abs(v), std::numeric_limits<Real>::min()));
    return out(v);
  };
  if (dist < kIntegerSnap) {
    const int n = static_cast<int>(n_near);
    if (n != 0 && dist > 1e-13) {
      throw NumericalError("series route unsuitable for 2m within 1e-5 of a nonzero integer");
    }
    // W is even in m, so snapping m ≈ 0 to 0 costs O(|m|²)
    m = CL(Real(n) / 2, 0);
    const CL a = Real(0.5) + m - k;
    const CL pref = std::exp(-x / 2 + (m + Real(0.5)) * std::log(x));
    const cplx ad(static_cast<double>(a.real()), static_cast<double>(a.imag()));
    if (near_nonpositive_integer(ad, 1e-14)) {
      const int big_n = static_cast<int>(-std::round(ad.real()));
      const CL b = Real(1) + Real(2) * m;
      CL poch(1, 0);
      for (int j = 0; j < big_n; ++j) poch *= b + Real(j);
      const Real sgn = big_n % 2 == 0 ? 1 : -1;
      Real mt = 0;
      const CL v = pref * sgn * poch * kummer_t<Real>(CL(-big_n, 0), b, x, &mt);
      return report(v, std::abs(pref * poch) * mt);
    }
    Real scale = 0;
    const CL v = pref * tricomi_U_log_case(a, n, x, scale);
    return report(v, std::abs(pref) * scale);
  }
  const Real lx = std::log(x);
  Real scale = 0;
  auto half = [&](CL mm) -> CL {
    const CL rg = rgamma_t<Real>(Real(0.5) - mm - k);
    if (rg == CL(0, 0)) return CL(0, 0);
    const CL lpref = lgamma_t<Real>(Real(-2) * mm) + (mm + Real(0.5)) * lx - x / 2;
    const CL pre = std::exp(lpref) * rg;
    Real mt = 0;
    const CL v = pre * kummer_t<Real>(Real(0.5) + mm - k, Real(1) + Real(2) * mm, x, &mt);
    scale = std::max(scale, std::abs(pre) * mt * (1 + std::abs(lpref)));
    return v;
  };
  const CL v = half(m) + half(-m);
  return report(v, scale);
}

// x^k e^{-x/2}/Γ(a) ∫_0^∞ e^{-u} u^{a-1} (1+u/x)^{m+k-1/2} du, Re a ≥ 1.
cplx whittaker_integral_direct(cplx k, cplx m, double x) {
  const cplx a = 0.5 + m - k;
  const cplx c = m + k - 0.5;
  auto f = [&](double u) -> cplx {
    if (u <= 0.0) return {0.0, 0.0};
    return std::exp(-u + (a - 1.0) * std::log(u) + c * std::log1p(u / x));
  };
  QuadOptions opt;
  opt.rel_tol = 1e-14;
  opt.abs_tol = 0.0;
  opt.max_panels = 400;
  cplx total{0.0, 0.0};
  double err = 0.0;
  // location of the bulk: the real exponent -u + (Re a - 1) log u + Re c log(1 + u/x)
  const double bulk = std::max(1.0, a.real() + std::max(0.0, c.real()));
  double lo = 0.0, hi = 1.0;
  for (int panel = 0; panel < 200; ++panel) {
    QuadOptions o = opt;
    o.abs_tol = 1e-17 * std::abs(total);
    const auto r = integrate(f, lo, hi, o);
    if (!r.converged) throw NumericalError("Whittaker integral failed to converge on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    total += r.value;
    err += r.error;
    if (hi > 2.0 * bulk + 40.0 && std::abs(r.value) <= 1e-17 * std::abs(total)) break;
    lo = hi;
    hi = hi < 4.0 ? hi + 1.0 : hi * 1.5;
  }
  (void)err;
  const cplx lpref = k * std::log(x) - 0.5 * x - log_gamma(a);
  return std::exp(lpref) * total;
}

// W at k_low, k_low+1, ..., k_low+count-1: two seeds W_{K-1}, W_K from the
// integral with Re a(K) ≥ 1.5, then the upward recurrence in k.
std::vector<cplx> whittaker_integral_ladder(cplx k_low, cplx m, double x, int count) {
  if (m.real() < 0.0 || (m.real() == 0.0 && m.imag() < 0.0)) m = -m;
  const double re_a = 0.5 + m.real() - k_low.real();
  const int drop = re_a < 1.5 ? static_cast<int>(std::ceil(1.5 - re_a)) : 0;
  cplx kk = k_low - static_cast<double>(drop);
  cplx w_prev = whittaker_integral_direct(kk - 1.0, m, x);
  cplx w_cur = whittaker_integral_direct(kk, m, x);
  std::vector<cplx> out;
  const cplx m2 = m * m;
  for (int i = 0;; ++i) {
    if (i >= drop) out.push_back(w_cur);
    if (static_cast<int>(out.size()) == count) break;
    // W_{k+1} = (x - 2k) W_k + (m² - (k - 1/2)²) W_{k-1}
    const cplx w_next = (x - 2.0 * kk) * w_cur + (m2 - (kk - 0.5) * (kk - 0.5)) * w_prev;
    w_prev = w_cur;
    w_cur = w_next;
    kk += 1.0;
  }
  return out;
}

bool whittaker_asymptotic(cplx k, cplx m, double x, cplx& result) {
  const cplx a = 0.5 + m - k, b = 0.5 - m - k;
  cplx sum{1.0, 0.0}, term{1.0, 0.0};
  double last = 1.0;
  for (int s = 0; s < 200; ++s) {
    term *= (a + static_cast<double>(s)) * (b + static_cast<double>(s)) / ((s + 1.0) * -x);
    const double mag = std::abs(term);
    if (mag == 0.0) break;
    if (mag > last && s > 0) return false;  // diverging before reaching the tolerance
    sum += term;
    last = mag;
    if (mag < 1e-16 * std::abs(sum)) break;
    if (s == 199) return false;
  }
  if (last > 1e-15 * std::abs(sum) && last != 0.0) return false;
  result = std::exp(k * std::log(x) - 0.5 * x) * sum;
  return true;
}

// The series route is tried up to this x and kept when its rounding
// estimate stays below kSeriesCond.
constexpr double kSeriesMaxX = 12.0;
constexpr double kSeriesCond = 1e-13;

bool try_series(cplx k, cplx m, double x, cplx& out) {
  if (x > kSeriesMaxX) return false;
  try {
    double cond = 1.0;
    out = whittaker_series(k, m, x, &cond);
    return cond <= kSeriesCond;
  } catch (const NumericalError&) {
    return false;
  }
}

}  // namespace

cplx whittaker_W_complex(const WhittakerIndex& idx, double x, WhittakerMethod method) {
  check_whittaker_domain(idx, x);
  switch (method) {
    case WhittakerMethod::series:
      return whittaker_series(idx.k, idx.m, x);
    case WhittakerMethod::integral:
      return whittaker_integral_ladder(idx.k, idx.m, x, 1)[0];
    case WhittakerMethod::asymptotic: {
      cplx r;
      if (!whittaker_asymptotic(idx.k, idx.m, x, r)) {
        throw NumericalError("asymptotic series for W does not reach 1e-15 at x = " + std::to_string(x));
      }
      return r;
    }
    case WhittakerMethod::automatic:
      break;
  }
  cplx r;
  if (try_series(idx.k, idx.m, x, r)) return r;
  if (whittaker_asymptotic(idx.k, idx.m, x, r)) return r;
  return whittaker_integral_ladder(idx.k, idx.m, x, 1)[0];
}

namespace {

double real_part_checked(cplx w) {
  if (std::abs(w.imag()) > 1e-10 * std::abs(w) + 1e-300) {
    throw NumericalError("imaginary residue " + std::to_string(w.imag()) + " in a real-valued Whittaker function");
  }
  return w.real();
}

}  // namespace

double whittaker_W(const WhittakerIndex& idx, double x) {
  if (!idx.real_valued()) throw DomainError("whittaker_W needs real k and real or imaginary m");
  return real_part_checked(whittaker_W_complex(idx, x));
}

WhittakerTriple whittaker_W_triple(const WhittakerIndex& top, double x) {
  const WhittakerIndex low{top.k - 2.0, top.m};
  check_whittaker_domain(top, x);
  check_whittaker_domain(low, x);
  WhittakerTriple t;
  if (try_series(low.k, top.m, x, t.w_km2) && try_series(top.k - 1.0, top.m, x, t.w_km1) &&
      try_series(top.k, top.m, x, t.w_k)) {
    return t;
  }
  if (whittaker_asymptotic(low.k, top.m, x, t.w_km2) && whittaker_asymptotic(top.k - 1.0, top.m, x, t.w_km1) &&
      whittaker_asymptotic(top.k, top.m, x, t.w_k)) {
    return t;
  }
  const auto v = whittaker_integral_ladder(low.k, top.m, x, 3);
  t.w_km2 = v[0];
  t.w_km1 = v[1];
  t.w_k = v[2];
  return t;
}

double whittaker_W_deriv(const WhittakerIndex& idx, double x) {
  if (!idx.real_valued()) throw DomainError("whittaker_W_deriv needs real k and real or imaginary m");
  const WhittakerIndex lower{idx.k - 1.0, idx.m};
  check_whittaker_domain(idx, x);
  check_whittaker_domain(lower, x);
  const cplx w = whittaker_W_complex(idx, x);
  const cplx wl = whittaker_W_complex(lower, x);
  const cplx d = ((idx.k - 0.5 * x) * w - (idx.m * idx.m - (idx.k - 0.5) * (idx.k - 0.5)) * wl) / x;
  return real_part_checked(d);
}

}  // namespace zpfaff
