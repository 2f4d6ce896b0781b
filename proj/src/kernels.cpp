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

#include "zpfaff/kernels.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <vector>
#include <cmath>
#include <string>

#include "zpfaff/errors.hpp"
#include "zpfaff/quadrature.hpp"

namespace zpfaff {

namespace {

// w_{-1/2} (f) and w_{1/2} (g) with their first three x-derivatives.
struct Jet {
  cplx f[4];
  cplx g[4];
};

// Parameters shared by w_{±1/2}(·; z, z').
struct Family {
  cplx k0;      // index of W in w_{-1/2}
  cplx m;
  cplx pf, pg;  // (Γ(z+1)Γ(z'+1))^{-1/2}, (Γ(z)Γ(z'))^{-1/2}
  cplx c;       // √(z z')
  bool vanishes() const { return pf == cplx(0.0, 0.0) && pg == cplx(0.0, 0.0); }
};

cplx inv_sqrt_gamma_pair(cplx u, cplx v) {
  const cplx r = rgamma(u) * rgamma(v);
  if (r == cplx(0.0, 0.0)) return r;
  return 1.0 / std::sqrt(1.0 / r);
}

Family family(cplx z, cplx zp) {
  Family fam;
  fam.k0 = 0.5 * (z + zp) + 0.5;
  fam.m = 0.5 * (z - zp);
  fam.pf = inv_sqrt_gamma_pair(z + 1.0, zp + 1.0);
  fam.pg = inv_sqrt_gamma_pair(z, zp);
  fam.c = std::sqrt(z * zp);
  return fam;
}

// u = x^{-1/2} W_{k,m} and derivatives, from W_{k,m}, W_{k-1,m}.
void u_jet(cplx k, cplx m, double x, cplx w, cplx wl, cplx out[4]) {
  const cplx m2 = m * m;
  const double sx = std::sqrt(x);
  const cplx wp = ((k - 0.5 * x) * w - (m2 - (k - 0.5) * (k - 0.5)) * wl) / x;
  const cplx u = w / sx;
  const cplx u1 = wp / sx - 0.5 * w / (x * sx);
  const cplx r = 0.25 - k / x + m2 / (x * x);
  const cplx u2 = r * u - u1 / x;
  const cplx rp = k / (x * x) - 2.0 * m2 / (x * x * x);
  const cplx u3 = rp * u + r * u1 - u2 / x + u1 / (x * x);
  out[0] = u;
  out[1] = u1;
  out[2] = u2;
  out[3] = u3;
}

Jet jet_at(const Family& fam, double x) {
  Jet j{};
  if (fam.vanishes()) return j;
  const WhittakerTriple t = whittaker_W_triple({fam.k0, fam.m}, x);
  u_jet(fam.k0, fam.m, x, t.w_k, t.w_km1, j.f);
  u_jet(fam.k0 - 1.0, fam.m, x, t.w_km1, t.w_km2, j.g);
  for (int i = 0; i < 4; ++i) {
    j.f[i] *= fam.pf;
    j.g[i] *= fam.pg;
  }
  return j;
}

// f and g only.
std::pair<cplx, cplx> values_at(const Family& fam, double x) {
  if (fam.vanishes()) return {cplx(0.0, 0.0), cplx(0.0, 0.0)};
  const WhittakerTriple t = whittaker_W_triple({fam.k0, fam.m}, x);
  const double sx = std::sqrt(x);
  return {fam.pf * t.w_k / sx, fam.pg * t.w_km1 / sx};
}

// Piecewise Chebyshev tables of φ_j(s) = W_{k0-j}(s) e^{s/2} s^{-(k0-j)},
// j = 0, 1, in t = log s, for the real family of a fixed z. The quadrature
// integrands read f and g from here; point values on the diagonal use the
// direct route.
class FamilyTable {
 public:
  static constexpr int kNodes = 20;

  explicit FamilyTable(const Family& fam) : fam_(fam), k0_(fam.k0.real()) {
    const double t_lo = std::log(WhittakerDomain::x_min), t_hi = std::log(WhittakerDomain::x_max);
    const int initial = 24;
    for (int i = 0; i < initial; ++i) {
      build(t_lo + (t_hi - t_lo) * i / initial, t_lo + (t_hi - t_lo) * (i + 1) / initial, 0);
    }
    for (const Panel& pn : panels_) bounds_.push_back(pn.b);
  }

  // (f(s), g(s)) for s in [1e-3, 200].
  std::pair<double, double> eval(double s) const {
    const double t = std::log(s);
    auto it = std::lower_bound(bounds_.begin(), bounds_.end(), t);
    if (it == bounds_.end()) --it;
    const Panel& pn = panels_[static_cast<std::size_t>(it - bounds_.begin())];
    double phi0 = 0.0, phi1 = 0.0;
    interpolate(pn, t, phi0, phi1);
    const double sq = std::sqrt(s);
    const double e0 = std::exp(-0.5 * s + k0_ * t);
    const double e1 = e0 / s;
    return {fam_.pf.real() * phi0 * e0 / sq, fam_.pg.real() * phi1 * e1 / sq};
  }

 private:
  struct Panel {
    double a, b;
    std::array<double, kNodes> v0, v1;
  };

  static double node(int j) { return std::cos(M_PI * j / (kNodes - 1)); }

  void sample(double t, double& phi0, double& phi1) const {
    const double s = std::clamp(std::exp(t), WhittakerDomain::x_min, WhittakerDomain::x_max);
    const WhittakerTriple w = whittaker_W_triple({fam_.k0, fam_.m}, s);
    const double scale = std::exp(0.5 * s - k0_ * t);
    phi0 = real_w(w.w_k) * scale;
    phi1 = real_w(w.w_km1) * scale * s;
  }

  static double real_w(cplx w) {
    if (std::abs(w.imag()) > 1e-10 * std::abs(w) + 1e-300) {
      throw NumericalError("imaginary residue in a real Whittaker function");
    }
    return w.real();
  }

  static void interpolate(const Panel& pn, double t, double& out0, double& out1) {
    const double u = (2.0 * t - pn.a - pn.b) / (pn.b - pn.a);
    double num0 = 0.0, num1 = 0.0, den = 0.0;
    for (int j = 0; j < kNodes; ++j) {
      const double d = u - node(j);
      if (d == 0.0) {
        out0 = pn.v0[static_cast<std::size_t>(j)];
        out1 = pn.v1[static_cast<std::size_t>(j)];
        return;
      }
      double w = (j % 2 == 0) ? 1.0 : -1.0;
      if (j == 0 || j == kNodes - 1) w *= 0.5;
      const double c = w / d;
      num0 += c * pn.v0[static_cast<std::size_t>(j)];
      num1 += c * pn.v1[static_cast<std::size_t>(j)];
      den += c;
    }
    out0 = num0 / den;
    out1 = num1 / den;
  }

  void build(double a, double b, int depth) {
    Panel pn{a, b, {}, {}};
    for (int j = 0; j < kNodes; ++j) {
      const double t = 0.5 * (a + b) + 0.5 * (b - a) * node(j);
      sample(t, pn.v0[static_cast<std::size_t>(j)], pn.v1[static_cast<std::size_t>(j)]);
    }
    double scale = 0.0;
    for (int j = 0; j < kNodes; ++j) {
      scale = std::max({scale, std::abs(pn.v0[static_cast<std::size_t>(j)]), std::abs(pn.v1[static_cast<std::size_t>(j)])});
    }
    double err = 0.0;
    for (double frac : {0.13, 0.41, 0.77}) {
      const double t = a + frac * (b - a);
      double d0 = 0.0, d1 = 0.0, i0 = 0.0, i1 = 0.0;
      sample(t, d0, d1);
      interpolate(pn, t, i0, i1);
      err = std::max({err, std::abs(d0 - i0), std::abs(d1 - i1)});
    }
    if (err > 1e-13 * std::max(scale, 1e-300) && depth < 12) {
      const double mid = 0.5 * (a + b);
      build(a, mid, depth + 1);
      build(mid, b, depth + 1);
      return;
    }
    if (err > 1e-11 * std::max(scale, 1e-300)) {
      throw NumericalError("Whittaker interpolation table did not reach its tolerance");
    }
    panels_.push_back(pn);
  }

  Family fam_;
  double k0_;
  std::vector<Panel> panels_;
  std::vector<double> bounds_;
};

// Tables are shared across calls, keyed by z1.
std::shared_ptr<const FamilyTable> table_for(const Family& fam, cplx z1) {
  static std::mutex mu;
  static std::vector<std::pair<cplx, std::shared_ptr<const FamilyTable>>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    for (const auto& [key, tab] : cache) {
      if (key == z1) return tab;
    }
  }
  auto tab = std::make_shared<const FamilyTable>(fam);
  std::lock_guard<std::mutex> lock(mu);
  if (cache.size() >= 16) cache.erase(cache.begin());
  cache.emplace_back(z1, tab);
  return tab;
}

double real_checked(cplx v, const char* what) {
  if (std::abs(v.imag()) > 1e-10 * std::abs(v) + 1e-300) {
    throw NumericalError(std::string(what) + " has imaginary residue " + std::to_string(v.imag()));
  }
  return v.real();
}

// Width below which K(s,y) and ∂_y K(s,y) switch to their Taylor forms
// around s = y inside the integrals.
double near_width(double y) { return 1e-4 * std::max(1.0, y); }

// K(s, y) from the value pair at s and the jet at y.
double kernel_value(const Family& fam, double s, const std::pair<cplx, cplx>& vs, double y, const Jet& jy) {
  const cplx* f = jy.f;
  const cplx* g = jy.g;
  const double d = s - y;
  cplx k;
  if (std::abs(d) < near_width(y)) {
    k = fam.c * ((f[1] * g[0] - g[1] * f[0]) + 0.5 * d * (f[2] * g[0] - g[2] * f[0]));
  } else {
    k = fam.c * (vs.first * g[0] - vs.second * f[0]) / d;
  }
  return k.real();
}

// ∂_y K(s, y).
double kernel_dy(const Family& fam, double s, const std::pair<cplx, cplx>& vs, double y, const Jet& jy) {
  const cplx* f = jy.f;
  const cplx* g = jy.g;
  const double d = s - y;
  cplx v;
  if (std::abs(d) < near_width(y)) {
    v = fam.c * (0.5 * (f[2] * g[0] - g[2] * f[0]) +
                 d * (0.5 * (f[2] * g[1] - g[2] * f[1]) + (f[3] * g[0] - g[3] * f[0]) / 6.0));
  } else {
    const cplx n = vs.first * g[0] - vs.second * f[0];
    v = fam.c * ((vs.first * g[1] - vs.second * f[1]) / d + n / (d * d));
  }
  return v.real();
}

// ∫_lower^∞ h(s) ds. Panels start at `lower`, with a forced boundary at
// `split` when it lies above; the first panel uses s = lower + u². The tail
// beyond the last panel is bounded by the envelope e^{-s/2} s^p fitted to h.
template <class H>
Estimate semi_infinite(H&& h, double lower, double split, double p, double tol) {
  constexpr double kUpper = WhittakerDomain::x_max;
  Estimate est;
  QuadOptions opt;
  opt.abs_tol = 0.05 * tol;
  opt.rel_tol = 1e-13;
  opt.max_panels = 500;
  auto env = [p](double s) { return std::exp(-0.5 * s + p * std::log(s)); };
  auto add = [&](double lo, double hi, bool substitute) {
    QuadResult<double> r;
    if (substitute) {
      auto hu = [&](double u) { return 2.0 * u * h(lo + u * u); };
      r = integrate(hu, 0.0, std::sqrt(hi - lo), opt);
    } else {
      r = integrate(h, lo, hi, opt);
    }
    if (!r.converged) {
      throw NumericalError("quadrature did not converge on [" + std::to_string(lo) + ", " + std::to_string(hi) +
                           "], error estimate " + std::to_string(r.error) + " after " + std::to_string(r.panels) +
                           " panels");
    }
    est.value += r.value;
    est.error += r.error;
  };
  if (lower >= kUpper) {
    est.error = 4.0 * std::abs(h(kUpper)) + 1e-300;
    return est;
  }
  double lo = lower;
  double hi = (split > lower + 1e-12 && split < kUpper) ? split : std::min(lower + 1.0, kUpper);
  add(lo, hi, true);
  while (true) {
    // tail estimate from the envelope fitted at hi and slightly below
    if (hi >= 20.0 && hi > 4.0 * std::max(p, 0.0) + 8.0) {
      const double a1 = std::abs(h(hi)) / env(hi);
      const double a2 = std::abs(h(0.95 * hi)) / env(0.95 * hi);
      const double amp = std::max(a1, a2);
      const double tail = 4.0 * amp * 2.0 * env(hi) / (1.0 - 2.0 * std::max(p, 0.0) / hi);
      if (tail <= 0.01 * tol || hi >= kUpper) {
        est.error += tail;
        return est;
      }
    } else if (hi >= kUpper) {
      est.error += 4.0 * std::abs(h(kUpper)) * 2.0;
      return est;
    }
    lo = hi;
    hi = std::min(lo + std::max(1.0, 0.25 * lo), kUpper);
    add(lo, hi, false);
  }
}

struct Pieces {
  double sigma = -1.0, kappa = 0.0;
  Estimate J, Jy, F, G;
  double fx = 0.0, gy = 0.0;
  double kxy = 0.0, dxy = 0.0;
};

struct Want {
  bool jy = false;
  bool local = false;
};

Pieces compute_pieces(double x, double y, const KernelParams& p, Want want) {
  p.validate();
  if (!(x >= WhittakerDomain::x_min && y >= WhittakerDomain::x_min && x <= WhittakerDomain::x_max &&
        y <= WhittakerDomain::x_max)) {
    throw DomainError("unvalidated domain: kernel arguments must lie in [1e-3, 200]");
  }
  const Family fam = family(p.z1(), p.z2());
  Pieces pc;
  const double absz = std::abs(p.z);
  if (p.formula == SFormula::corrected) {
    pc.sigma = -1.0;
    pc.kappa = 0.5 * absz;
  } else {
    pc.sigma = 1.0;
    pc.kappa = 0.25 * absz;
  }
  if (fam.vanishes()) return pc;
  const Jet jy = jet_at(fam, y);
  const double pexp = fam.k0.real();
  const auto tab = table_for(fam, p.z1());
  auto vals = [&](double s) {
    const auto [fv, gv] = tab->eval(s);
    return std::pair<cplx, cplx>(fv, gv);
  };
  auto kint = [&](double s) {
    const auto vs = vals(s);
    return kernel_value(fam, s, vs, y, jy) / std::sqrt(s);
  };
  pc.J = semi_infinite(kint, x, y, pexp, p.quad_tol);
  if (want.jy) {
    auto dint = [&](double s) {
      const auto vs = vals(s);
      return kernel_dy(fam, s, vs, y, jy) / std::sqrt(s);
    };
    pc.Jy = semi_infinite(dint, x, y, pexp, p.quad_tol);
  }
  auto fint = [&](double s) { return tab->eval(s).first / std::sqrt(s); };
  auto gint = [&](double s) { return tab->eval(s).second / std::sqrt(s); };
  pc.F = semi_infinite(fint, x, x, pexp, p.quad_tol);
  pc.G = semi_infinite(gint, y, y, pexp, p.quad_tol);
  pc.gy = real_checked(jy.g[0], "w_{1/2}");
  if (want.local) {
    const auto vx = values_at(fam, x);
    pc.fx = real_checked(vx.first, "w_{-1/2}");
    pc.kxy = kernel_value(fam, x, vx, y, jy);
    pc.dxy = kernel_dy(fam, x, vx, y, jy);
  }
  return pc;
}

Estimate s_from(const Pieces& pc, double y) {
  const double sy = std::sqrt(y);
  Estimate e;
  e.value = pc.sigma * (-0.5 * sy * pc.J.value + pc.kappa * pc.F.value * pc.G.value);
  e.error = 0.5 * sy * pc.J.error + pc.kappa * (std::abs(pc.F.value) * pc.G.error + std::abs(pc.G.value) * pc.F.error);
  return e;
}

SPartials partials_from(const Pieces& pc, double x, double y) {
  const double sx = std::sqrt(x), sy = std::sqrt(y);
  SPartials d;
  d.s_x = pc.sigma * (0.5 * sy * pc.kxy / sx - pc.kappa * pc.fx * pc.G.value / sx);
  d.s_y = pc.sigma * (-pc.J.value / (4.0 * sy) - 0.5 * sy * pc.Jy.value - pc.kappa * pc.F.value * pc.gy / sy);
  d.s_xy = pc.sigma * (pc.kxy / (4.0 * sx * sy) + 0.5 * sy * pc.dxy / sx + pc.kappa * pc.fx * pc.gy / (sx * sy));
  return d;
}

}  // namespace

void KernelParams::validate() const {
  if (!(std::isfinite(z.real()) && std::isfinite(z.imag()))) throw ParameterError("z must be finite");
  if (z == cplx(0.0, 0.0)) throw ParameterError("z must be nonzero");
  if (z.real() < 0.0 || z.real() > 2.25 || std::abs(z.imag()) > 3.0) {
    throw DomainError("unvalidated domain: kernels are validated for 0 <= Re z <= 2.25, |Im z| <= 3");
  }
  if (!(quad_tol > 0.0)) throw ParameterError("quadrature tolerance must be positive");
}

cplx w_a_generic(double a, double x, cplx z, cplx zp) {
  if (std::abs(2.0 * a - std::round(2.0 * a)) > 1e-12 || static_cast<long long>(std::round(2.0 * a)) % 2 == 0) {
    throw DomainError("w_a needs a in Z + 1/2, got " + std::to_string(a));
  }
  if (!(x > 0.0)) throw DomainError("w_a needs x > 0");
  const cplx pre = inv_sqrt_gamma_pair(z - a + 0.5, zp - a + 0.5);
  if (pre == cplx(0.0, 0.0)) return pre;
  const WhittakerIndex idx{0.5 * (z + zp) - a, 0.5 * (z - zp)};
  return pre * whittaker_W_complex(idx, x) / std::sqrt(x);
}

double w_a(double a, double x, const KernelParams& p) {
  p.validate();
  return real_checked(w_a_generic(a, x, p.z1(), p.z2()), "w_a");
}

cplx scalar_whittaker_kernel_generic(double x, double y, cplx z, cplx zp) {
  if (!(x > 0.0 && y > 0.0)) throw DomainError("kernel arguments must be positive");
  const Family fam = family(z, zp);
  if (fam.vanishes()) return {0.0, 0.0};
  const double d = y - x;
  if (std::abs(d) < 1e-6 * std::max(1.0, x)) {
    const Jet j = jet_at(fam, x);
    return fam.c * ((j.f[1] * j.g[0] - j.g[1] * j.f[0]) + 0.5 * d * (j.f[2] * j.g[0] - j.g[2] * j.f[0]));
  }
  const auto vx = values_at(fam, x);
  const auto vy = values_at(fam, y);
  return fam.c * (vx.first * vy.second - vx.second * vy.first) / (x - y);
}

double scalar_whittaker_kernel(double x, double y, const KernelParams& p) {
  p.validate();
  return real_checked(scalar_whittaker_kernel_generic(x, y, p.z1(), p.z2()), "K^W");
}

Estimate S_estimate(double x, double y, const KernelParams& p) {
  return s_from(compute_pieces(x, y, p, {}), y);
}

double S(double x, double y, const KernelParams& p) { return S_estimate(x, y, p).value; }

SPartials S_partials(double x, double y, const KernelParams& p) {
  return partials_from(compute_pieces(x, y, p, {true, true}), x, y);
}

MatrixKernelValue matrix_kernel(double x, double y, const KernelParams& p) {
  const Pieces pc = compute_pieces(x, y, p, {true, true});
  const Estimate s = s_from(pc, y);
  const SPartials d = partials_from(pc, x, y);
  MatrixKernelValue v;
  v.m[0][0] = s.value;
  v.m[0][1] = d.s_y;
  v.m[1][0] = d.s_x;
  v.m[1][1] = d.s_xy;
  const double sy = std::sqrt(y);
  v.error = s.error + pc.J.error / (4.0 * sy) + 0.5 * sy * pc.Jy.error + pc.kappa * std::abs(pc.gy) * pc.F.error / sy;
  return v;
}

}  // namespace zpfaff
