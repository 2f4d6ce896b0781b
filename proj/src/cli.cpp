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

#include "zpfaff/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "zpfaff/correlations.hpp"
#include "zpfaff/errors.hpp"
#include "zpfaff/gelfand.hpp"
#include "zpfaff/kernels.hpp"
#include "zpfaff/measures.hpp"
#include "zpfaff/pairings.hpp"
#include "zpfaff/partitions.hpp"
#include "zpfaff/specfun.hpp"

namespace zpfaff::cli {

using json = nlohmann::ordered_json;

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text) {
  const std::string t = trim(text);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || !std::isfinite(v)) {
    throw ParameterError("not a number: '" + text + "'");
  }
  return v;
}

int parse_int(const std::string& text) {
  const std::string t = trim(text);
  char* end = nullptr;
  const long v = std::strtol(t.c_str(), &end, 10);
  if (t.empty() || end != t.c_str() + t.size() || v < -1000000 || v > 1000000) {
    throw ParameterError("not an integer: '" + text + "'");
  }
  return static_cast<int>(v);
}

std::vector<HalfInteger> parse_half_list(std::string_view text) {
  std::vector<HalfInteger> out;
  for (const auto& s : split(text, ',')) out.push_back(HalfInteger::parse(trim(s)));
  return out;
}

int workers_from_env() {
  const char* v = std::getenv("ZPFAFF_WORKERS");
  if (v == nullptr || *v == '\0') return 0;
  const int w = parse_int(v);
  if (w < 1) throw ParameterError("ZPFAFF_WORKERS must be a positive integer");
  return w;
}

// A result table; rendered as CSV or as JSON rows.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
  json meta = json::object();

  void add(std::vector<json> row) { rows.push_back(std::move(row)); }
};

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
  if (v.is_number_float()) return format_double(v.get<double>());
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q.push_back('"');
      q.push_back(c);
    }
    q.push_back('"');
    return q;
  }
  return s;
}

std::string render_csv(const Table& t) {
  std::string s;
  for (std::size_t i = 0; i < t.columns.size(); ++i) s += (i ? "," : "") + t.columns[i];
  s += "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + csv_cell(row[i]);
    s += "\n";
  }
  return s;
}

std::string render_json(const std::string& command, const Table& t) {
  json doc = json::object();
  doc["command"] = command;
  for (const auto& [k, v] : t.meta.items()) doc[k] = v;
  json rows = json::array();
  for (const auto& row : t.rows) {
    json o = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const json& v = row[i];
      o[t.columns[i]] = (v.is_number_float() && !std::isfinite(v.get<double>())) ? json(nullptr) : v;
    }
    rows.push_back(std::move(o));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

json cplx_json(cplx z) { return json::array({z.real(), z.imag()}); }

std::string join_halves(const std::vector<HalfInteger>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + xs[i].to_string();
  return s;
}

std::string join_doubles(const std::vector<double>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + format_double(xs[i]);
  return s;
}

// Per-invocation state shared by the subcommand handlers.
struct Ctx {
  std::string format;
  std::string out_path;
  std::string command;
  std::string text;  // rendered output
  bool inconclusive = false;
};

void emit(Ctx& c, const Table& t, const std::string& default_format = "csv") {
  const std::string f = c.format.empty() ? default_format : c.format;
  c.text = (f == "json") ? render_json(c.command, t) : render_csv(t);
}

void add_output_options(CLI::App* sub, Ctx& c) {
  sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", c.out_path, "write to this file instead of stdout");
}

ZParams zparams(const std::string& z, const std::string& theta, double xi = 0.0) {
  ZParams p{parse_complex(z), Theta::parse(theta), xi};
  p.validate();
  return p;
}

std::vector<YoungDiagram> parse_diagram_list(const std::string& text) {
  std::vector<YoungDiagram> out;
  for (const auto& s : split(text, ';')) out.push_back(YoungDiagram::parse(trim(s)));
  return out;
}

WhittakerMethod parse_method(const std::string& m) {
  if (m == "auto") return WhittakerMethod::automatic;
  if (m == "series") return WhittakerMethod::series;
  if (m == "integral") return WhittakerMethod::integral;
  if (m == "asymptotic") return WhittakerMethod::asymptotic;
  throw ParameterError("unknown method '" + m + "'");
}

KernelParams kernel_params(const std::string& z, bool printed) {
  KernelParams p;
  p.z = parse_complex(z);
  p.formula = printed ? SFormula::as_printed : SFormula::corrected;
  p.validate();
  return p;
}

json limit_report_json(const LimitReport& r) {
  json doc = json::object();
  doc["command"] = "verify-limit";
  doc["u"] = r.u;
  doc["z"] = cplx_json(r.z);
  doc["theta"] = "1/2";
  doc["n_max"] = r.n_max;
  doc["continuum_value"] = r.continuum_value;
  doc["continuum_error"] = r.continuum_error;
  json entries = json::array();
  for (const auto& e : r.entries) {
    json o = json::object();
    o["xi"] = e.xi;
    json pts = json::array();
    for (const auto& h : e.lattice_points) pts.push_back(h.to_string());
    o["lattice_points"] = pts;
    o["lattice_value"] = e.lattice_value;
    o["truncation_bound"] = e.truncation_bound;
    o["deviation"] = e.deviation;
    o["relative_deviation"] = e.relative_deviation ? json(*e.relative_deviation) : json(nullptr);
    o["inconclusive"] = e.inconclusive;
    o["terms_summed"] = e.terms_summed;
    entries.push_back(std::move(o));
  }
  doc["entries"] = std::move(entries);
  doc["deviations_strictly_decreasing"] = r.deviations_strictly_decreasing();
  doc["inconclusive"] = r.any_inconclusive();
  return doc;
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return {parse_double(parts[0]), 0.0};
  if (parts.size() == 2) return {parse_double(parts[0]), parse_double(parts[1])};
  throw ParameterError("complex numbers are written re,im: '" + std::string(text) + "'");
}

std::vector<double> parse_grid(std::string_view text) {
  const auto colon = split(text, ':');
  if (colon.size() == 3) {
    const double lo = parse_double(colon[0]), hi = parse_double(colon[1]);
    const int n = parse_int(colon[2]);
    if (n < 1 || n > 100000) throw ParameterError("grid count must be in [1, 100000]");
    std::vector<double> g;
    for (int i = 0; i < n; ++i) g.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
    return g;
  }
  if (colon.size() != 1) throw ParameterError("grid is 'a,b,c' or 'lo:hi:count'");
  std::vector<double> g;
  for (const auto& s : split(text, ',')) g.push_back(parse_double(s));
  return g;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16g", v);
  return buf;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"zpfaff: z-measures, Whittaker kernels and Pfaffian correlation functions"};
  app.require_subcommand(1);
  app.footer("Exit codes: 0 ok, 2 parameter/domain/resource error, 3 numerical or inconclusive.\n"
             "Worker threads: ZPFAFF_WORKERS (default: available parallelism).");
  Ctx ctx;
  std::function<void()> action;

  // Option storage.
  std::string z, theta = "1/2", lambda_text, x_text, y_text, k_text = "0", m_text = "0", method = "auto";
  std::string g_text, mu_text, cls_text, alpha_text, beta_text, rho_text, xi_text, u_text;
  std::string matching_text, points_text;
  int n = 0, nmax = 0;
  double xi = 0.0, t = 1.0, a = 0.5;
  bool printed = false;

  // partitions
  auto* c_part = app.add_subcommand("partitions", "partitions of n with their (A|B) coordinates");
  c_part->add_option("--n", n, "size")->required();
  c_part->add_option("--theta", theta, "Jack parameter p/q or decimal (default 1/2)");
  c_part->footer("CSV columns: lambda,size,length,negatives,positives");
  add_output_options(c_part, ctx);
  c_part->callback([&] {
    action = [&] {
      const Theta th = Theta::parse(theta);
      Table tb;
      tb.columns = {"lambda", "size", "length", "negatives", "positives"};
      tb.meta["theta"] = th.to_string();
      for (const auto& lam : enumerate_partitions(n)) {
        const LatticeConfig lc = frobenius_coordinates(lam, th);
        tb.add({lam.to_string(), lam.size(), lam.length(), join_halves(lc.negatives), join_halves(lc.positives)});
      }
      emit(ctx, tb);
    };
  });

  // zmeasure
  auto* c_zm = app.add_subcommand("zmeasure", "z-measure M^(n) on the partitions of n");
  c_zm->add_option("--z", z, "z as re,im")->required();
  c_zm->add_option("--theta", theta, "Jack parameter (default 1/2)");
  c_zm->add_option("--n", n, "size")->required();
  c_zm->footer("CSV columns: lambda,probability");
  add_output_options(c_zm, ctx);
  c_zm->callback([&] {
    action = [&] {
      const ZParams p = zparams(z, theta);
      Table tb;
      tb.columns = {"lambda", "probability"};
      tb.meta["z"] = cplx_json(p.z);
      tb.meta["theta"] = p.theta.to_string();
      tb.meta["n"] = n;
      for (const auto& lam : enumerate_partitions(n)) tb.add({lam.to_string(), z_measure(lam, p)});
      emit(ctx, tb);
    };
  });

  // mixed
  auto* c_mix = app.add_subcommand("mixed", "mixed z-measure over all sizes");
  c_mix->add_option("--z", z, "z as re,im")->required();
  c_mix->add_option("--theta", theta, "Jack parameter (default 1/2)");
  c_mix->add_option("--xi", xi, "mixing parameter in [0,1)")->required();
  c_mix->add_option("--nmax", nmax, "list every diagram of size <= nmax");
  c_mix->add_option("--lambda", lambda_text, "diagrams '(2,1);(3)' instead of --nmax");
  c_mix->footer("CSV columns: lambda,size,mass,tail_bound (tail_bound: mass of sizes > nmax)");
  add_output_options(c_mix, ctx);
  c_mix->callback([&] {
    action = [&] {
      ZParams p = zparams(z, theta, xi);
      p.validate_mixed();
      std::vector<YoungDiagram> diagrams;
      if (!lambda_text.empty()) {
        diagrams = parse_diagram_list(lambda_text);
      } else {
        if (nmax < 0) throw ParameterError("nmax must be >= 0");
        for (int k = 0; k <= nmax; ++k) {
          for (auto& lam : enumerate_partitions(k)) diagrams.push_back(std::move(lam));
        }
      }
      int top = 0;
      for (const auto& d : diagrams) top = std::max(top, d.size());
      const double tail = negative_binomial_tail(lambda_text.empty() ? nmax : top, p);
      Table tb;
      tb.columns = {"lambda", "size", "mass", "tail_bound"};
      tb.meta["z"] = cplx_json(p.z);
      tb.meta["theta"] = p.theta.to_string();
      tb.meta["xi"] = p.xi;
      for (const auto& d : diagrams) tb.add({d.to_string(), d.size(), mixed_z_measure(d, p), tail});
      emit(ctx, tb);
    };
  });

  // lattice-corr
  auto* c_lc = app.add_subcommand("lattice-corr", "lattice correlation of a set X of half-integers");
  c_lc->add_option("--z", z, "z as re,im")->required();
  c_lc->add_option("--theta", theta, "Jack parameter (default 1/2)");
  c_lc->add_option("--xi", xi, "mixing parameter in (0,1)")->required();
  c_lc->add_option("--x", x_text, "points of Z>=0 + 1/2, e.g. '1/2,7/2'")->required();
  c_lc->add_option("--nmax", nmax, "largest diagram size enumerated")->required();
  c_lc->footer("CSV columns: x,value,truncation_bound,n_max,terms_summed");
  add_output_options(c_lc, ctx);
  c_lc->callback([&] {
    action = [&] {
      const ZParams p = zparams(z, theta, xi);
      const auto X = parse_half_list(x_text);
      const CorrelationReport r = lattice_correlation(X, p, nmax, workers_from_env());
      Table tb;
      tb.columns = {"x", "value", "truncation_bound", "n_max", "terms_summed"};
      tb.meta["z"] = cplx_json(p.z);
      tb.meta["theta"] = p.theta.to_string();
      tb.meta["xi"] = p.xi;
      tb.add({join_halves(X), r.value, r.truncation_bound, r.n_max_used, r.terms_summed});
      emit(ctx, tb);
    };
  });

  // pairings
  auto* c_pair = app.add_subcommand("pairings", "perfect matchings of {±1..±n}");
  c_pair->require_subcommand(1);
  auto* c_pl = c_pair->add_subcommand("list", "all matchings with cycle counts and t-measure");
  c_pl->add_option("--n", n, "level")->required();
  c_pl->add_option("--t", t, "t > 0 (default 1)");
  c_pl->footer("CSV columns: matching,cycles,probability");
  add_output_options(c_pl, ctx);
  c_pl->callback([&] {
    action = [&] {
      Table tb;
      tb.columns = {"matching", "cycles", "probability"};
      tb.meta["n"] = n;
      tb.meta["t"] = t;
      for (const auto& x : enumerate_matchings(n)) tb.add({x.to_string(), cycle_count(x), t_measure(x, t)});
      emit(ctx, tb);
    };
  });
  auto* c_pa = c_pair->add_subcommand("act", "right action x.g and the cocycle");
  c_pa->add_option("--x", matching_text, "matching, e.g. '{{1,-2},{-1,2}}'")->required();
  c_pa->add_option("--g", g_text, "signed permutation in cycle notation, e.g. '(1 -2)'")->required();
  c_pa->footer("CSV columns: x,g,result,cocycle");
  add_output_options(c_pa, ctx);
  c_pa->callback([&] {
    action = [&] {
      const Matching x = Matching::parse(matching_text);
      const SignedPermutation g = SignedPermutation::parse_cycles(g_text, x.n());
      Table tb;
      tb.columns = {"x", "g", "result", "cocycle"};
      tb.add({x.to_string(), g_text, act(x, g).to_string(), cocycle(x, g)});
      emit(ctx, tb);
    };
  });
  auto* c_pp = c_pair->add_subcommand("project", "projection X(n) -> X(n-1)");
  c_pp->add_option("--x", matching_text, "matching")->required();
  c_pp->footer("CSV columns: x,projection");
  add_output_options(c_pp, ctx);
  c_pp->callback([&] {
    action = [&] {
      const Matching x = Matching::parse(matching_text);
      Table tb;
      tb.columns = {"x", "projection"};
      tb.add({x.to_string(), project(x).to_string()});
      emit(ctx, tb);
    };
  });

  // gelfand
  auto* c_gel = app.add_subcommand("gelfand", "the Gelfand pair (S(2n), H(n))");
  c_gel->require_subcommand(1);
  auto* c_ct = c_gel->add_subcommand("coset-type", "coset type of g in S(2n)");
  c_ct->add_option("--g", g_text, "permutation, e.g. '(135)(67)(248)'")->required();
  c_ct->add_option("--n", n, "level; g acts on {1..2n}")->required();
  c_ct->footer("CSV columns: g,coset_type");
  add_output_options(c_ct, ctx);
  c_ct->callback([&] {
    action = [&] {
      const Permutation g = Permutation::parse_cycles(g_text, 2 * n);
      Table tb;
      tb.columns = {"g", "coset_type"};
      tb.add({g.to_cycle_string(), coset_type(g).to_string()});
      emit(ctx, tb);
    };
  });
  auto* c_zs = c_gel->add_subcommand("zonal", "zonal spherical function w^lambda(g), exact");
  c_zs->add_option("--lambda", lambda_text, "diagram, e.g. '(2,1)'")->required();
  c_zs->add_option("--g", g_text, "permutation of {1..2|lambda|}")->required();
  c_zs->footer("CSV columns: lambda,g,value,value_decimal");
  add_output_options(c_zs, ctx);
  c_zs->callback([&] {
    action = [&] {
      const YoungDiagram lam = YoungDiagram::parse(lambda_text);
      const Permutation g = Permutation::parse_cycles(g_text, 2 * lam.size());
      const Rational w = zonal_spherical(lam, g);
      Table tb;
      tb.columns = {"lambda", "g", "value", "value_decimal"};
      tb.add({lam.to_string(), g.to_cycle_string(), w.to_string(), w.value()});
      emit(ctx, tb);
    };
  });
  auto* c_sr = c_gel->add_subcommand("restriction", "sum over |lambda|=n of M^(n) w^lambda(g), theta = 1/2");
  c_sr->add_option("--z", z, "z as re,im")->required();
  c_sr->add_option("--n", n, "level")->required();
  c_sr->add_option("--g", g_text, "permutation of degree <= 2n")->required();
  c_sr->footer("CSV columns: n,g,value");
  add_output_options(c_sr, ctx);
  c_sr->callback([&] {
    action = [&] {
      const ZParams p = zparams(z, "1/2");
      const Permutation g = Permutation::parse_cycles(g_text, 2 * n);
      Table tb;
      tb.columns = {"n", "g", "value"};
      tb.add({n, g.to_cycle_string(), spherical_restriction(p, n, g)});
      emit(ctx, tb);
    };
  });
  auto* c_ch = c_gel->add_subcommand("character", "irreducible character of S(N) by Murnaghan-Nakayama");
  c_ch->add_option("--mu", mu_text, "irreducible, e.g. '(4,2)'")->required();
  c_ch->add_option("--class", cls_text, "cycle type, e.g. '(3,3)'")->required();
  c_ch->footer("CSV columns: mu,class,value");
  add_output_options(c_ch, ctx);
  c_ch->callback([&] {
    action = [&] {
      const YoungDiagram mu = YoungDiagram::parse(mu_text), cls = YoungDiagram::parse(cls_text);
      Table tb;
      tb.columns = {"mu", "class", "value"};
      tb.add({mu.to_string(), cls.to_string(), character_S2n(mu, cls)});
      emit(ctx, tb);
    };
  });
  auto* c_ex = c_gel->add_subcommand("extreme", "extreme spherical character at a Thoma point");
  c_ex->add_option("--alpha", alpha_text, "alpha coordinates, comma separated");
  c_ex->add_option("--beta", beta_text, "beta coordinates, comma separated");
  c_ex->add_option("--rho", rho_text, "coset type, e.g. '(3,1)'")->required();
  c_ex->add_option("--theta", theta, "Jack parameter (default 1/2)");
  c_ex->footer("CSV columns: rho,value");
  add_output_options(c_ex, ctx);
  c_ex->callback([&] {
    action = [&] {
      ThomaPoint w;
      if (!alpha_text.empty()) w.alpha = parse_grid(alpha_text);
      if (!beta_text.empty()) w.beta = parse_grid(beta_text);
      w.validate();
      const YoungDiagram rho = YoungDiagram::parse(rho_text);
      Table tb;
      tb.columns = {"rho", "value"};
      tb.add({rho.to_string(), extreme_character(w, rho, Theta::parse(theta).value())});
      emit(ctx, tb);
    };
  });

  // whittaker
  auto* c_w = app.add_subcommand("whittaker", "Whittaker function W_{k,m}(x)");
  c_w->add_option("--k", k_text, "k as re,im")->required();
  c_w->add_option("--m", m_text, "m as re,im")->required();
  c_w->add_option("--x", x_text, "grid 'a,b,c' or 'lo:hi:count'")->required();
  c_w->add_option("--method", method, "auto, series, integral or asymptotic")
      ->check(CLI::IsMember({"auto", "series", "integral", "asymptotic"}));
  c_w->footer("CSV columns: x,w_re,w_im,dw (dw only for real-valued W)");
  add_output_options(c_w, ctx);
  c_w->callback([&] {
    action = [&] {
      const WhittakerIndex idx{parse_complex(k_text), parse_complex(m_text)};
      const WhittakerMethod meth = parse_method(method);
      Table tb;
      tb.columns = {"x", "w_re", "w_im", "dw"};
      tb.meta["k"] = cplx_json(idx.k);
      tb.meta["m"] = cplx_json(idx.m);
      for (double x : parse_grid(x_text)) {
        const cplx w = whittaker_W_complex(idx, x, meth);
        json dw = nullptr;
        if (idx.real_valued()) dw = whittaker_W_deriv(idx, x);
        tb.add({x, w.real(), w.imag(), dw});
      }
      emit(ctx, tb);
    };
  });

  // kernel
  auto* c_k = app.add_subcommand("kernel", "Whittaker kernels at theta = 1/2");
  c_k->require_subcommand(1);
  auto* c_kw = c_k->add_subcommand("w", "w_a(x; z1, z2)");
  c_kw->add_option("--z", z, "z as re,im")->required();
  c_kw->add_option("--a", a, "a in Z + 1/2 (default 1/2)");
  c_kw->add_option("--x", x_text, "grid")->required();
  c_kw->footer("CSV columns: x,w");
  add_output_options(c_kw, ctx);
  c_kw->callback([&] {
    action = [&] {
      const KernelParams p = kernel_params(z, false);
      Table tb;
      tb.columns = {"x", "w"};
      tb.meta["a"] = a;
      for (double x : parse_grid(x_text)) tb.add({x, w_a(a, x, p)});
      emit(ctx, tb);
    };
  });
  auto* c_ks = c_k->add_subcommand("scalar", "scalar Whittaker kernel K^W(x, y)");
  auto* c_kS = c_k->add_subcommand("S", "antisymmetric S(x, y) with its quadrature error");
  auto* c_km = c_k->add_subcommand("matrix", "2x2 matrix kernel [[S, S_y], [S_x, S_xy]]");
  for (auto* sub : {c_ks, c_kS, c_km}) {
    sub->add_option("--z", z, "z as re,im")->required();
    sub->add_option("--x", x_text, "grid")->required();
    sub->add_option("--y", y_text, "grid")->required();
    add_output_options(sub, ctx);
  }
  for (auto* sub : {c_kS, c_km}) {
    sub->add_flag("--printed", printed, "use the S formula with coefficient |z|/4 and no sign flip");
  }
  c_ks->footer("CSV columns: x,y,value");
  c_kS->footer("CSV columns: x,y,value,error");
  c_km->footer("CSV columns: x,y,s,s_y,s_x,s_xy,error");
  c_ks->callback([&] {
    action = [&] {
      const KernelParams p = kernel_params(z, false);
      Table tb;
      tb.columns = {"x", "y", "value"};
      for (double x : parse_grid(x_text)) {
        for (double y : parse_grid(y_text)) tb.add({x, y, scalar_whittaker_kernel(x, y, p)});
      }
      emit(ctx, tb);
    };
  });
  c_kS->callback([&] {
    action = [&] {
      const KernelParams p = kernel_params(z, printed);
      Table tb;
      tb.columns = {"x", "y", "value", "error"};
      for (double x : parse_grid(x_text)) {
        for (double y : parse_grid(y_text)) {
          const Estimate e = S_estimate(x, y, p);
          tb.add({x, y, e.value, e.error});
        }
      }
      emit(ctx, tb);
    };
  });
  c_km->callback([&] {
    action = [&] {
      const KernelParams p = kernel_params(z, printed);
      Table tb;
      tb.columns = {"x", "y", "s", "s_y", "s_x", "s_xy", "error"};
      for (double x : parse_grid(x_text)) {
        for (double y : parse_grid(y_text)) {
          const MatrixKernelValue k = matrix_kernel(x, y, p);
          tb.add({x, y, k.s(), k.s_y(), k.s_x(), k.s_xy(), k.error});
        }
      }
      emit(ctx, tb);
    };
  });

  // corr
  auto* c_corr = app.add_subcommand("corr", "continuum correlation function as a Pfaffian");
  c_corr->add_option("--z", z, "z as re,im")->required();
  c_corr->add_option("--points", points_text, "distinct positive points, comma separated")->required();
  c_corr->footer("CSV columns: points,value,error");
  add_output_options(c_corr, ctx);
  c_corr->callback([&] {
    action = [&] {
      const KernelParams p = kernel_params(z, false);
      const std::vector<double> pts = parse_grid(points_text);
      const Estimate e = continuum_correlation(pts, p);
      Table tb;
      tb.columns = {"points", "value", "error"};
      tb.meta["z"] = cplx_json(p.z);
      tb.add({join_doubles(pts), e.value, e.error});
      emit(ctx, tb);
    };
  });

  // verify-limit
  auto* c_vl = app.add_subcommand("verify-limit", "rescaled lattice correlations vs the continuum value");
  c_vl->add_option("--z", z, "z as re,im")->required();
  c_vl->add_option("--u", u_text, "continuum points, comma separated")->required();
  c_vl->add_option("--xi", xi_text, "xi ladder, comma separated")->required();
  nmax = 80;
  c_vl->add_option("--nmax", nmax, "largest diagram size enumerated (default 80)");
  c_vl->footer(
      "JSON (default): the limit report. CSV columns: xi,lattice_points,lattice_value,\n"
      "truncation_bound,continuum_value,continuum_error,deviation,relative_deviation,inconclusive.\n"
      "Exit code 3 when any entry is inconclusive (tail bound above 10% of the value).");
  add_output_options(c_vl, ctx);
  c_vl->callback([&] {
    action = [&] {
      const std::vector<double> u = parse_grid(u_text), ladder = parse_grid(xi_text);
      const LimitReport r = verify_limit(u, parse_complex(z), ladder, nmax, workers_from_env());
      ctx.inconclusive = r.any_inconclusive();
      if (ctx.format == "csv") {
        Table tb;
        tb.columns = {"xi", "lattice_points", "lattice_value", "truncation_bound", "continuum_value",
                      "continuum_error", "deviation", "relative_deviation", "inconclusive"};
        for (const auto& e : r.entries) {
          tb.add({e.xi, join_halves(e.lattice_points), e.lattice_value, e.truncation_bound, r.continuum_value,
                  r.continuum_error, e.deviation,
                  e.relative_deviation ? json(*e.relative_deviation) : json(nullptr), e.inconclusive});
        }
        emit(ctx, tb);
      } else {
        ctx.text = limit_report_json(r).dump(2) + "\n";
      }
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitParameter;
  }

  for (auto* sub : app.get_subcommands()) {
    ctx.command = sub->get_name();
    for (auto* inner : sub->get_subcommands()) ctx.command += " " + inner->get_name();
  }

  try {
    if (!action) throw ParameterError("no subcommand selected");
    action();
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitParameter;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitParameter;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitParameter;
  }

  if (ctx.out_path.empty()) {
    out << ctx.text;
  } else {
    std::ofstream f(ctx.out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << ctx.out_path << "\n";
      return kExitParameter;
    }
    f << ctx.text;
  }
  if (ctx.inconclusive) {
    err << "inconclusive: a truncation bound exceeds 10% of its lattice value\n";
    return kExitNumerical;
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace zpfaff::cli
