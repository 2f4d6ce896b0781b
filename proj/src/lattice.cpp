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

#include "zpfaff/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "zpfaff/errors.hpp"

namespace zpfaff {

namespace {

// Subtrees rooted at this size become the parallel tasks. Fixed, so the
// summation order never depends on the worker count.
constexpr int kFrontierSize = 16;

struct Acc {
  std::vector<double> mass;
  std::vector<std::vector<double>> qsum;
  std::vector<std::uint64_t> terms;
  std::uint64_t nodes = 0;

  Acc(int n_max, std::size_t nq)
      : mass(static_cast<std::size_t>(n_max) + 1, 0.0),
        qsum(nq, std::vector<double>(static_cast<std::size_t>(n_max) + 1, 0.0)),
        terms(nq, 0) {}
};

}  // namespace

struct LatticeSweep::Partial {
  std::vector<int> rows;
  std::vector<int> cols;
  std::vector<int> bcount;  // bcount[b] = #columns of λ⁻ with length b
  double f = 1.0;
  int size = 0;
};

LatticeSweep::LatticeSweep(std::complex<double> z, const Theta& theta, int n_max, int workers, int cap)
    : z_(z), theta_(theta), n_max_(n_max), workers_(workers) {
  if (!(std::isfinite(z.real()) && std::isfinite(z.imag())) || z == std::complex<double>(0.0, 0.0)) {
    throw ParameterError("z must be finite and nonzero");
  }
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  if (n_max > cap) {
    throw ResourceError("n_max " + std::to_string(n_max) + " exceeds the cap " + std::to_string(cap));
  }
  if (workers_ <= 0) workers_ = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::size_t LatticeSweep::add_query(std::span<const HalfInteger> X) {
  if (X.empty()) throw DomainError("query set must be nonempty");
  std::vector<int> bs;
  for (const HalfInteger& h : X) {
    if (h.twice % 2 == 0) throw DomainError("query point is not a half-integer");
    if (h.twice < 1) throw DomainError("query point " + h.to_string() + " is negative");
    bs.push_back(static_cast<int>((h.twice - 1) / 2));
  }
  std::sort(bs.begin(), bs.end());
  if (std::adjacent_find(bs.begin(), bs.end()) != bs.end()) {
    throw DomainError("query points must be distinct");
  }
  queries_.push_back(std::move(bs));
  done_ = false;
  return queries_.size() - 1;
}

double LatticeSweep::query_stratum(std::size_t q, int n) const {
  if (!done_) throw Error("LatticeSweep::run has not been called");
  return qsum_.at(q).at(static_cast<std::size_t>(n));
}

namespace {

struct Walker {
  std::complex<double> z;
  double theta;
  std::int64_t p, q;
  int n_max;
  const std::vector<std::vector<int>>* queries;

  double hh(int arm, int leg) const {
    const double s = arm + theta * leg;
    return (s + 1.0) * (s + theta);
  }

  int skip(int c) const { return static_cast<int>((q * c + p - 1) / p); }

  template <class St>
  void record(const St& st, Acc& acc) const {
    const auto n = static_cast<std::size_t>(st.size);
    acc.mass[n] += st.f;
    ++acc.nodes;
    for (std::size_t k = 0; k < queries->size(); ++k) {
      bool in = true;
      for (int b : (*queries)[k]) {
        if (b >= static_cast<int>(st.bcount.size()) || st.bcount[static_cast<std::size_t>(b)] == 0) {
          in = false;
          break;
        }
      }
      if (in) {
        acc.qsum[k][n] += st.f;
        ++acc.terms[k];
      }
    }
  }

  // Weight factor for adding box (r, c), 0-based, to the current state.
  template <class St>
  double factor(const St& st, int r, int c) const {
    const double cs = std::norm(z + static_cast<double>(c) - theta * static_cast<double>(r));
    if (cs < 1e-300) return 0.0;
    double g = cs / theta;
    for (int cc = 0; cc < c; ++cc) {
      const int arm = c - 1 - cc;
      const int leg = st.cols[static_cast<std::size_t>(cc)] - 1 - r;
      g *= hh(arm, leg) / hh(arm + 1, leg);
    }
    for (int rr = 0; rr < r; ++rr) {
      const int arm = st.rows[static_cast<std::size_t>(rr)] - 1 - c;
      const int leg = r - 1 - rr;
      g *= hh(arm, leg) / hh(arm, leg + 1);
    }
    return g;
  }

  template <class St>
  void add(St& st, int r, int c) const {
    if (r == static_cast<int>(st.rows.size())) st.rows.push_back(0);
    ++st.rows[static_cast<std::size_t>(r)];
    const int s = skip(c);
    int& len = st.cols[static_cast<std::size_t>(c)];
    const int b_old = std::max(0, len - s);
    ++len;
    const int b_new = std::max(0, len - s);
    if (b_old > 0) --st.bcount[static_cast<std::size_t>(b_old)];
    if (b_new > 0) ++st.bcount[static_cast<std::size_t>(b_new)];
    ++st.size;
  }

  template <class St>
  void remove(St& st, int r, int c) const {
    const int s = skip(c);
    int& len = st.cols[static_cast<std::size_t>(c)];
    const int b_old = std::max(0, len - s);
    --len;
    const int b_new = std::max(0, len - s);
    if (b_old > 0) --st.bcount[static_cast<std::size_t>(b_old)];
    if (b_new > 0) ++st.bcount[static_cast<std::size_t>(b_new)];
    if (--st.rows[static_cast<std::size_t>(r)] == 0) st.rows.pop_back();
    --st.size;
  }

  // Records the current node and descends. With frontier != nullptr, nodes
  // of size `cut` are handed out instead of being recorded.
  template <class St>
  void descend(St& st, Acc& acc, int cut, std::vector<St>* frontier) const {
    if (frontier && st.size == cut) {
      frontier->push_back(st);
      return;
    }
    record(st, acc);
    if (st.size == n_max) return;
    const double f0 = st.f;
    const int l = static_cast<int>(st.rows.size());
    // child: new row of length one
    {
      const double g = factor(st, l, 0);
      if (g != 0.0) {
        add(st, l, 0);
        st.f = f0 * g;
        descend(st, acc, cut, frontier);
        remove(st, l, 0);
        st.f = f0;
      }
    }
    // child: extend the last row
    if (l >= 1 && (l == 1 || st.rows[static_cast<std::size_t>(l - 1)] < st.rows[static_cast<std::size_t>(l - 2)])) {
      const int c = st.rows[static_cast<std::size_t>(l - 1)];
      const double g = factor(st, l - 1, c);
      if (g != 0.0) {
        add(st, l - 1, c);
        st.f = f0 * g;
        descend(st, acc, cut, frontier);
        remove(st, l - 1, c);
        st.f = f0;
      }
    }
  }
};

}  // namespace

void LatticeSweep::run() {
  const Walker w{z_, theta_.value(), theta_.num(), theta_.den(), n_max_, &queries_};
  Partial root;
  root.cols.assign(static_cast<std::size_t>(n_max_) + 1, 0);
  root.bcount.assign(static_cast<std::size_t>(n_max_) + 2, 0);

  const std::size_t nq = queries_.size();
  Acc head(n_max_, nq);
  std::vector<Partial> frontier;
  const int cut = std::min(kFrontierSize, n_max_ + 1);
  w.descend(root, head, cut, &frontier);

  std::vector<Acc> parts(frontier.size(), Acc(n_max_, nq));
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next.fetch_add(1); i < frontier.size(); i = next.fetch_add(1)) {
      w.descend<Partial>(frontier[i], parts[i], 0, nullptr);
    }
  };
  const int nthreads = std::min<int>(workers_, static_cast<int>(frontier.size()));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < nthreads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  mass_ = head.mass;
  qsum_ = head.qsum;
  terms_ = head.terms;
  nodes_ = head.nodes;
  for (const Acc& a : parts) {
    for (std::size_t n = 0; n < mass_.size(); ++n) mass_[n] += a.mass[n];
    for (std::size_t k = 0; k < nq; ++k) {
      for (std::size_t n = 0; n < mass_.size(); ++n) qsum_[k][n] += a.qsum[k][n];
      terms_[k] += a.terms[k];
    }
    nodes_ += a.nodes;
  }
  done_ = true;
}

}  // namespace zpfaff
