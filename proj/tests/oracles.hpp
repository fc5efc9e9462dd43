#pragma once

// Test oracles. They use plain uint64 arithmetic mod p and share nothing
// with the library's algorithms beyond reading polynomial terms.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "vlines/family.hpp"

namespace oracle {

using u64 = std::uint64_t;
using Row = std::vector<u64>;

inline u64 pw(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline u64 inv(u64 a, u64 p) { return pw(a, p - 2, p); }

inline int rank_mod(std::vector<Row> m, u64 p) {
  int r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(r);
    while (piv < m.size() && m[piv][c] % p == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(r)]);
    Row& pr = m[static_cast<std::size_t>(r)];
    const u64 iv = inv(pr[c], p);
    for (auto& x : pr) x = x * iv % p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == static_cast<std::size_t>(r) || m[i][c] == 0) continue;
      const u64 f = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = (m[i][k] + p * p - f * pr[k] % p) % p;
    }
    ++r;
  }
  return r;
}

inline Row residues(const vlines::Vector& v) {
  Row r;
  for (const auto& s : v) r.push_back(s.residue());
  return r;
}

inline u64 eval_form(const vlines::HomForm& f, const Row& t, u64 p) {
  u64 acc = 0;
  for (const auto& [e, c] : f.terms()) {
    u64 m = c.residue();
    for (std::size_t i = 0; i < e.size(); ++i) m = m * pw(t[i], e[i], p) % p;
    acc = (acc + m) % p;
  }
  return acc;
}

/// W(t) as a full matrix of residues.
inline std::vector<Row> eval_w(const vlines::LineFamily& f, const Row& t) {
  const u64 p = f.field().characteristic();
  const auto m = static_cast<std::size_t>(f.N() + 1);
  std::vector<Row> w(m, Row(m, 0));
  for (const auto& [i, j] : f.upper_indices()) {
    const u64 v = eval_form(f.entry(i, j), t, p);
    w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    w[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = (p - v) % p;
  }
  return w;
}

/// Two independent rows spanning the line of a rank-2 antisymmetric matrix.
inline std::vector<Row> line_basis(const std::vector<Row>& w, u64 p) {
  std::vector<Row> out;
  for (const auto& r : w) {
    std::vector<Row> trial = out;
    trial.push_back(r);
    if (rank_mod(trial, p) > static_cast<int>(out.size())) out.push_back(r);
    if (out.size() == 2) break;
  }
  return out;
}

inline bool is_rank_two(const std::vector<Row>& w, u64 p) { return rank_mod(w, p) == 2; }

inline bool lines_meet(const std::vector<Row>& a, const std::vector<Row>& b, u64 p) {
  std::vector<Row> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return rank_mod(all, p) <= 3;
}

inline bool on_line(const Row& x, const std::vector<Row>& l, u64 p) {
  std::vector<Row> all = l;
  all.push_back(x);
  return rank_mod(all, p) == 2;
}

/// Intersection point of two distinct meeting lines.
inline Row meet_point(const std::vector<Row>& a, const std::vector<Row>& b, u64 p) {
  // x = a0 + lambda a1 or a1 on b: try both forms
  for (u64 lam = 0; lam <= p; ++lam) {
    Row x(a[0].size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = lam == p ? a[1][i] : (a[0][i] + lam * a[1][i]) % p;
    if (on_line(x, b, p)) return x;
  }
  return {};
}

/// Splitting type on the source line through p, q, from incidences alone:
/// (2,0) iff the lines over sampled parameters meet pairwise and pass
/// through one point. Returns true for (2,0).
inline bool pairwise_incidence_unbalanced(const vlines::LineFamily& f, const Row& pt, const Row& qt, std::mt19937_64& gen) {
  const u64 p = f.field().characteristic();
  std::vector<std::vector<Row>> lines;
  std::vector<std::pair<u64, u64>> params{{1, 0}, {0, 1}, {1, 1}};
  std::uniform_int_distribution<u64> d(0, p - 1);
  while (params.size() < 10) params.emplace_back(1, d(gen));
  for (const auto& [s, u] : params) {
    Row t(pt.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = (s * pt[i] + u * qt[i]) % p;
    lines.push_back(line_basis(eval_w(f, t), p));
  }
  for (std::size_t a = 0; a < lines.size(); ++a)
    for (std::size_t b = a + 1; b < lines.size(); ++b)
      if (!lines_meet(lines[a], lines[b], p)) return false;
  // pairwise meeting lines are concurrent or coplanar: require a common point
  for (std::size_t b = 1; b < lines.size(); ++b) {
    auto both = lines[0];
    both.insert(both.end(), lines[b].begin(), lines[b].end());
    if (rank_mod(both, p) == 2) continue;  // same line
    const Row x = meet_point(lines[0], lines[b], p);
    for (const auto& l : lines)
      if (!on_line(x, l, p)) return false;
    return true;
  }
  return true;
}

/// F_{p^k}, k <= 3, as polynomials mod the first monic irreducible found.
struct GF {
  u64 p;
  int k;
  Row mod;  // monic, coefficients of x^0 .. x^{k-1}

  GF(u64 p_, int k_) : p(p_), k(k_), mod(static_cast<std::size_t>(k_), 0) {
    if (k == 1) return;
    // degree 2 and 3 are irreducible iff they have no root in F_p
    for (u64 code = 0;; ++code) {
      Row c(static_cast<std::size_t>(k));
      u64 x = code;
      for (auto& v : c) {
        v = x % p;
        x /= p;
      }
      bool root = false;
      for (u64 r = 0; r < p && !root; ++r) {
        u64 val = pw(r, static_cast<u64>(k), p);
        for (int i = 0; i < k; ++i) val = (val + c[static_cast<std::size_t>(i)] * pw(r, static_cast<u64>(i), p)) % p;
        root = val == 0;
      }
      if (!root) {
        mod = c;
        return;
      }
    }
  }

  Row from_index(u64 i) const {
    Row e(static_cast<std::size_t>(k));
    for (auto& v : e) {
      v = i % p;
      i /= p;
    }
    return e;
  }
  Row embed(u64 r) const {
    Row e(static_cast<std::size_t>(k), 0);
    e[0] = r % p;
    return e;
  }
  Row add(const Row& a, const Row& b) const {
    Row r(a.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a[i] + b[i]) % p;
    return r;
  }
  Row mul(const Row& a, const Row& b) const {
    Row prod(static_cast<std::size_t>(2 * k - 1), 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        prod[static_cast<std::size_t>(i + j)] = (prod[static_cast<std::size_t>(i + j)] + a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)]) % p;
    for (int d = 2 * k - 2; d >= k; --d) {
      const u64 c = prod[static_cast<std::size_t>(d)];
      if (!c) continue;
      prod[static_cast<std::size_t>(d)] = 0;
      for (int i = 0; i < k; ++i) {
        auto& slot = prod[static_cast<std::size_t>(d - k + i)];
        slot = (slot + p * p - c * mod[static_cast<std::size_t>(i)] % p) % p;
      }
    }
    prod.resize(static_cast<std::size_t>(k));
    return prod;
  }
  bool zero(const Row& a) const {
    for (u64 v : a)
      if (v) return false;
    return true;
  }
  Row eval(const vlines::HomForm& f, const std::vector<Row>& x) const {
    Row acc(static_cast<std::size_t>(k), 0);
    for (const auto& [e, c] : f.terms()) {
      Row m = embed(c.residue());
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int r = 0; r < e[i]; ++r) m = mul(m, x[i]);
      acc = add(acc, m);
    }
    return acc;
  }
};

/// Points of P^2(F_{p^k}) where all forms vanish, by enumeration.
inline u64 count_plane_zeros(const std::vector<vlines::HomForm>& forms, u64 p, int k) {
  const GF gf(p, k);
  u64 q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  u64 count = 0;
  auto check = [&](const std::vector<Row>& x) {
    for (const auto& f : forms)
      if (!gf.zero(gf.eval(f, x))) return;
    ++count;
  };
  // normalized points (1:a:b), (0:1:b), (0:0:1)
  for (u64 a = 0; a < q; ++a)
    for (u64 b = 0; b < q; ++b) check({gf.embed(1), gf.from_index(a), gf.from_index(b)});
  for (u64 b = 0; b < q; ++b) check({gf.embed(0), gf.embed(1), gf.from_index(b)});
  check({gf.embed(0), gf.embed(0), gf.embed(1)});
  return count;
}

/// Points of the twisted cubic (1:a:a^2:a^3), a in F_{p^2} or infinity,
/// lying on the line with Pluecker matrix w (residues).
inline int cubic_points_on_line(const std::vector<Row>& w, u64 p) {
  const GF gf(p, 2);
  int count = 0;
  auto test = [&](const std::vector<Row>& x) {
    // x ^ W = 0: x_i W_jk - x_j W_ik + x_k W_ij for all i < j < k
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        for (std::size_t k = j + 1; k < 4; ++k) {
          Row acc = gf.mul(x[i], gf.embed(w[j][k]));
          acc = gf.add(acc, gf.mul(x[j], gf.embed((p - w[i][k]) % p)));
          acc = gf.add(acc, gf.mul(x[k], gf.embed(w[i][j])));
          if (!gf.zero(acc)) return;
        }
    ++count;
  };
  for (u64 idx = 0; idx < p * p; ++idx) {
    const Row a = gf.from_index(idx);
    const Row a2 = gf.mul(a, a);
    test({gf.embed(1), a, a2, gf.mul(a2, a)});
  }
  test({gf.embed(0), gf.embed(0), gf.embed(0), gf.embed(1)});
  return count;
}

}  // namespace oracle
