#pragma once

// Raw-residue kernels for the enumeration loops. Everything here works on
// uint64 residues mod a prime p < 2^31 and mirrors a slower Scalar path
// elsewhere in the library.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "vlines/linalg.hpp"
#include "vlines/poly.hpp"

namespace vlines::fp {

using Res = std::uint64_t;

inline Res inv(Res a, Res p) {
  Res r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

/// Scales so the first nonzero entry is 1. Returns false for the zero vector.
bool normalize(std::vector<Res>& v, Res p);

/// In-place reduced row echelon form of a rows x cols matrix; returns pivots.
std::vector<std::size_t> rref(std::vector<Res>& m, std::size_t rows, std::size_t cols, Res p);
/// Kernel basis of a rows x cols matrix (destroys m).
std::vector<std::vector<Res>> kernel(std::vector<Res>& m, std::size_t rows, std::size_t cols, Res p);

/// A list of quadrics in `nvars` variables, stored densely over the degree-2
/// monomials (i <= j pairs).
class Quadrics {
 public:
  Quadrics() = default;
  explicit Quadrics(const std::vector<HomForm>& forms);

  Res prime() const noexcept { return p_; }
  int nvars() const noexcept { return nvars_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  void eval(const Res* t, Res* out) const;
  /// f(s p + u q) = s^2 A + s u B + u^2 C; writes (A, B, C) per form.
  void restrict_to_line(const Res* pt, const Res* qt, Res* out) const;

 private:
  void products(const Res* t, Res* out) const;
  Res p_ = 0;
  int nvars_ = 0;
  std::vector<std::pair<int, int>> mono_;
  std::vector<std::vector<Res>> coeffs_;
  mutable std::vector<Res> scratch_;
};

std::vector<Res> residues(std::span<const Scalar> v);
Vector to_scalars(const std::vector<Res>& v, Res p);

/// Points of P^m(F_p) in a fixed order: normalized vectors with first
/// nonzero coordinate 1. Calls f(point) for each; stops early if f returns false.
template <class F>
void for_each_point(int m, Res p, F&& f) {
  std::vector<Res> x(static_cast<std::size_t>(m + 1), 0);
  for (int lead = 0; lead <= m; ++lead) {
    std::fill(x.begin(), x.end(), 0);
    x[static_cast<std::size_t>(lead)] = 1;
    const int free = m - lead;
    std::uint64_t total = 1;
    for (int i = 0; i < free; ++i) total *= p;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t r = idx;
      for (int i = 0; i < free; ++i) {
        x[static_cast<std::size_t>(lead + 1 + i)] = r % p;
        r /= p;
      }
      if (!f(x)) return;
    }
  }
}

inline std::uint64_t projective_size(int m, Res p) {
  std::uint64_t total = 0, pw = 1;
  for (int i = 0; i <= m; ++i) {
    total += pw;
    pw *= p;
  }
  return total;
}

}  // namespace vlines::fp

namespace vlines::fp {

/// The point with the given position in for_each_point order.
inline std::vector<Res> point_at(int m, Res p, std::uint64_t ordinal) {
  std::vector<Res> x(static_cast<std::size_t>(m + 1), 0);
  for (int lead = 0; lead <= m; ++lead) {
    std::uint64_t block = 1;
    for (int i = 0; i < m - lead; ++i) block *= p;
    if (ordinal < block) {
      x[static_cast<std::size_t>(lead)] = 1;
      for (int i = 0; i < m - lead; ++i) {
        x[static_cast<std::size_t>(lead + 1 + i)] = ordinal % p;
        ordinal /= p;
      }
      return x;
    }
    ordinal -= block;
  }
  throw Error(ErrorCode::InvalidArgument, "point ordinal out of range");
}

inline std::uint64_t fnv1a(const std::vector<Res>& v) {
  std::uint64_t h = 1469598103934665603ULL;
  for (Res r : v) {
    for (int b = 0; b < 4; ++b) {
      h ^= (r >> (8 * b)) & 0xff;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

}  // namespace vlines::fp
