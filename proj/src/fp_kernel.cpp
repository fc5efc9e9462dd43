#include "fp_kernel.hpp"

namespace vlines::fp {

bool normalize(std::vector<Res>& v, Res p) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const Res s = inv(v[i], p);
    for (std::size_t j = i; j < v.size(); ++j) v[j] = v[j] * s % p;
    return true;
  }
  return false;
}

std::vector<std::size_t> rref(std::vector<Res>& m, std::size_t rows, std::size_t cols, Res p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m[i * cols + c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[r * cols + j]);
    const Res s = inv(m[r * cols + c], p);
    for (std::size_t j = c; j < cols; ++j) m[r * cols + j] = m[r * cols + j] * s % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Res f = m[i * cols + c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) m[i * cols + j] = (m[i * cols + j] + (p - f) * m[r * cols + j]) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Res>> kernel(std::vector<Res>& m, std::size_t rows, std::size_t cols, Res p) {
  const auto pivots = rref(m, rows, cols, p);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Res>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Res> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - m[r * cols + free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

Quadrics::Quadrics(const std::vector<HomForm>& forms) {
  if (forms.empty()) throw Error(ErrorCode::InvalidArgument, "no quadrics to compile");
  const Field f = forms.front().field();
  if (!f.is_prime()) throw Error(ErrorCode::InvalidArgument, "residue kernels need a prime field");
  p_ = f.characteristic();
  nvars_ = forms.front().nvars();
  const auto basis = monomial_basis(nvars_, 2);
  for (const auto& e : basis) {
    int a = -1, b = -1;
    for (int i = 0; i < nvars_; ++i) {
      for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k) (a < 0 ? a : b) = i;
    }
    mono_.emplace_back(a, b);
  }
  for (const auto& form : forms) {
    if (form.field() != f || form.nvars() != nvars_ || form.degree() != 2)
      throw Error(ErrorCode::InvalidArgument, "residue kernels need quadrics over one field");
    std::vector<Res> c;
    for (const auto& s : form.dense_coefficients()) c.push_back(s.residue());
    coeffs_.push_back(std::move(c));
  }
  scratch_.resize(mono_.size() * 3);
}

void Quadrics::products(const Res* t, Res* out) const {
  for (std::size_t k = 0; k < mono_.size(); ++k) out[k] = t[mono_[k].first] * t[mono_[k].second] % p_;
}

void Quadrics::eval(const Res* t, Res* out) const {
  Res* prod = scratch_.data();
  products(t, prod);
  for (std::size_t f = 0; f < coeffs_.size(); ++f) {
    Res acc = 0;
    const auto& c = coeffs_[f];
    for (std::size_t k = 0; k < c.size(); ++k) acc += c[k] * prod[k] % p_;
    out[f] = acc % p_;
  }
}

void Quadrics::restrict_to_line(const Res* pt, const Res* qt, Res* out) const {
  const std::size_t m = mono_.size();
  Res* pp = scratch_.data();
  Res* qq = pp + m;
  Res* pq = qq + m;
  for (std::size_t k = 0; k < m; ++k) {
    const auto [a, b] = mono_[k];
    pp[k] = pt[a] * pt[b] % p_;
    qq[k] = qt[a] * qt[b] % p_;
    pq[k] = (pt[a] * qt[b] + pt[b] * qt[a]) % p_;
  }
  for (std::size_t f = 0; f < coeffs_.size(); ++f) {
    Res a = 0, b = 0, c = 0;
    const auto& co = coeffs_[f];
    for (std::size_t k = 0; k < m; ++k) {
      if (co[k] == 0) continue;
      a += co[k] * pp[k] % p_;
      b += co[k] * pq[k] % p_;
      c += co[k] * qq[k] % p_;
    }
    out[3 * f] = a % p_;
    out[3 * f + 1] = b % p_;
    out[3 * f + 2] = c % p_;
  }
}

std::vector<Res> residues(std::span<const Scalar> v) {
  std::vector<Res> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(s.residue());
  return out;
}

Vector to_scalars(const std::vector<Res>& v, Res p) {
  Vector out;
  out.reserve(v.size());
  for (Res r : v) out.push_back(Scalar::residue(static_cast<std::uint32_t>(p), r));
  return out;
}

}  // namespace vlines::fp
