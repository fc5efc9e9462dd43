#include "vlines/linalg.hpp"

#include <string>
#include <utility>

namespace vlines {

namespace {

// Elimination kernels. Prime fields run on raw residues; the rationals on mpq.
struct FpOps {
  using T = std::uint64_t;
  std::uint64_t p;
  bool is_zero(T a) const { return a == 0; }
  T inv(T a) const {
    T r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }
  T mul(T a, T b) const { return a * b % p; }
  // a - f*b
  T sub_mul(T a, T f, T b) const { return (a + p - f * b % p) % p; }
  T neg(T a) const { return a == 0 ? 0 : p - a; }
};

struct QOps {
  using T = mpq_class;
  bool is_zero(const T& a) const { return sgn(a) == 0; }
  T inv(const T& a) const { return 1 / a; }
  T mul(const T& a, const T& b) const { return a * b; }
  T sub_mul(const T& a, const T& f, const T& b) const { return a - f * b; }
  T neg(const T& a) const { return -a; }
};

// In-place Gauss-Jordan (reduce=true) or forward elimination. Returns pivot columns.
template <class Ops>
std::vector<std::size_t> eliminate(const Ops& ops, std::vector<typename Ops::T>& m, std::size_t rows,
                                   std::size_t cols, bool reduce) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!ops.is_zero(m[i * cols + c])) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[r * cols + j]);
    const auto inv = ops.inv(m[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) m[r * cols + j] = ops.mul(m[r * cols + j], inv);
    for (std::size_t i = reduce ? 0 : r + 1; i < rows; ++i) {
      if (i == r) continue;
      const auto f = m[i * cols + c];
      if (ops.is_zero(f)) continue;
      for (std::size_t j = c; j < cols; ++j) m[i * cols + j] = ops.sub_mul(m[i * cols + j], f, m[r * cols + j]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::uint64_t> to_residues(const Matrix& a) {
  std::vector<std::uint64_t> m(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i * a.cols() + j] = a(i, j).residue();
  return m;
}

std::vector<mpq_class> to_rationals(const Matrix& a) {
  std::vector<mpq_class> m(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i * a.cols() + j] = a(i, j).rational();
  return m;
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j].field() != field) throw Error(ErrorCode::FieldMismatch, "matrix entry over " + rows[i][j].field().name());
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_columns(Field field, const std::vector<Vector>& cols, std::size_t rows) {
  return from_rows(field, cols, rows).transpose();
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vector Matrix::apply(std::span<const Scalar> x) const {
  if (x.size() != cols_) throw Error(ErrorCode::InvalidArgument, "matrix-vector size mismatch");
  Vector y(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!x[j].is_zero()) y[i] += (*this)(i, j) * x[j];
  return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix product size mismatch");
  if (a.field_ != b.field_) throw Error(ErrorCode::FieldMismatch, "matrix product over different fields");
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RowEchelon row_echelon(const Matrix& a) {
  Matrix out(a.field(), a.rows(), a.cols());
  std::vector<std::size_t> pivots;
  if (a.field().is_prime()) {
    const auto p = a.field().characteristic();
    auto m = to_residues(a);
    pivots = eliminate(FpOps{p}, m, a.rows(), a.cols(), true);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = Scalar::residue(p, m[i * a.cols() + j]);
  } else {
    auto m = to_rationals(a);
    pivots = eliminate(QOps{}, m, a.rows(), a.cols(), true);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = Scalar::rational(m[i * a.cols() + j]);
  }
  return {std::move(out), std::move(pivots)};
}

std::size_t rank(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  if (a.field().is_prime()) {
    auto m = to_residues(a);
    return eliminate(FpOps{a.field().characteristic()}, m, a.rows(), a.cols(), false).size();
  }
  auto m = to_rationals(a);
  return eliminate(QOps{}, m, a.rows(), a.cols(), false).size();
}

std::vector<Vector> kernel_basis(const Matrix& a) {
  const Field f = a.field();
  std::vector<Vector> basis;
  if (a.cols() == 0) return basis;
  if (a.rows() == 0) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Vector v(a.cols(), f.zero());
      v[j] = f.one();
      basis.push_back(std::move(v));
    }
    return basis;
  }
  const auto ech = row_echelon(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar determinant(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  const Field f = a.field();
  const std::size_t n = a.rows();
  Matrix m = a;
  Scalar det = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (!m(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv == n) return f.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Scalar inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Scalar factor = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::InvalidArgument, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(a.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = a.field().one();
  }
  const auto ech = row_echelon(aug);
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  return inv;
}

std::optional<Vector> solve(const Matrix& a, std::span<const Scalar> b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::InvalidArgument, "solve: right-hand side has wrong length");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto ech = row_echelon(aug);
  if (!ech.pivots.empty() && ech.pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols(), a.field().zero());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.reduced(r, a.cols());
  return x;
}

std::size_t rank_of_vectors(Field field, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return 0;
  return rank(Matrix::from_rows(field, vectors, vectors[0].size()));
}

bool is_zero_vector(std::span<const Scalar> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector normalize_projective(std::span<const Scalar> v) {
  Vector out(v.begin(), v.end());
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    const Scalar inv = x.inverse();
    for (auto& y : out) y *= inv;
    break;
  }
  return out;
}

bool proportional(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) return false;
  // all 2x2 minors vanish
  std::size_t k = a.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() || !b[i].is_zero()) {
      k = i;
      break;
    }
  if (k == a.size()) return true;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[k] * b[j] != a[j] * b[k]) return false;
  return true;
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "dot: length mismatch");
  if (a.empty()) throw Error(ErrorCode::InvalidArgument, "dot: empty vectors");
  Scalar s = a[0].field().zero();
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace vlines
