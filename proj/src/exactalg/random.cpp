#include "vlines/random.hpp"

#include <algorithm>

namespace vlines {

namespace {
constexpr std::int64_t kRationalRange = 7;
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  return dist(engine_);
}

Scalar Rng::scalar(Field field) {
  if (field.is_rational()) return field.from_int(uniform(-kRationalRange, kRationalRange));
  return Scalar::residue(field.characteristic(), static_cast<std::uint64_t>(uniform(0, field.characteristic() - 1)));
}

Scalar Rng::nonzero_scalar(Field field) {
  for (;;) {
    Scalar s = scalar(field);
    if (!s.is_zero()) return s;
  }
}

Vector Rng::vector(Field field, std::size_t n) {
  Vector v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(scalar(field));
  return v;
}

Vector Rng::nonzero_vector(Field field, std::size_t n) {
  for (;;) {
    Vector v = vector(field, n);
    if (!is_zero_vector(v)) return v;
  }
}

Matrix Rng::matrix(Field field, std::size_t rows, std::size_t cols) {
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = scalar(field);
  return m;
}

Matrix Rng::invertible_matrix(Field field, std::size_t n) { return full_rank_matrix(field, n, n); }

Matrix Rng::full_rank_matrix(Field field, std::size_t rows, std::size_t cols) {
  const std::size_t want = std::min(rows, cols);
  for (;;) {
    Matrix m = matrix(field, rows, cols);
    if (rank(m) == want) return m;
  }
}

}  // namespace vlines
