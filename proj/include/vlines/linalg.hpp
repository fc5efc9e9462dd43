#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "vlines/field.hpp"

namespace vlines {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  /// Throws InvalidArgument on ragged or empty input.
  static Matrix from_rows(Field field, const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(Field field, const std::vector<Vector>& cols, std::size_t rows);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  Matrix transpose() const;
  Vector apply(std::span<const Scalar> x) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon row_echelon(const Matrix& a);
std::size_t rank(const Matrix& a);
/// Exact basis of {x : a x = 0}; its size is cols - rank.
std::vector<Vector> kernel_basis(const Matrix& a);
Scalar determinant(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);
/// Some solution of a x = b, if one exists.
std::optional<Vector> solve(const Matrix& a, std::span<const Scalar> b);

/// Rank of the matrix whose columns are `vectors` (all of length `dim`).
std::size_t rank_of_vectors(Field field, const std::vector<Vector>& vectors);

bool is_zero_vector(std::span<const Scalar> v);
/// Scales so that the first nonzero entry is one; zero stays zero.
Vector normalize_projective(std::span<const Scalar> v);
bool proportional(std::span<const Scalar> a, std::span<const Scalar> b);
Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);

}  // namespace vlines
