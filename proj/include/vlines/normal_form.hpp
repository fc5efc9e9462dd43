#pragma once

#include <vector>

#include "vlines/family.hpp"

namespace vlines {

/// Lines spanned by the rows (t_0, .., t_n, 0) and (0, l_0, .., l_n) in
/// P^{n+1}, with l_i = sum_{j >= i} a(i, j) t_j.
class CoordMatrix {
 public:
  /// Throws InvalidArgument unless `a` is square and upper triangular.
  explicit CoordMatrix(Matrix a);
  /// l_i = t_i: the shifted form.
  static CoordMatrix shifted(Field field, int n);

  Field field() const noexcept { return a_.field(); }
  int n() const noexcept { return static_cast<int>(a_.rows()) - 1; }
  const Matrix& coefficients() const noexcept { return a_; }
  /// Coefficient vectors in t of the two rows, n+2 entries each.
  std::vector<Vector> top() const;
  std::vector<Vector> bottom() const;
  bool is_shifted() const;

  friend bool operator==(const CoordMatrix&, const CoordMatrix&) = default;

 private:
  Matrix a_;
};

/// W = top ^ bottom, N = n + 1. Throws NotAnIsomorphism on a zero a(i, i).
LineFamily coord_to_family(const CoordMatrix& m);

struct NormalForm {
  CoordMatrix form;  // always shifted
  Matrix source;     // row k: t'_k as a form in t
  Matrix ambient;    // C, acting on the rows from the right
  int span_dim = 0;  // of the 2x2 minors
  bool verified = false;
};

/// Triangular base changes of the source and of P^{n+1} that bring `m` to
/// the shifted form. Throws NotAnIsomorphism on a zero a(i, i), Internal if
/// the result fails its own check.
NormalForm normal_form(const CoordMatrix& m);

}  // namespace vlines
