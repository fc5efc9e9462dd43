#include "vlines/normal_form.hpp"

namespace vlines {

CoordMatrix::CoordMatrix(Matrix a) : a_(std::move(a)) {
  if (a_.rows() != a_.cols() || a_.rows() < 2)
    throw Error(ErrorCode::InvalidArgument, "coordinate matrix must be square of size n+1 >= 2");
  for (std::size_t i = 0; i < a_.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!a_(i, j).is_zero())
        throw Error(ErrorCode::InvalidArgument, "l_" + std::to_string(i) + " involves t_" + std::to_string(j));
}

CoordMatrix CoordMatrix::shifted(Field field, int n) {
  return CoordMatrix(Matrix::identity(field, static_cast<std::size_t>(n + 1)));
}

std::vector<Vector> CoordMatrix::top() const {
  const std::size_t m = a_.rows();
  std::vector<Vector> out(m + 1, Vector(m, field().zero()));
  for (std::size_t c = 0; c < m; ++c) out[c][c] = field().one();
  return out;
}

std::vector<Vector> CoordMatrix::bottom() const {
  const std::size_t m = a_.rows();
  std::vector<Vector> out(m + 1, Vector(m, field().zero()));
  for (std::size_t c = 1; c <= m; ++c) out[c] = a_.row(c - 1);
  return out;
}

bool CoordMatrix::is_shifted() const { return a_ == Matrix::identity(field(), a_.rows()); }

namespace {

void require_isomorphism(const CoordMatrix& m) {
  for (int i = 0; i <= m.n(); ++i)
    if (m.coefficients()(static_cast<std::size_t>(i), static_cast<std::size_t>(i)).is_zero())
      throw Error(ErrorCode::NotAnIsomorphism, "a(" + std::to_string(i) + "," + std::to_string(i) + ") = 0: the correspondence is not an isomorphism");
}

LineFamily rows_to_family(Field k, int n, const std::vector<Vector>& top, const std::vector<Vector>& bot) {
  LineFamily f(k, n, n + 1, "coord");
  for (int i = 0; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      f.set_entry(i, j, HomForm::linear(top[ui]) * HomForm::linear(bot[uj]) - HomForm::linear(top[uj]) * HomForm::linear(bot[ui]));
    }
  return f;
}

Vector combine(const std::vector<Vector>& forms, const Vector& gamma, std::size_t first) {
  Vector out(forms.front().size(), gamma.front().field().zero());
  for (std::size_t c = 0; c < gamma.size(); ++c)
    if (!gamma[c].is_zero())
      for (std::size_t v = 0; v < out.size(); ++v) out[v] += gamma[c] * forms[first + c][v];
  return out;
}

// Rows of the matrix times C.
std::vector<Vector> times(const std::vector<Vector>& row, const Matrix& c) {
  std::vector<Vector> out;
  for (std::size_t k = 0; k < c.cols(); ++k) out.push_back(combine(row, c.column(k), 0));
  return out;
}

}  // namespace

LineFamily coord_to_family(const CoordMatrix& m) {
  require_isomorphism(m);
  return rows_to_family(m.field(), m.n(), m.top(), m.bottom());
}

NormalForm normal_form(const CoordMatrix& m) {
  require_isomorphism(m);
  const Field k = m.field();
  const auto n = static_cast<std::size_t>(m.n());
  const auto top0 = m.top();
  const auto bot0 = m.bottom();
  auto top = top0;
  auto bot = bot0;
  Matrix c = Matrix::identity(k, n + 2);
  std::vector<Vector> tprime{top[0]};

  // Column k becomes a combination of columns k..n+1 that puts t'_{k-1} in
  // the second row; the first row then reads t'_k there.
  for (std::size_t col = 1; col <= n; ++col) {
    std::vector<Vector> span(bot.begin() + static_cast<std::ptrdiff_t>(col), bot.end());
    const auto gamma = solve(Matrix::from_columns(k, span, n + 1), tprime.back());
    if (!gamma || (*gamma)[0].is_zero())
      throw Error(ErrorCode::NotAnIsomorphism, "no triangular substitution for column " + std::to_string(col));
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < n + 2; ++j) cols.push_back(c.column(j));
    const Vector newcol = combine(cols, *gamma, col);
    for (std::size_t r = 0; r < n + 2; ++r) c(r, col) = newcol[r];
    tprime.push_back(combine(top, *gamma, col));
    top[col] = tprime.back();
    bot[col] = tprime[col - 1];
  }
  // last column: only l_n = a(n,n) t_n is left; rescale it to t'_n
  const Scalar scale = tprime[n][n] / m.coefficients()(n, n);
  for (std::size_t r = 0; r < n + 2; ++r) c(r, n + 1) *= scale;

  NormalForm out{CoordMatrix::shifted(k, m.n()), Matrix::from_rows(k, tprime, n + 1), c, 0, false};

  const auto new_top = times(top0, c);
  const auto new_bot = times(bot0, c);
  bool ok = rank(out.source) == n + 1 && rank(c) == n + 2 && is_zero_vector(new_top[n + 1]) && is_zero_vector(new_bot[0]);
  for (std::size_t j = 0; j <= n; ++j) {
    ok = ok && new_top[j] == tprime[j];
    ok = ok && new_bot[j + 1] == tprime[j];
  }
  out.span_dim = plucker_span_dim(rows_to_family(k, m.n(), new_top, new_bot));
  out.verified = ok && out.span_dim == static_cast<int>((n + 2) * (n + 1) / 2);
  if (!out.verified) throw Error(ErrorCode::Internal, "normal form failed its check");
  return out;
}

}  // namespace vlines
