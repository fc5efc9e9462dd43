#include "vlines/pluecker.hpp"

namespace vlines {

Bivector::Bivector(Matrix entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols() || m_.rows() < 2) throw Error(ErrorCode::InvalidArgument, "bivector needs a square matrix of size >= 2");
  bool nonzero = false;
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    if (!m_(i, i).is_zero())
      throw Error(ErrorCode::Antisymmetry, "nonzero diagonal entry (" + std::to_string(i) + "," + std::to_string(i) + ")");
    for (std::size_t j = i + 1; j < m_.cols(); ++j) {
      if (m_(i, j) != -m_(j, i))
        throw Error(ErrorCode::Antisymmetry, "entries (" + std::to_string(i) + "," + std::to_string(j) + ") and (" +
                                                 std::to_string(j) + "," + std::to_string(i) + ") are not opposite");
      if (!m_(i, j).is_zero()) nonzero = true;
    }
  }
  if (!nonzero) throw Error(ErrorCode::InvalidArgument, "zero bivector");
}

Vector Bivector::upper() const {
  Vector out;
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = i + 1; j < m_.cols(); ++j) out.push_back(m_(i, j));
  return out;
}

std::pair<Vector, Vector> Bivector::spanning_points() const {
  if (!is_decomposable(*this)) throw Error(ErrorCode::NotALine, "bivector is not decomposable");
  // columns of u^v are combinations of u and v; two independent ones span
  std::optional<Vector> first;
  for (std::size_t j = 0; j < m_.cols(); ++j) {
    Vector c = m_.column(j);
    if (is_zero_vector(c)) continue;
    if (!first) {
      first = std::move(c);
    } else if (!proportional(*first, c)) {
      return {*first, c};
    }
  }
  throw Error(ErrorCode::Internal, "decomposable bivector without two independent columns");
}

Bivector wedge(std::span<const Scalar> u, std::span<const Scalar> v) {
  if (u.size() != v.size() || u.empty()) throw Error(ErrorCode::InvalidArgument, "wedge of points of different length");
  if (is_zero_vector(u) || is_zero_vector(v) || proportional(u, v))
    throw Error(ErrorCode::DegenerateSpan, "points are proportional");
  Matrix m(u[0].field(), u.size(), u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) m(i, j) = u[i] * v[j] - u[j] * v[i];
  return Bivector(std::move(m));
}

bool is_decomposable(const Bivector& b) {
  const std::size_t n = b.matrix().rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l)
          if (!(b(i, j) * b(k, l) - b(i, k) * b(j, l) + b(i, l) * b(j, k)).is_zero()) return false;
  return true;
}

bool has_rank_two(const Bivector& b) { return rank(b.matrix()) == 2; }

bool point_on_line(std::span<const Scalar> x, const Bivector& b) {
  const std::size_t n = b.matrix().rows();
  if (x.size() != n) throw Error(ErrorCode::InvalidArgument, "point has wrong length");
  if (!is_decomposable(b)) throw Error(ErrorCode::NotALine, "bivector is not decomposable");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (!(x[i] * b(j, k) - x[j] * b(i, k) + x[k] * b(i, j)).is_zero()) return false;
  return true;
}

bool line_in_hyperplane(std::span<const Scalar> h, const Bivector& b) {
  if (h.size() != b.matrix().rows()) throw Error(ErrorCode::InvalidArgument, "covector has wrong length");
  if (is_zero_vector(h)) throw Error(ErrorCode::InvalidArgument, "zero covector");
  return is_zero_vector(b.matrix().apply(h));
}

bool meets_subspace(const Bivector& b, const std::vector<Vector>& basis) {
  const auto [u, v] = b.spanning_points();
  const std::size_t dim_a = rank_of_vectors(b.field(), basis);
  std::vector<Vector> all = basis;
  all.push_back(u);
  all.push_back(v);
  return rank_of_vectors(b.field(), all) <= dim_a + 1;
}

bool lines_meet(const Bivector& a, const Bivector& b) {
  const auto [u1, v1] = a.spanning_points();
  const auto [u2, v2] = b.spanning_points();
  return rank_of_vectors(a.field(), {u1, v1, u2, v2}) <= 3;
}

bool same_line(const Bivector& a, const Bivector& b) {
  if (a.matrix().rows() != b.matrix().rows()) return false;
  return proportional(a.upper(), b.upper());
}

std::vector<Vector> annihilator(Field field, std::size_t dim, const std::vector<Vector>& basis) {
  if (basis.empty()) {
    std::vector<Vector> all;
    for (std::size_t i = 0; i < dim; ++i) {
      Vector e(dim, field.zero());
      e[i] = field.one();
      all.push_back(std::move(e));
    }
    return all;
  }
  return kernel_basis(Matrix::from_rows(field, basis, dim));
}

namespace {

void check_dim(const std::vector<Vector>& basis, int ambient_dim, int want, const char* what) {
  if (basis.empty()) {
    if (want == 0) return;
    throw Error(ErrorCode::WrongDimension, std::string(what) + " is empty");
  }
  const Field f = basis.front().front().field();
  for (const auto& v : basis)
    if (static_cast<int>(v.size()) != ambient_dim + 1)
      throw Error(ErrorCode::InvalidArgument, std::string(what) + " has a vector of wrong length");
  if (static_cast<int>(rank_of_vectors(f, basis)) != want)
    throw Error(ErrorCode::WrongDimension, std::string(what) + " does not have projective dimension " + std::to_string(want - 1));
}

}  // namespace

Flag Flag::order(int ambient_dim, std::vector<Vector> a) {
  check_dim(a, ambient_dim, ambient_dim - 2, "order center");
  return {Kind::Order, std::move(a), {}};
}

Flag Flag::class_flag(int ambient_dim, std::vector<Vector> a, std::vector<Vector> b) {
  check_dim(a, ambient_dim, ambient_dim - 1, "class center");
  check_dim(b, ambient_dim, ambient_dim, "class hyperplane");
  std::vector<Vector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  if (static_cast<int>(rank_of_vectors(b.front().front().field(), both)) != ambient_dim)
    throw Error(ErrorCode::InvalidArgument, "class center is not inside the hyperplane");
  return {Kind::Class, std::move(a), std::move(b)};
}

}  // namespace vlines
