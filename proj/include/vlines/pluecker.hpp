#pragma once

#include <utility>
#include <vector>

#include "vlines/linalg.hpp"

namespace vlines {

/// A line of P^N as the full antisymmetric (N+1)x(N+1) matrix of its
/// Pluecker coordinates.
class Bivector {
 public:
  /// Throws Antisymmetry for a non-antisymmetric matrix and InvalidArgument
  /// for the zero matrix.
  explicit Bivector(Matrix entries);

  Field field() const noexcept { return m_.field(); }
  int ambient_dim() const noexcept { return static_cast<int>(m_.rows()) - 1; }
  const Matrix& matrix() const noexcept { return m_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  /// Entries above the diagonal, row by row.
  Vector upper() const;
  /// Two independent points spanning the line; throws NotALine if B is not
  /// decomposable.
  std::pair<Vector, Vector> spanning_points() const;

 private:
  Matrix m_;
};

/// Throws DegenerateSpan if u and v are proportional.
Bivector wedge(std::span<const Scalar> u, std::span<const Scalar> v);

/// All 4x4 Pfaffians vanish.
bool is_decomposable(const Bivector& b);
/// Rank of B is two; kept as an independent check of is_decomposable.
bool has_rank_two(const Bivector& b);

/// Throws NotALine if B is not decomposable.
bool point_on_line(std::span<const Scalar> x, const Bivector& b);
/// B.H = 0, i.e. every point of the line lies on H.
bool line_in_hyperplane(std::span<const Scalar> h, const Bivector& b);
/// The line meets span(basis); throws NotALine if B is not decomposable.
bool meets_subspace(const Bivector& b, const std::vector<Vector>& basis);

bool lines_meet(const Bivector& a, const Bivector& b);
/// Same projective line.
bool same_line(const Bivector& a, const Bivector& b);

/// Annihilator of span(basis): a basis of the covectors vanishing on it.
std::vector<Vector> annihilator(Field field, std::size_t dim, const std::vector<Vector>& basis);

/// Subspaces A in B of P^N for the two Schubert conditions of a surface in
/// G(1,N): either A of dimension N-3 alone (order), or A of dimension N-2
/// inside the hyperplane B (class). Bases are of vector subspaces.
struct Flag {
  enum class Kind { Order, Class };
  Kind kind;
  std::vector<Vector> a;
  std::vector<Vector> b;  // empty for Order

  /// Checks dimensions and the inclusion A in B.
  static Flag order(int ambient_dim, std::vector<Vector> a);
  static Flag class_flag(int ambient_dim, std::vector<Vector> a, std::vector<Vector> b);
};

}  // namespace vlines
