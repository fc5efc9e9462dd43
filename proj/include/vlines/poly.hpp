#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "vlines/field.hpp"

namespace vlines {

using Exponents = std::vector<std::uint8_t>;

/// Lexicographic order with x0 > x1 > ... ; this is the canonical print order.
struct LexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const { return b < a; }
};

/// Sparse homogeneous form in `nvars` variables. Every stored exponent vector
/// sums to `degree`; zero coefficients are never stored.
class HomForm {
 public:
  using TermMap = std::map<Exponents, Scalar, LexDescending>;

  HomForm(Field field, int nvars, int degree);

  static HomForm variable(Field field, int nvars, int index);
  static HomForm constant(const Scalar& c, int nvars);
  /// Linear form sum coeffs[i] * x_i.
  static HomForm linear(std::span<const Scalar> coeffs);

  Field field() const noexcept { return field_; }
  int nvars() const noexcept { return nvars_; }
  int degree() const noexcept { return degree_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }

  Scalar coefficient(const Exponents& e) const;
  /// Accumulates c * x^e; checks field, arity and degree.
  void add_term(const Exponents& e, const Scalar& c);

  HomForm operator-() const;
  HomForm& operator+=(const HomForm& o);
  HomForm& operator-=(const HomForm& o);
  HomForm& operator*=(const Scalar& c);
  friend HomForm operator+(HomForm a, const HomForm& b) { return a += b; }
  friend HomForm operator-(HomForm a, const HomForm& b) { return a -= b; }
  friend HomForm operator*(HomForm a, const Scalar& c) { return a *= c; }
  friend HomForm operator*(const Scalar& c, HomForm a) { return a *= c; }
  friend HomForm operator*(const HomForm& a, const HomForm& b);
  friend bool operator==(const HomForm& a, const HomForm& b);
  friend bool operator!=(const HomForm& a, const HomForm& b) { return !(a == b); }

  HomForm pow(int e) const;

  Scalar evaluate(std::span<const Scalar> point) const;
  /// Replaces x_i by images[i]; all images share arity and degree.
  HomForm substitute(std::span<const HomForm> images) const;
  HomForm derivative(int var) const;
  /// Exact division by x_var; throws InvalidArgument if some term lacks it.
  HomForm divide_by_variable(int var) const;

  /// Coefficients with respect to monomial_basis(nvars, degree).
  std::vector<Scalar> dense_coefficients() const;
  static HomForm from_dense(Field field, int nvars, int degree, std::span<const Scalar> coeffs);

 private:
  Field field_;
  int nvars_;
  int degree_;
  TermMap terms_;
};

/// All exponent vectors of total degree `degree`, in LexDescending order.
std::vector<Exponents> monomial_basis(int nvars, int degree);
std::size_t binomial(std::size_t n, std::size_t k);

inline Scalar evaluate(const HomForm& f, std::span<const Scalar> point) { return f.evaluate(point); }

/// Restriction of f to the line {s*p + u*q}; a binary form in (s, u) of the
/// same degree. Throws DegenerateLine when p and q are proportional.
HomForm substitute_line(const HomForm& f, std::span<const Scalar> p, std::span<const Scalar> q);

/// Rank of the coefficient matrix of `forms` in the monomial basis.
/// Throws InvalidArgument on mixed degrees or arities.
int span_dimension(std::span<const HomForm> forms);

}  // namespace vlines
