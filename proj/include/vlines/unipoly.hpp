#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "vlines/field.hpp"

namespace vlines {

/// Dense univariate polynomial, coefficients from degree 0 upwards, trimmed.
class UniPoly {
 public:
  explicit UniPoly(Field field) : field_(field) {}
  UniPoly(Field field, std::vector<Scalar> coeffs);

  static UniPoly x(Field field);
  static UniPoly constant(const Scalar& c);

  Field field() const noexcept { return field_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const noexcept { return c_; }
  Scalar coeff(int i) const;
  Scalar leading() const;

  UniPoly monic() const;
  Scalar evaluate(const Scalar& x) const;
  UniPoly derivative() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Scalar& c);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

  /// (quotient, remainder); throws on division by zero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  UniPoly mod(const UniPoly& d) const { return divmod(d).second; }

 private:
  void trim();
  Field field_;
  std::vector<Scalar> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly squarefree_part(const UniPoly& a);
/// base^e mod m.
UniPoly powmod(const UniPoly& base, std::uint64_t e, const UniPoly& m);
/// Number of distinct roots in F_{p^k} of a polynomial over F_p.
int count_roots_in_extension(const UniPoly& a, int k);

}  // namespace vlines
