#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "vlines/errors.hpp"

namespace vlines {

class Scalar;

/// Ground field descriptor: the rationals, or a prime field F_p with p >= 5.
class Field {
 public:
  Field() = default;  // the rationals

  static Field rationals() noexcept { return Field(); }
  /// Throws InvalidArgument unless p is a prime in [5, 2^31).
  static Field prime(std::uint32_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  bool is_prime() const noexcept { return p_ != 0; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t value) const;
  /// Reduces mod p for prime fields; throws if the denominator vanishes mod p.
  Scalar from_rational(const mpq_class& value) const;

  /// "Q" or "F_p".
  std::string name() const;

  friend bool operator==(Field a, Field b) noexcept { return a.p_ == b.p_; }
  friend bool operator!=(Field a, Field b) noexcept { return a.p_ != b.p_; }

 private:
  friend class Scalar;
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime_number(std::uint64_t n) noexcept;
/// Smallest prime strictly greater than n.
std::uint32_t next_prime(std::uint32_t n);

/// Exact field element. Arithmetic between elements of different fields
/// throws FieldMismatch.
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar rational(mpq_class value);
  static Scalar residue(std::uint32_t p, std::uint64_t value);

  Field field() const;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Prime fields only: canonical residue in [0, p).
  std::uint32_t residue() const;
  /// Prime fields only: representative in (-p/2, p/2].
  std::int64_t symmetric_residue() const;
  /// Rationals only.
  const mpq_class& rational() const;

  Scalar operator-() const;
  Scalar inverse() const;  // throws InvalidArgument on zero
  Scalar pow(std::uint64_t exponent) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Equal only if both field and value agree.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Integers print bare, other rationals as "a/b", residues symmetrically.
  std::string to_string() const;

 private:
  Scalar(std::uint32_t p, std::uint32_t r) : p_(p), v_(r) {}
  void check_same_field(const Scalar& o) const;

  std::uint32_t p_ = 0;
  std::variant<std::uint32_t, mpq_class> v_{mpq_class(0)};
};

}  // namespace vlines
