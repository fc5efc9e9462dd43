#include "vlines/field.hpp"

namespace vlines {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::DegenerateLine: return "DegenerateLine";
    case ErrorCode::DegenerateSpan: return "DegenerateSpan";
    case ErrorCode::NotALine: return "NotALine";
    case ErrorCode::BasePoint: return "BasePoint";
    case ErrorCode::ContractedLine: return "ContractedLine";
    case ErrorCode::ProjectionNotIsomorphic: return "ProjectionNotIsomorphic";
    case ErrorCode::NotAnIsomorphism: return "NotAnIsomorphism";
    case ErrorCode::EmptyJumpingSet: return "EmptyJumpingSet";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::Antisymmetry: return "Antisymmetry";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_prime_number(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t next_prime(std::uint32_t n) {
  std::uint64_t c = std::uint64_t{n} + 1;
  while (!is_prime_number(c)) ++c;
  if (c >= (std::uint64_t{1} << 31))
    throw Error(ErrorCode::InvalidArgument, "no prime below 2^31 after " + std::to_string(n));
  return static_cast<std::uint32_t>(c);
}

Field Field::prime(std::uint32_t p) {
  if (p < 5 || p >= (std::uint32_t{1} << 31) || !is_prime_number(p))
    throw Error(ErrorCode::InvalidArgument,
                "field characteristic must be a prime in [5, 2^31), got " + std::to_string(p));
  return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t value) const {
  if (p_ == 0) return Scalar::rational(mpq_class(static_cast<long>(value)));
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Scalar::residue(p_, static_cast<std::uint64_t>(r));
}

Scalar Field::from_rational(const mpq_class& value) const {
  if (p_ == 0) return Scalar::rational(value);
  mpz_class num = value.get_num() % p_;
  mpz_class den = value.get_den() % p_;
  if (den == 0)
    throw Error(ErrorCode::InvalidArgument,
                "denominator of " + value.get_str() + " vanishes modulo " + std::to_string(p_));
  if (num < 0) num += p_;
  Scalar n = Scalar::residue(p_, num.get_ui());
  Scalar d = Scalar::residue(p_, den.get_ui());
  return n / d;
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

Scalar Scalar::rational(mpq_class value) {
  value.canonicalize();
  Scalar s;
  s.p_ = 0;
  s.v_ = std::move(value);
  return s;
}

Scalar Scalar::residue(std::uint32_t p, std::uint64_t value) {
  return Scalar(p, static_cast<std::uint32_t>(value % p));
}

Field Scalar::field() const {
  return Field(p_);
}

bool Scalar::is_zero() const noexcept {
  if (p_ != 0) return std::get<std::uint32_t>(v_) == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (p_ != 0) return std::get<std::uint32_t>(v_) == 1;
  return std::get<mpq_class>(v_) == 1;
}

std::uint32_t Scalar::residue() const {
  if (p_ == 0) throw Error(ErrorCode::FieldMismatch, "residue() on a rational scalar");
  return std::get<std::uint32_t>(v_);
}

std::int64_t Scalar::symmetric_residue() const {
  const std::int64_t r = residue();
  return r > static_cast<std::int64_t>(p_ / 2) ? r - static_cast<std::int64_t>(p_) : r;
}

const mpq_class& Scalar::rational() const {
  if (p_ != 0) throw Error(ErrorCode::FieldMismatch, "rational() on a prime-field scalar");
  return std::get<mpq_class>(v_);
}

void Scalar::check_same_field(const Scalar& o) const {
  if (p_ != o.p_)
    throw Error(ErrorCode::FieldMismatch, "cannot combine scalars over " + field().name() +
                                              " and " + o.field().name());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (p_ != 0) {
    auto& v = std::get<std::uint32_t>(r.v_);
    v = v == 0 ? 0 : p_ - v;
  } else {
    auto& q = std::get<mpq_class>(r.v_);
    q = -q;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  if (p_ != 0) return pow(p_ - 2);
  return rational(1 / std::get<mpq_class>(v_));
}

Scalar Scalar::pow(std::uint64_t e) const {
  if (p_ != 0) {
    std::uint64_t base = std::get<std::uint32_t>(v_), acc = 1;
    while (e) {
      if (e & 1) acc = acc * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return residue(p_, acc);
  }
  mpq_class result(1);
  mpq_class base = std::get<mpq_class>(v_);
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return rational(result);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (p_ != 0) {
    auto& v = std::get<std::uint32_t>(v_);
    std::uint64_t s = std::uint64_t{v} + std::get<std::uint32_t>(o.v_);
    v = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  } else {
    std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (p_ != 0) {
    auto& v = std::get<std::uint32_t>(v_);
    const std::uint32_t w = std::get<std::uint32_t>(o.v_);
    v = v >= w ? v - w : v + (p_ - w);
  } else {
    std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (p_ != 0) {
    auto& v = std::get<std::uint32_t>(v_);
    v = static_cast<std::uint32_t>(std::uint64_t{v} * std::get<std::uint32_t>(o.v_) % p_);
  } else {
    std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  if (a.p_ != 0) return std::get<std::uint32_t>(a.v_) == std::get<std::uint32_t>(b.v_);
  return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
}

std::string Scalar::to_string() const {
  if (p_ != 0) return std::to_string(symmetric_residue());
  return std::get<mpq_class>(v_).get_str();
}

}  // namespace vlines
