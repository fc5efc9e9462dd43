#include "vlines/unipoly.hpp"

namespace vlines {

UniPoly::UniPoly(Field field, std::vector<Scalar> coeffs) : field_(field), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.field() != field_) throw Error(ErrorCode::FieldMismatch, "polynomial coefficient over " + c.field().name());
  trim();
}

UniPoly UniPoly::x(Field field) { return UniPoly(field, {field.zero(), field.one()}); }

UniPoly UniPoly::constant(const Scalar& c) { return UniPoly(c.field(), {c}); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar UniPoly::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : field_.zero();
}

Scalar UniPoly::leading() const { return c_.empty() ? field_.zero() : c_.back(); }

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  return *this * c_.back().inverse();
}

Scalar UniPoly::evaluate(const Scalar& x) const {
  Scalar acc = field_.zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * field_.from_int(static_cast<std::int64_t>(i)));
  return UniPoly(field_, std::move(d));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.field_ != field_) throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.field_ != field_) throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.field_ != b.field_) throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
  if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
  std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(a.field_, std::move(r));
}

UniPoly operator*(UniPoly a, const Scalar& c) {
  for (auto& x : a.c_) x *= c;
  a.trim();
  return a;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  if (d.field_ != field_) throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
  std::vector<Scalar> rem = c_;
  const int dd = d.degree();
  if (degree() < dd) return {UniPoly(field_), *this};
  std::vector<Scalar> quo(static_cast<std::size_t>(degree() - dd + 1), field_.zero());
  const Scalar inv = d.leading().inverse();
  for (int i = degree(); i >= dd; --i) {
    const Scalar f = rem[static_cast<std::size_t>(i)] * inv;
    quo[static_cast<std::size_t>(i - dd)] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= f * d.c_[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {UniPoly(field_, std::move(quo)), UniPoly(field_, std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x.mod(y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly squarefree_part(const UniPoly& a) {
  if (a.degree() <= 0) return UniPoly::constant(a.field().one());
  const Field f = a.field();
  const UniPoly d = a.derivative();
  if (d.is_zero()) {
    // a(x) = b(x^p); over F_p, b^(1/p) has the same coefficients
    const int p = static_cast<int>(f.characteristic());
    std::vector<Scalar> b;
    for (int i = 0; i <= a.degree(); i += p) b.push_back(a.coeff(i));
    return squarefree_part(UniPoly(f, std::move(b)));
  }
  const UniPoly g = gcd(a, d);
  // a/g holds the factors whose multiplicity is prime to p; the rest divide g
  const UniPoly u = a.divmod(g).first.monic();
  if (g.degree() <= 0) return u;
  const UniPoly v = squarefree_part(g);
  return (u * v).divmod(gcd(u, v)).first.monic();
}

UniPoly powmod(const UniPoly& base, std::uint64_t e, const UniPoly& m) {
  UniPoly result = UniPoly::constant(base.field().one()).mod(m);
  UniPoly b = base.mod(m);
  while (e) {
    if (e & 1) result = (result * b).mod(m);
    b = (b * b).mod(m);
    e >>= 1;
  }
  return result;
}

int count_roots_in_extension(const UniPoly& a, int k) {
  const Field f = a.field();
  if (!f.is_prime()) throw Error(ErrorCode::InvalidArgument, "root counting over extensions needs a prime field");
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be positive");
  if (a.is_zero()) throw Error(ErrorCode::InvalidArgument, "the zero polynomial has every element as a root");
  const UniPoly s = a.monic();
  if (s.degree() <= 0) return 0;
  // x^(p^k) mod s via k Frobenius steps
  UniPoly frob = UniPoly::x(f).mod(s);
  for (int i = 0; i < k; ++i) frob = powmod(frob, f.characteristic(), s);
  return gcd(s, frob - UniPoly::x(f)).degree();
}

}  // namespace vlines
