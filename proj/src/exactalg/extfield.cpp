#include "vlines/extfield.hpp"

namespace vlines {

namespace {

std::uint64_t powmod_u(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

ExtensionField::ExtensionField(std::uint32_t p, int k) : p_(p), k_(k) {
  if (!is_prime_number(p) || p < 5) throw Error(ErrorCode::InvalidArgument, "extension base must be a prime >= 5");
  if (k < 1 || k > 3) throw Error(ErrorCode::InvalidArgument, "extension degree must be 1, 2 or 3");
  size_ = 1;
  for (int i = 0; i < k; ++i) size_ *= p;
  if (k == 2) {
    // z^2 - r with r a quadratic non-residue
    for (std::uint32_t r = 2; r < p; ++r) {
      if (powmod_u(r, (p - 1) / 2, p) == p - 1) {
        mod_ = {p - r, 0, 0};
        break;
      }
    }
  } else if (k == 3) {
    // z^3 + a z + b without roots in F_p is irreducible
    bool found = false;
    for (std::uint32_t a = 0; a < p && !found; ++a) {
      for (std::uint32_t b = 1; b < p && !found; ++b) {
        bool has_root = false;
        for (std::uint64_t x = 0; x < p; ++x) {
          if ((x * x % p * x + std::uint64_t{a} * x + b) % p == 0) {
            has_root = true;
            break;
          }
        }
        if (!has_root) {
          mod_ = {b, a, 0};
          found = true;
        }
      }
    }
  }
}

ExtensionField::Element ExtensionField::embed(const Scalar& s) const {
  if (s.field().characteristic() != p_) throw Error(ErrorCode::FieldMismatch, "scalar is not over the base field");
  return embed(s.residue());
}

ExtensionField::Element ExtensionField::element(std::uint64_t index) const noexcept {
  Element e{0, 0, 0};
  for (int i = 0; i < k_; ++i) {
    e[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return e;
}

ExtensionField::Element ExtensionField::add(const Element& a, const Element& b) const noexcept {
  Element r;
  for (int i = 0; i < 3; ++i) r[i] = static_cast<std::uint32_t>((std::uint64_t{a[i]} + b[i]) % p_);
  return r;
}

ExtensionField::Element ExtensionField::sub(const Element& a, const Element& b) const noexcept {
  Element r;
  for (int i = 0; i < 3; ++i) r[i] = static_cast<std::uint32_t>((std::uint64_t{a[i]} + p_ - b[i]) % p_);
  return r;
}

ExtensionField::Element ExtensionField::neg(const Element& a) const noexcept { return sub(zero(), a); }

ExtensionField::Element ExtensionField::mul(const Element& a, const Element& b) const noexcept {
  const std::uint64_t p = p_;
  std::uint64_t prod[5] = {0, 0, 0, 0, 0};
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  // reduce with z^k = -(m_0 + m_1 z + ...)
  for (int d = 2 * k_ - 2; d >= k_; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < k_; ++i) prod[d - k_ + i] = (prod[d - k_ + i] + (p - c) * mod_[i]) % p;
  }
  return {static_cast<std::uint32_t>(prod[0]), static_cast<std::uint32_t>(k_ > 1 ? prod[1] : 0),
          static_cast<std::uint32_t>(k_ > 2 ? prod[2] : 0)};
}

ExtensionField::Element ExtensionField::pow(Element a, std::uint64_t e) const noexcept {
  Element r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

ExtensionField::Element ExtensionField::inv(const Element& a) const {
  if (is_zero(a)) throw Error(ErrorCode::InvalidArgument, "inverse of zero in extension field");
  return pow(a, size_ - 2);
}

ExtensionField::Element ExtensionField::evaluate(const HomForm& f, std::span<const Element> point) const {
  if (static_cast<int>(point.size()) != f.nvars()) throw Error(ErrorCode::InvalidArgument, "point has wrong length");
  Element total = zero();
  for (const auto& [e, c] : f.terms()) {
    Element m = embed(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int j = 0; j < e[i]; ++j) m = mul(m, point[i]);
    total = add(total, m);
  }
  return total;
}

}  // namespace vlines
