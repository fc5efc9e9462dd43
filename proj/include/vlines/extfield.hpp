#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "vlines/poly.hpp"

namespace vlines {

/// F_{p^k} for k <= 3, realized as F_p[z]/(m(z)) with m monic irreducible.
class ExtensionField {
 public:
  using Element = std::array<std::uint32_t, 3>;  // coefficients of 1, z, z^2

  ExtensionField(std::uint32_t p, int k);

  std::uint32_t characteristic() const noexcept { return p_; }
  int degree() const noexcept { return k_; }
  std::uint64_t size() const noexcept { return size_; }
  /// Coefficients m_0..m_{k-1} of m(z) = z^k + ... + m_0.
  const std::array<std::uint32_t, 3>& modulus() const noexcept { return mod_; }

  Element zero() const noexcept { return {0, 0, 0}; }
  Element one() const noexcept { return {1, 0, 0}; }
  Element embed(std::uint32_t residue) const noexcept { return {residue % p_, 0, 0}; }
  Element embed(const Scalar& s) const;
  /// Bijection [0, size) -> elements via base-p digits.
  Element element(std::uint64_t index) const noexcept;

  Element add(const Element& a, const Element& b) const noexcept;
  Element sub(const Element& a, const Element& b) const noexcept;
  Element mul(const Element& a, const Element& b) const noexcept;
  Element neg(const Element& a) const noexcept;
  Element pow(Element a, std::uint64_t e) const noexcept;
  Element inv(const Element& a) const;
  static bool is_zero(const Element& a) noexcept { return a[0] == 0 && a[1] == 0 && a[2] == 0; }
  /// True iff a lies in the prime subfield.
  bool in_prime_field(const Element& a) const noexcept { return a[1] == 0 && a[2] == 0; }

  /// Evaluates a form with F_p coefficients at a point over this field.
  Element evaluate(const HomForm& f, std::span<const Element> point) const;

 private:
  std::uint32_t p_;
  int k_;
  std::uint64_t size_;
  std::array<std::uint32_t, 3> mod_{0, 0, 0};
};

}  // namespace vlines
