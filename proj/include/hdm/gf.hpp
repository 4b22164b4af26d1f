#pragma once

// Arithmetic in GF(q) for odd prime powers q = p^k.
//
// Elements are coefficient vectors (constant term first) of polynomials of
// degree < k over F_p, reduced modulo a canonical monic irreducible. The
// canonical enumeration gives the element with coefficients (a_0, ..., a_{k-1})
// the index sum(a_j * p^j), so index 0 is always zero and index 1 is one.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hdm {

/// A value in {-1, +1}.
class Sign {
 public:
  constexpr Sign() noexcept = default;

  /// Throws std::invalid_argument unless value is -1 or +1.
  static Sign from_int(int value);

  static constexpr Sign plus() noexcept { return Sign(1); }
  static constexpr Sign minus() noexcept { return Sign(-1); }

  constexpr int value() const noexcept { return value_; }
  constexpr bool is_plus() const noexcept { return value_ > 0; }

  constexpr Sign operator-() const noexcept { return Sign(static_cast<std::int8_t>(-value_)); }
  constexpr Sign& operator*=(Sign other) noexcept {
    value_ = static_cast<std::int8_t>(value_ * other.value_);
    return *this;
  }
  friend constexpr Sign operator*(Sign lhs, Sign rhs) noexcept { return lhs *= rhs; }
  friend constexpr bool operator==(Sign, Sign) noexcept = default;

 private:
  constexpr explicit Sign(std::int8_t value) noexcept : value_(value) {}
  constexpr explicit Sign(int value) noexcept : value_(static_cast<std::int8_t>(value)) {}

  std::int8_t value_ = 1;
};

inline constexpr Sign kPlus = Sign::plus();
inline constexpr Sign kMinus = Sign::minus();

/// Element of GF(p^k): exactly k coefficients in [0, p).
struct FieldElem {
  std::vector<std::uint32_t> coeffs;

  friend bool operator==(const FieldElem&, const FieldElem&) = default;
  friend auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

/// Descriptor of GF(q). Immutable after construction.
class Field {
 public:
  /// Factors q and picks the canonical irreducible polynomial.
  /// Throws NotOddPrimePower for q even, q = 1, or q not a prime power.
  explicit Field(std::uint64_t q);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t k() const noexcept { return k_; }
  std::uint32_t q() const noexcept { return q_; }

  /// Monic irreducible of degree k, constant term first (length k + 1).
  const std::vector<std::uint32_t>& irreducible() const noexcept { return irr_; }

  /// All q elements in canonical order; elements()[0] is zero.
  const std::vector<FieldElem>& elements() const noexcept { return elems_; }

  const FieldElem& element(std::size_t index) const;
  std::size_t index_of(const FieldElem& a) const;
  bool contains(const FieldElem& a) const noexcept;

  /// Element with the given coefficients (constant term first, zero padded).
  FieldElem from_coeffs(std::vector<std::uint32_t> coeffs) const;

  FieldElem zero() const { return elems_[0]; }
  FieldElem one() const { return elems_[1]; }
  bool is_zero(const FieldElem& a) const noexcept;

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  /// Throws DivisionByZero for a = 0.
  FieldElem inv(const FieldElem& a) const;
  FieldElem div(const FieldElem& a, const FieldElem& b) const;
  FieldElem pow(const FieldElem& a, std::uint64_t e) const;

  /// Quadratic character by a^((q-1)/2). Throws CharacterOfZero for a = 0.
  Sign chi(const FieldElem& a) const;

  /// First element in canonical order with multiplicative order q - 1.
  FieldElem primitive_element() const;

  /// "3" in a prime field, "2t^2+t+1" in an extension.
  std::string to_string(const FieldElem& a) const;

 private:
  void check(const FieldElem& a) const;

  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> irr_;
  std::vector<FieldElem> elems_;
};

/// Index-addressed arithmetic tables for hot loops (O(q^2) memory).
class ElementTables {
 public:
  explicit ElementTables(const Field& field);

  std::size_t order() const noexcept { return q_; }
  std::size_t add(std::size_t a, std::size_t b) const noexcept { return add_[a * q_ + b]; }
  std::size_t sub(std::size_t a, std::size_t b) const noexcept { return sub_[a * q_ + b]; }
  std::size_t mul(std::size_t a, std::size_t b) const noexcept { return mul_[a * q_ + b]; }
  /// chi by element index; index 0 (zero) is outside the domain and yields
  /// the caller-supplied value.
  Sign chi(std::size_t a, Sign at_zero = kMinus) const noexcept {
    return a == 0 ? at_zero : chi_[a];
  }

 private:
  std::size_t q_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> sub_;
  std::vector<std::uint32_t> mul_;
  std::vector<Sign> chi_;
};

namespace detail {

/// Prime p and exponent k with n = p^k, or {0, 0} if n is not a prime power.
struct PrimePower {
  std::uint64_t p = 0;
  std::uint32_t k = 0;
};
PrimePower factor_prime_power(std::uint64_t n);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Trial division by every monic polynomial of degree 1..deg/2 over F_p.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace detail

}  // namespace hdm
