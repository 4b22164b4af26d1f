#include "hdm/gf.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "hdm/error.hpp"

namespace hdm {

Sign Sign::from_int(int value) {
  if (value != 1 && value != -1) {
    throw std::invalid_argument("sign must be -1 or +1, got " + std::to_string(value));
  }
  return Sign(value);
}

namespace detail {

PrimePower factor_prime_power(std::uint64_t n) {
  if (n < 2) return {};
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {n, 1};
  std::uint32_t k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return {};
  return {p, k};
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime: a^(p-2)
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo a non-zero b.
Poly poly_mod(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  const std::uint32_t lead_inv = inverse_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - factor * b[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

}  // namespace

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t degree = f.size() - 1;
  for (std::size_t d = 1; d <= degree / 2; ++d) {
    // every monic divisor candidate of degree d, enumerated by its low coefficients
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i, c /= p) g[i] = static_cast<std::uint32_t>(c % p);
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

Field::Field(std::uint64_t q) {
  const auto [prime, degree] = detail::factor_prime_power(q);
  if (prime == 0 || prime == 2 || q > std::numeric_limits<std::int32_t>::max()) {
    throw NotOddPrimePower("q=" + std::to_string(q) + " is not an odd prime power");
  }
  p_ = static_cast<std::uint32_t>(prime);
  k_ = degree;
  q_ = static_cast<std::uint32_t>(q);

  // Smallest monic irreducible by sum(coeffs[j] * p^j) over the low coefficients.
  irr_.assign(k_ + 1, 0);
  irr_[k_] = 1;
  if (k_ == 1) {
    irr_[0] = 0;  // t: F_p itself
  } else {
    for (std::uint32_t code = 0; code < q_; ++code) {
      std::uint32_t c = code;
      for (std::uint32_t j = 0; j < k_; ++j, c /= p_) irr_[j] = c % p_;
      if (detail::is_irreducible(irr_, p_)) break;
    }
  }

  elems_.reserve(q_);
  for (std::uint32_t index = 0; index < q_; ++index) {
    FieldElem e{std::vector<std::uint32_t>(k_)};
    std::uint32_t c = index;
    for (std::uint32_t j = 0; j < k_; ++j, c /= p_) e.coeffs[j] = c % p_;
    elems_.push_back(std::move(e));
  }
}

const FieldElem& Field::element(std::size_t index) const {
  if (index >= q_) {
    throw IndexOutOfRange("element index " + std::to_string(index) + " not below q=" + std::to_string(q_));
  }
  return elems_[index];
}

std::size_t Field::index_of(const FieldElem& a) const {
  check(a);
  std::size_t index = 0;
  for (std::size_t j = a.coeffs.size(); j-- > 0;) index = index * p_ + a.coeffs[j];
  return index;
}

bool Field::contains(const FieldElem& a) const noexcept {
  return a.coeffs.size() == k_ &&
         std::all_of(a.coeffs.begin(), a.coeffs.end(), [this](std::uint32_t c) { return c < p_; });
}

void Field::check(const FieldElem& a) const {
  if (!contains(a)) throw InvalidElement("element does not belong to GF(" + std::to_string(q_) + ")");
}

FieldElem Field::from_coeffs(std::vector<std::uint32_t> coeffs) const {
  if (coeffs.size() > k_) throw InvalidElement("too many coefficients for GF(" + std::to_string(q_) + ")");
  coeffs.resize(k_, 0);
  FieldElem e{std::move(coeffs)};
  check(e);
  return e;
}

bool Field::is_zero(const FieldElem& a) const noexcept {
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](std::uint32_t c) { return c == 0; });
}

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const {
  check(a);
  check(b);
  FieldElem r{std::vector<std::uint32_t>(k_)};
  for (std::uint32_t j = 0; j < k_; ++j) r.coeffs[j] = (a.coeffs[j] + b.coeffs[j]) % p_;
  return r;
}

FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const {
  check(a);
  check(b);
  FieldElem r{std::vector<std::uint32_t>(k_)};
  for (std::uint32_t j = 0; j < k_; ++j) r.coeffs[j] = (a.coeffs[j] + p_ - b.coeffs[j]) % p_;
  return r;
}

FieldElem Field::neg(const FieldElem& a) const { return sub(zero(), a); }

FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const {
  check(a);
  check(b);
  std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::uint32_t j = 0; j < k_; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{a.coeffs[i]} * b.coeffs[j]) % p_;
    }
  }
  // irr is monic: t^k = -(irr_0 + ... + irr_{k-1} t^{k-1})
  for (std::size_t d = prod.size(); d-- > k_;) {
    const std::uint64_t top = prod[d];
    if (top == 0) continue;
    prod[d] = 0;
    for (std::uint32_t j = 0; j < k_; ++j) {
      prod[d - k_ + j] = (prod[d - k_ + j] + (p_ - irr_[j]) % p_ * top) % p_;
    }
  }
  FieldElem r{std::vector<std::uint32_t>(k_)};
  for (std::uint32_t j = 0; j < k_; ++j) r.coeffs[j] = static_cast<std::uint32_t>(prod[j]);
  return r;
}

FieldElem Field::pow(const FieldElem& a, std::uint64_t e) const {
  FieldElem result = one();
  FieldElem base = a;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

FieldElem Field::inv(const FieldElem& a) const {
  check(a);
  if (is_zero(a)) throw DivisionByZero("inverse of zero in GF(" + std::to_string(q_) + ")");
  return pow(a, q_ - 2);
}

FieldElem Field::div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }

Sign Field::chi(const FieldElem& a) const {
  check(a);
  if (is_zero(a)) throw CharacterOfZero("chi(0) is undefined");
  return pow(a, (q_ - 1) / 2) == one() ? kPlus : kMinus;
}

FieldElem Field::primitive_element() const {
  const auto divisors = detail::prime_divisors(q_ - 1);
  for (std::size_t index = 1; index < q_; ++index) {
    const FieldElem& g = elems_[index];
    const bool generates = std::none_of(divisors.begin(), divisors.end(), [&](std::uint64_t r) {
      return pow(g, (q_ - 1) / r) == one();
    });
    if (generates) return g;
  }
  throw std::logic_error("no primitive element found");  // unreachable for a field
}

std::string Field::to_string(const FieldElem& a) const {
  check(a);
  if (k_ == 1) return std::to_string(a.coeffs[0]);
  std::string out;
  for (std::size_t j = k_; j-- > 0;) {
    const std::uint32_t c = a.coeffs[j];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (j == 0 || c != 1) out += std::to_string(c);
    if (j >= 1) out += 't';
    if (j >= 2) out += '^' + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

ElementTables::ElementTables(const Field& field) : q_(field.q()) {
  add_.resize(q_ * q_);
  sub_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  chi_.resize(q_, kPlus);
  const auto& elems = field.elements();
  for (std::size_t a = 0; a < q_; ++a) {
    if (a != 0) chi_[a] = field.chi(elems[a]);
    for (std::size_t b = 0; b < q_; ++b) {
      add_[a * q_ + b] = static_cast<std::uint32_t>(field.index_of(field.add(elems[a], elems[b])));
      sub_[a * q_ + b] = static_cast<std::uint32_t>(field.index_of(field.sub(elems[a], elems[b])));
      mul_[a * q_ + b] = static_cast<std::uint32_t>(field.index_of(field.mul(elems[a], elems[b])));
    }
  }
}

}  // namespace hdm
