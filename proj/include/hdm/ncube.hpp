#pragma once

// n-dimensional {-1,+1} matrices of order v, layers, and the Hadamard checks.
//
// Conventions: coordinate positions are 1..n (as in "fix coordinate 3");
// index values along each coordinate are 0..v-1. Entry H(i_1, ..., i_n) is
// stored at flat offset sum_j i_j * v^(n-j), so i_n varies fastest.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hdm/gf.hpp"

namespace hdm {

class SignCube {
 public:
  using Index = std::vector<std::size_t>;

  /// Throws ShapeMismatch if entries.size() != v^n, n == 0 or v == 0.
  SignCube(std::size_t n, std::size_t v, std::vector<Sign> entries);

  /// Throws ShapeMismatch if any entry is not -1 or +1.
  static SignCube from_ints(std::size_t n, std::size_t v, std::span<const int> entries);
  static SignCube filled(std::size_t n, std::size_t v, Sign value);
  /// Evaluates fn on every index tuple in flat order.
  static SignCube generate(std::size_t n, std::size_t v, const std::function<Sign(std::span<const std::size_t>)>& fn);

  std::size_t dimension() const noexcept { return n_; }
  std::size_t order() const noexcept { return v_; }
  std::size_t size() const noexcept { return data_.size(); }
  std::span<const Sign> data() const noexcept { return data_; }

  /// Throws IndexOutOfRange on a component >= v, ShapeMismatch on idx.size() != n.
  Sign at(std::span<const std::size_t> idx) const;
  Sign at(std::initializer_list<std::size_t> idx) const { return at(std::span(idx.begin(), idx.size())); }
  Sign operator[](std::size_t flat) const noexcept { return data_[flat]; }

  std::size_t offset(std::span<const std::size_t> idx) const;
  /// v^(n - position), i.e. the flat stride of coordinate `position` (1-based).
  std::size_t stride(std::size_t position) const noexcept { return strides_[position - 1]; }

  friend bool operator==(const SignCube& lhs, const SignCube& rhs) {
    return lhs.n_ == rhs.n_ && lhs.v_ == rhs.v_ && lhs.data_ == rhs.data_;
  }

 private:
  std::size_t n_;
  std::size_t v_;
  std::vector<std::size_t> strides_;
  std::vector<Sign> data_;
};

/// v^n, or nullopt when it exceeds the supported cube size.
std::optional<std::size_t> checked_volume(std::size_t n, std::size_t v);

/// Coordinate position (1-based) -> fixed index value.
using FixedCoords = std::map<std::size_t, std::size_t>;

/// Restriction of H to the fixed coordinates; free coordinates keep their order.
/// Throws EmptyFix, FullFix, or IndexOutOfRange.
SignCube layer(const SignCube& cube, const FixedCoords& fixed);

struct VerifyReport {
  bool passed = true;
  /// Coordinate position (1-based) along which two parallel layers failed.
  std::optional<std::size_t> axis;
  /// The two index values a < b of the non-orthogonal layers.
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  /// Their inner product (should have been 0).
  std::optional<std::int64_t> deviation;
  /// Pairs evaluated in lexicographic order up to and including the violation.
  std::uint64_t checked_pairs = 0;
  /// For is_proper: the coordinates fixed to obtain the failing 2-D layer.
  FixedCoords layer;

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

/// "PASS" or "FAIL axis=<j> a=<a> b=<b> dev=<d>" (plus " layer=p:i,..." for 2-D layer failures).
std::string describe(const VerifyReport& report);

struct VerifyOptions {
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 1;
};

/// Parallel (n-1)-dimensional layers are orthogonal along every coordinate.
/// Throws DimensionTooSmall for n < 2.
VerifyReport is_hadamard(const SignCube& cube, VerifyOptions options = {});

/// Every 2-dimensional layer has orthogonal rows and orthogonal columns.
/// Throws DimensionTooSmall for n < 2.
VerifyReport is_proper(const SignCube& cube);

/// HDM v1 text.
std::string serialize(const SignCube& cube);
/// Throws ParseError with 1-based line and column.
SignCube parse(std::string_view text);

namespace detail {

/// Bit-packed {-1,+1} vector: bit set <=> entry is -1.
class SignBits {
 public:
  explicit SignBits(std::size_t length = 0) : length_(length), words_((length + 63) / 64, 0) {}

  std::size_t length() const noexcept { return length_; }
  void set_minus(std::size_t i) noexcept { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  /// sum_i x_i y_i = length - 2 * popcount(x xor y)
  std::int64_t dot(const SignBits& other) const noexcept;

 private:
  std::size_t length_;
  std::vector<std::uint64_t> words_;
};

}  // namespace detail

}  // namespace hdm
