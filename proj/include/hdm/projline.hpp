#pragma once

// The projective line PG(1,q) and determinant-one linear fractional maps.

#include <cstddef>
#include <optional>
#include <vector>

#include "hdm/gf.hpp"

namespace hdm {

/// Point of PG(1,q): infinity or a field element.
class PPoint {
 public:
  static PPoint infinity() { return PPoint(); }
  static PPoint finite(FieldElem e) { return PPoint(std::move(e)); }

  bool is_infinity() const noexcept { return !value_; }
  /// Precondition: !is_infinity().
  const FieldElem& value() const { return *value_; }

  friend bool operator==(const PPoint&, const PPoint&) = default;

 private:
  PPoint() = default;
  explicit PPoint(FieldElem e) : value_(std::move(e)) {}

  std::optional<FieldElem> value_;
};

/// Points in index order: position 0 is infinity, position 1 + index_of(e) is e.
std::vector<PPoint> pg_points(const Field& field);

std::size_t point_index(const Field& field, const PPoint& x);
PPoint point_at(const Field& field, std::size_t index);

/// x -> (ax + b) / (cx + d) with ad - bc = 1.
class Moebius {
 public:
  /// Throws BadDeterminant unless ad - bc = 1; coefficients are kept as given.
  Moebius(const Field& field, FieldElem a, FieldElem b, FieldElem c, FieldElem d);

  static Moebius identity(const Field& field);

  const FieldElem& a() const noexcept { return a_; }
  const FieldElem& b() const noexcept { return b_; }
  const FieldElem& c() const noexcept { return c_; }
  const FieldElem& d() const noexcept { return d_; }

 private:
  FieldElem a_, b_, c_, d_;
};

/// f(x) = (ax+b)/(cx+d); a zero denominator gives infinity, f(inf) = a/c,
/// and f(inf) = inf when c = 0.
PPoint apply(const Field& field, const Moebius& m, const PPoint& x);

/// x -> outer(inner(x)).
Moebius compose(const Field& field, const Moebius& outer, const Moebius& inner);

/// Action on point indices: result[i] = index of m(point_at(i)).
std::vector<std::size_t> point_permutation(const Field& field, const Moebius& m);

/// True iff m permutes the q + 1 points.
bool is_bijection(const Field& field, const Moebius& m);

/// Two maps are equal in PSL(2,q) iff they act identically on every point.
bool same_action(const Field& field, const Moebius& lhs, const Moebius& rhs);

/// [x -> x+1, x -> -1/x, x -> g^2 x] with g the field's primitive element.
std::vector<Moebius> psl_generators(const Field& field);

}  // namespace hdm
