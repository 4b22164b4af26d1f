#include "hdm/projline.hpp"

#include <string>

#include "hdm/error.hpp"

namespace hdm {

std::vector<PPoint> pg_points(const Field& field) {
  std::vector<PPoint> points;
  points.reserve(field.q() + 1);
  points.push_back(PPoint::infinity());
  for (const FieldElem& e : field.elements()) points.push_back(PPoint::finite(e));
  return points;
}

std::size_t point_index(const Field& field, const PPoint& x) {
  return x.is_infinity() ? 0 : 1 + field.index_of(x.value());
}

PPoint point_at(const Field& field, std::size_t index) {
  if (index == 0) return PPoint::infinity();
  if (index > field.q()) {
    throw IndexOutOfRange("point index " + std::to_string(index) + " exceeds q=" + std::to_string(field.q()));
  }
  return PPoint::finite(field.element(index - 1));
}

Moebius::Moebius(const Field& field, FieldElem a, FieldElem b, FieldElem c, FieldElem d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  const FieldElem det = field.sub(field.mul(a_, d_), field.mul(b_, c_));
  if (det != field.one()) {
    throw BadDeterminant("ad - bc = " + field.to_string(det) + ", expected 1");
  }
}

Moebius Moebius::identity(const Field& field) {
  return Moebius(field, field.one(), field.zero(), field.zero(), field.one());
}

PPoint apply(const Field& field, const Moebius& m, const PPoint& x) {
  if (x.is_infinity()) {
    if (field.is_zero(m.c())) return PPoint::infinity();
    return PPoint::finite(field.div(m.a(), m.c()));
  }
  const FieldElem denominator = field.add(field.mul(m.c(), x.value()), m.d());
  if (field.is_zero(denominator)) return PPoint::infinity();
  const FieldElem numerator = field.add(field.mul(m.a(), x.value()), m.b());
  return PPoint::finite(field.div(numerator, denominator));
}

Moebius compose(const Field& field, const Moebius& outer, const Moebius& inner) {
  // [a b; c d] = outer * inner
  auto dot = [&](const FieldElem& x1, const FieldElem& y1, const FieldElem& x2, const FieldElem& y2) {
    return field.add(field.mul(x1, y1), field.mul(x2, y2));
  };
  return Moebius(field, dot(outer.a(), inner.a(), outer.b(), inner.c()),
                 dot(outer.a(), inner.b(), outer.b(), inner.d()),
                 dot(outer.c(), inner.a(), outer.d(), inner.c()),
                 dot(outer.c(), inner.b(), outer.d(), inner.d()));
}

std::vector<std::size_t> point_permutation(const Field& field, const Moebius& m) {
  std::vector<std::size_t> perm(field.q() + 1);
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = point_index(field, apply(field, m, point_at(field, i)));
  return perm;
}

bool is_bijection(const Field& field, const Moebius& m) {
  const auto perm = point_permutation(field, m);
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t image : perm) {
    if (image >= seen.size() || seen[image]) return false;
    seen[image] = true;
  }
  return true;
}

bool same_action(const Field& field, const Moebius& lhs, const Moebius& rhs) {
  return point_permutation(field, lhs) == point_permutation(field, rhs);
}

std::vector<Moebius> psl_generators(const Field& field) {
  const FieldElem g = field.primitive_element();
  const FieldElem zero = field.zero();
  const FieldElem one = field.one();
  return {
      Moebius(field, one, one, zero, one),
      Moebius(field, zero, field.neg(one), one, zero),
      Moebius(field, g, zero, zero, field.inv(g)),
  };
}

}  // namespace hdm
