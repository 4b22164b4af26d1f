#include "hdm/constructions.hpp"

#include <string>

#include "hdm/error.hpp"

namespace hdm {

namespace {

constexpr std::size_t kInfinity = 0;

// Point index -> element index; only valid for finite points.
std::size_t elem(std::size_t point) { return point - 1; }

void require_hadamard(const SignCube& h, const char* who) {
  const VerifyReport report = is_hadamard(h);
  if (!report.passed) throw NotHadamardInput(std::string(who) + ": input is not Hadamard (" + describe(report) + ")");
}

}  // namespace

SignCube paley2(const Field& field) {
  const ElementTables t(field);
  const std::size_t v = field.q() + 1;
  return SignCube::generate(2, v, [&](std::span<const std::size_t> idx) {
    const std::size_t x = idx[0], y = idx[1];
    if (x == kInfinity && y == kInfinity) return kMinus;
    if (x == y || x == kInfinity || y == kInfinity) return kPlus;
    return t.chi(t.sub(elem(y), elem(x)));
  });
}

SignCube paley3(const Field& field) {
  const ElementTables t(field);
  const std::size_t v = field.q() + 1;
  return SignCube::generate(3, v, [&](std::span<const std::size_t> idx) {
    const std::size_t x = idx[0], y = idx[1], z = idx[2];
    if (x == y && y == z) return kMinus;
    if (x == y || y == z || z == x) return kPlus;
    if (x == kInfinity) return t.chi(t.sub(elem(z), elem(y)));
    if (y == kInfinity) return t.chi(t.sub(elem(x), elem(z)));
    if (z == kInfinity) return t.chi(t.sub(elem(y), elem(x)));
    const std::size_t xy = t.sub(elem(x), elem(y));
    const std::size_t yz = t.sub(elem(y), elem(z));
    const std::size_t zx = t.sub(elem(z), elem(x));
    return t.chi(t.mul(t.mul(xy, yz), zx));
  });
}

SignCube yang_product(const SignCube& h, std::size_t dim) {
  if (h.dimension() != 2) {
    throw DimensionMismatch("product construction needs a 2-dimensional input, got n=" +
                            std::to_string(h.dimension()));
  }
  if (dim < 2) throw DimensionTooSmall("product dimension must be >= 2, got " + std::to_string(dim));
  require_hadamard(h, "product");
  const std::size_t v = h.order();
  return SignCube::generate(dim, v, [&](std::span<const std::size_t> idx) {
    Sign s = kPlus;
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = j + 1; k < dim; ++k) s *= h[idx[j] * v + idx[k]];
    }
    return s;
  });
}

SignCube dim_lift(const SignCube& h) {
  const std::size_t n = h.dimension();
  if (n < 2) throw DimensionTooSmall("dimension lift needs n >= 2, got n=" + std::to_string(n));
  require_hadamard(h, "lift");
  const std::size_t v = h.order();
  return SignCube::generate(n + 1, v, [&](std::span<const std::size_t> idx) {
    std::size_t flat = 0;
    for (std::size_t j = 0; j + 1 < n; ++j) flat = flat * v + idx[j];
    flat = flat * v + (idx[n - 1] + idx[n]) % v;
    return h[flat];
  });
}

SignCube almost_cube(const Field& field, std::size_t dim, Sign chi_at_zero) {
  if (dim < 2) throw DimensionTooSmall("almost cube dimension must be >= 2, got " + std::to_string(dim));
  const ElementTables t(field);
  const std::size_t v = field.q() + 1;
  return SignCube::generate(dim, v, [&](std::span<const std::size_t> idx) {
    std::size_t sum = 0;
    for (std::size_t point : idx) {
      if (point == kInfinity) return kPlus;
      sum = t.add(sum, elem(point));
    }
    return t.chi(sum, chi_at_zero);
  });
}

}  // namespace hdm
