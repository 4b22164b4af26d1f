#include "hdm/symmetry.hpp"

#include <string>
#include <vector>

#include "hdm/error.hpp"

namespace hdm {

namespace {

void require_3d(const SignCube& cube) {
  if (cube.dimension() != 3) {
    throw DimensionMismatch("expected a 3-dimensional cube, got n=" + std::to_string(cube.dimension()));
  }
}

}  // namespace

bool check_cyclic(const SignCube& cube) {
  require_3d(cube);
  const std::size_t v = cube.order();
  // H(x,y,z) = H(y,z,x) for all triples implies the second rotation too.
  for (std::size_t x = 0; x < v; ++x) {
    for (std::size_t y = 0; y < v; ++y) {
      for (std::size_t z = 0; z < v; ++z) {
        if (cube[(x * v + y) * v + z] != cube[(y * v + z) * v + x]) return false;
      }
    }
  }
  return true;
}

bool check_point_permutation_invariance(const SignCube& cube, std::span<const std::size_t> perm) {
  require_3d(cube);
  const std::size_t v = cube.order();
  if (perm.size() != v) {
    throw OrderMismatch("permutation of " + std::to_string(perm.size()) + " points for a cube of order " +
                        std::to_string(v));
  }
  for (std::size_t x = 0; x < v; ++x) {
    for (std::size_t y = 0; y < v; ++y) {
      for (std::size_t z = 0; z < v; ++z) {
        if (cube[(perm[x] * v + perm[y]) * v + perm[z]] != cube[(x * v + y) * v + z]) return false;
      }
    }
  }
  return true;
}

bool check_moebius_invariance(const SignCube& cube, const Field& field, const Moebius& m) {
  require_3d(cube);
  if (cube.order() != std::size_t{field.q()} + 1) {
    throw OrderMismatch("cube of order " + std::to_string(cube.order()) + " is not indexed by PG(1," +
                        std::to_string(field.q()) + ")");
  }
  const std::vector<std::size_t> perm = point_permutation(field, m);
  return check_point_permutation_invariance(cube, perm);
}

bool check_psl_invariance(const SignCube& cube, const Field& field) {
  for (const Moebius& m : psl_generators(field)) {
    if (!check_moebius_invariance(cube, field, m)) return false;
  }
  return true;
}

Moebius layer_equiv_witness(const Field& field, const PPoint& c) {
  if (c.is_infinity()) throw InfinityNotAllowed("the z = inf layer needs no witness");
  return Moebius(field, field.zero(), field.neg(field.one()), field.one(), field.neg(c.value()));
}

}  // namespace hdm
