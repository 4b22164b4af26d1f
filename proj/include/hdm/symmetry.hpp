#pragma once

// Invariance checks for 3-dimensional cubes indexed by PG(1,q).

#include <cstddef>
#include <span>

#include "hdm/gf.hpp"
#include "hdm/ncube.hpp"
#include "hdm/projline.hpp"

namespace hdm {

/// H(x,y,z) = H(y,z,x) for every triple. Throws DimensionMismatch unless n = 3.
bool check_cyclic(const SignCube& cube);

/// H(p(x),p(y),p(z)) = H(x,y,z) for an arbitrary permutation p of the index
/// values. Throws DimensionMismatch unless n = 3, OrderMismatch unless p has v entries.
bool check_point_permutation_invariance(const SignCube& cube, std::span<const std::size_t> perm);

/// Invariance under m acting on every coordinate through pg_points indexing.
/// Throws OrderMismatch unless v = q + 1.
bool check_moebius_invariance(const SignCube& cube, const Field& field, const Moebius& m);

/// Invariance under every element of psl_generators(field), hence under PSL(2,q).
bool check_psl_invariance(const SignCube& cube, const Field& field);

/// f(x) = -1/(x - c), coefficients (0, -1, 1, -c): sends c to infinity, so the
/// z = c layer of paley3 is the z = inf layer with rows and columns permuted by f.
/// Throws InfinityNotAllowed for c = inf.
Moebius layer_equiv_witness(const Field& field, const PPoint& c);

}  // namespace hdm
