#pragma once

// Matrix constructions. Field-based constructions index their coordinates by
// PG(1,q) in pg_points order: index 0 is infinity, index 1 + i is element i.

#include <cstddef>

#include "hdm/gf.hpp"
#include "hdm/ncube.hpp"

namespace hdm {

/// Paley type I matrix of order q + 1:
///   h(inf,inf) = -1, h(x,x) = 1, h(inf,y) = h(x,inf) = 1, else chi(y - x).
/// Hadamard exactly when q = 3 (mod 4).
SignCube paley2(const Field& field);

/// Three-dimensional Paley-type matrix of order q + 1:
///   -1 if x = y = z; 1 if exactly two coordinates agree;
///   chi(z - y) if x = inf; chi(x - z) if y = inf; chi(y - x) if z = inf;
///   chi((x - y)(y - z)(z - x)) for distinct finite x, y, z.
/// Hadamard for every odd prime power q, proper when q = 3 (mod 4).
SignCube paley3(const Field& field);

/// H(i_1..i_dim) = prod_{j<k} h(i_j, i_k). Proper when h is Hadamard.
/// Throws DimensionMismatch unless h is 2-dimensional, NotHadamardInput if
/// h fails is_hadamard, DimensionTooSmall for dim < 2.
SignCube yang_product(const SignCube& h, std::size_t dim);

/// H(i_1..i_{n+1}) = h(i_1..i_{n-1}, (i_n + i_{n+1}) mod v), one dimension up.
/// Throws DimensionTooSmall for n < 2, NotHadamardInput if h fails is_hadamard.
SignCube dim_lift(const SignCube& h);

/// Hammer-Seberry cube: 1 if some coordinate is infinity, else
/// chi(x_1 + ... + x_dim) with chi(0) := chi_at_zero.
SignCube almost_cube(const Field& field, std::size_t dim, Sign chi_at_zero = kMinus);

}  // namespace hdm
