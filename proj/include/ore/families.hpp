#pragma once

#include <vector>

#include "ore/ore_poly.hpp"

namespace ore::families {

/// T[Y][X; id, d/dY] with T the level-k Cayley-Dickson algebra.
OreHandle weyl(Field f, unsigned level = 0);
/// T[Y][X; id, delta] with delta(Y^n) = k_n Y^(n-1).
OreHandle weighted_weyl(Field f, unsigned level, std::vector<Scalar> weights);
/// (T[Y]/(Y^m))[X; id, d/dY].
OreHandle quotient_weyl(Field f, unsigned level, unsigned m);
/// K[Y][X; id, alpha_q - id] with alpha_q(Y) = qY.
OreHandle quantum(const Scalar& q, unsigned level = 0);
/// Functions on {0..n-1} with values in T, X twisted by delta = sigma(g) - id.
OreHandle dynamics(Field f, std::vector<std::size_t> g, unsigned level = 0);
/// R[X; id, 0].
OreHandle untwisted(const RingDescriptor& r);

}  // namespace ore::families
