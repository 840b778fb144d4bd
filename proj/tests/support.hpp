#pragma once

#include <random>
#include <vector>

#include "ore/ore_poly.hpp"
#include "ore/ring.hpp"

namespace ore::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline Scalar random_scalar(Field f, int range = 3) {
  std::uniform_int_distribution<int> num(-range, range);
  if (f.is_rational()) {
    std::uniform_int_distribution<int> den(1, 3);
    return Scalar::from_rational(f, mpq_class(num(rng()), den(rng())));
  }
  return Scalar::from_int(f, num(rng()));
}

/// Random element with roughly `density` of the capped coordinates nonzero.
inline RingElement random_element(const RingDescriptor& r, unsigned y_cap = 3, double density = 0.5) {
  const std::size_t dim = r.capped_dimension(y_cap);
  std::bernoulli_distribution keep(density);
  std::vector<Scalar> c(dim, Scalar::zero(r.field));
  for (auto& x : c) {
    if (keep(rng())) x = random_scalar(r.field);
  }
  return from_coords(r, c);
}

inline CDElement random_cd(Field f, unsigned level, int range = 3) {
  std::vector<Scalar> c;
  for (std::size_t i = 0; i < (std::size_t{1} << level); ++i) c.push_back(random_scalar(f, range));
  return CDElement(level, std::move(c));
}

/// Random polynomial of X-degree at most x_deg with coefficients of Y-degree at most y_cap.
inline OrePoly random_poly(const OreHandle& h, unsigned x_deg, unsigned y_cap = 3, double density = 0.4) {
  std::vector<RingElement> c;
  for (unsigned n = 0; n <= x_deg; ++n) c.push_back(random_element(h->ring(), y_cap, density));
  return OrePoly(h, std::move(c));
}

/// Random monic polynomial of exact degree d.
inline OrePoly random_monic(const OreHandle& h, unsigned d, unsigned y_cap = 3) {
  std::vector<RingElement> c;
  for (unsigned n = 0; n < d; ++n) c.push_back(random_element(h->ring(), y_cap, 0.4));
  c.push_back(ring_one(h->ring()));
  return OrePoly(h, std::move(c));
}

}  // namespace ore::testing
