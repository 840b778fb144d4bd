#include "ore/families.hpp"

namespace ore::families {

OreHandle weyl(Field f, unsigned level) {
  const auto r = RingDescriptor::poly(f, level);
  return OreRing::create(AdditiveMap::identity(r), AdditiveMap::derivative(r));
}

OreHandle weighted_weyl(Field f, unsigned level, std::vector<Scalar> weights) {
  const auto r = RingDescriptor::poly(f, level);
  return OreRing::create(AdditiveMap::identity(r), AdditiveMap::weighted_derivative(r, std::move(weights)));
}

OreHandle quotient_weyl(Field f, unsigned level, unsigned m) {
  const auto r = RingDescriptor::quotient(f, level, m);
  return OreRing::create(AdditiveMap::identity(r), AdditiveMap::derivative(r));
}

OreHandle quantum(const Scalar& q, unsigned level) {
  const auto r = RingDescriptor::poly(q.field(), level);
  return OreRing::create(AdditiveMap::identity(r), AdditiveMap::kernel(AdditiveMap::scale(r, q)));
}

OreHandle dynamics(Field f, std::vector<std::size_t> g, unsigned level) {
  const auto r = RingDescriptor::functions(f, level, static_cast<unsigned>(g.size()));
  return OreRing::create(AdditiveMap::identity(r), AdditiveMap::kernel(AdditiveMap::pullback(r, std::move(g))));
}

OreHandle untwisted(const RingDescriptor& r) { return OreRing::create(AdditiveMap::identity(r), AdditiveMap::zero(r)); }

}  // namespace ore::families
