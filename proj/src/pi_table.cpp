#include "ore/pi_table.hpp"

#include "ore/config.hpp"

namespace ore {

PiTable::PiTable(AdditiveMap sigma, AdditiveMap delta) : sigma_(std::move(sigma)), delta_(std::move(delta)) {
  if (!(sigma_.ring() == delta_.ring())) throw MismatchError("sigma and delta act on different rings");
}

RingElement PiTable::operator()(unsigned m, unsigned i, const RingElement& b) const {
  if (!(b.ring() == sigma_.ring())) throw MismatchError("pi applied to an element of another ring");
  RingElement out = RingElement::zero(b.ring());
  if (i > m) return out;
  const auto c = b.coords();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!c[k].is_zero()) out += on_basis(m, i, k).scaled(c[k]);
  }
  return out;
}

RingElement PiTable::on_basis(unsigned m, unsigned i, std::size_t flat) const {
  const RingDescriptor& r = sigma_.ring();
  if (i > m) return RingElement::zero(r);
  if (m == 0) return RingElement::basis(r, flat);
  const auto key = std::make_tuple(m, i, flat);
  {
    std::lock_guard lock(mu_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  // Computed outside the lock: the recursion re-enters on_basis.
  RingElement value = compute(m, i, flat);
#if ORE_DEBUG_CHECKS
  if (!outer_recursion_holds(m, i, flat, value)) throw Error("pi recursion invariant violated");
#endif
  std::lock_guard lock(mu_);
  return cache_.emplace(key, std::move(value)).first->second;
}

RingElement PiTable::compute(unsigned m, unsigned i, std::size_t flat) const {
  const RingElement b = RingElement::basis(sigma_.ring(), flat);
  RingElement out = (*this)(m - 1, i, delta_(b));
  if (i > 0) out += (*this)(m - 1, i - 1, sigma_(b));
  return out;
}

bool PiTable::outer_recursion_holds(unsigned m, unsigned i, std::size_t flat, const RingElement& value) const {
  const RingElement b = RingElement::basis(sigma_.ring(), flat);
  RingElement expect = delta_((*this)(m - 1, i, b));
  if (i > 0) expect += sigma_((*this)(m - 1, i - 1, b));
  return expect == value;
}

std::size_t PiTable::cached_entries() const {
  std::lock_guard lock(mu_);
  return cache_.size();
}

bool PiTable::verify_cached() const {
  std::vector<std::pair<std::tuple<unsigned, unsigned, std::size_t>, RingElement>> entries;
  {
    std::lock_guard lock(mu_);
    entries.assign(cache_.begin(), cache_.end());
  }
  for (const auto& [key, value] : entries) {
    const auto [m, i, flat] = key;
    if (!outer_recursion_holds(m, i, flat, value)) return false;
  }
  return true;
}

namespace {

// Applies every word with `i` sigmas among `m` letters to b, accumulating into out.
void enumerate(unsigned m, unsigned i, const AdditiveMap& sigma, const AdditiveMap& delta, const RingElement& b,
               RingElement& out) {
  if (m == 0) {
    out += b;
    return;
  }
  if (i > 0) enumerate(m - 1, i - 1, sigma, delta, sigma(b), out);
  if (i < m) enumerate(m - 1, i, sigma, delta, delta(b), out);
}

}  // namespace

RingElement pi_enumerated(unsigned m, unsigned i, const AdditiveMap& sigma, const AdditiveMap& delta,
                          const RingElement& b) {
  RingElement out = RingElement::zero(b.ring());
  if (i <= m) enumerate(m, i, sigma, delta, b, out);
  return out;
}

}  // namespace ore
