#include "ore/ring_structure.hpp"

namespace ore {

RingElement commutator(const RingElement& r, const RingElement& s) { return r * s - s * r; }

RingElement associator(const RingElement& r, const RingElement& s, const RingElement& t) {
  return (r * s) * t - r * (s * t);
}

std::string to_string(Subset s) {
  switch (s) {
    case Subset::commuter: return "C";
    case Subset::left_nucleus: return "N_l";
    case Subset::middle_nucleus: return "N_m";
    case Subset::right_nucleus: return "N_r";
    case Subset::nucleus: return "N";
    case Subset::center: return "Z";
  }
  return "?";
}

namespace {

Certificate fail(std::string what, std::vector<RingElement> tuple, bool capped) {
  return Certificate{false, capped, std::move(what), std::move(tuple)};
}

Certificate check_commuter(const RingElement& r, const std::vector<RingElement>& basis, bool capped) {
  for (const auto& s : basis) {
    if (!commutator(r, s).is_zero()) return fail("[r,s] != 0", {r, s}, capped);
  }
  return Certificate{true, capped, {}, {}};
}

// slot: 0 -> (r,s,t), 1 -> (s,r,t), 2 -> (s,t,r)
Certificate check_nucleus(const RingElement& r, int slot, const std::vector<RingElement>& basis, bool capped) {
  static const char* names[] = {"(r,s,t) != 0", "(s,r,t) != 0", "(s,t,r) != 0"};
  for (const auto& s : basis) {
    for (const auto& t : basis) {
      RingElement a = slot == 0 ? associator(r, s, t) : slot == 1 ? associator(s, r, t) : associator(s, t, r);
      if (!a.is_zero()) {
        std::vector<RingElement> tuple = slot == 0 ? std::vector{r, s, t}
                                         : slot == 1 ? std::vector{s, r, t}
                                                     : std::vector{s, t, r};
        return fail(names[slot], std::move(tuple), capped);
      }
    }
  }
  return Certificate{true, capped, {}, {}};
}

}  // namespace

Certificate membership(const RingElement& r, Subset which, std::optional<unsigned> y_cap) {
  const RingDescriptor& ring = r.ring();
  const auto basis = capped_basis(ring, y_cap);
  const bool capped = !ring.finite_dimensional();
  switch (which) {
    case Subset::commuter: return check_commuter(r, basis, capped);
    case Subset::left_nucleus: return check_nucleus(r, 0, basis, capped);
    case Subset::middle_nucleus: return check_nucleus(r, 1, basis, capped);
    case Subset::right_nucleus: return check_nucleus(r, 2, basis, capped);
    case Subset::nucleus:
      for (int slot = 0; slot < 3; ++slot) {
        if (auto c = check_nucleus(r, slot, basis, capped); !c) return c;
      }
      return Certificate{true, capped, {}, {}};
    case Subset::center: {
      if (auto c = check_commuter(r, basis, capped); !c) return c;
      for (int slot = 0; slot < 2; ++slot) {
        if (auto c = check_nucleus(r, slot, basis, capped); !c) return c;
      }
      return Certificate{true, capped, {}, {}};
    }
  }
  return Certificate{};
}

Certificate coefficients_associative(const RingDescriptor& r, std::optional<unsigned> y_cap) {
  const auto basis = capped_basis(r, y_cap);
  const bool capped = !r.finite_dimensional();
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      const RingElement ab = a * b;
      for (const auto& c : basis) {
        if (!(ab * c - a * (b * c)).is_zero()) return fail("(a,b,c) != 0", {a, b, c}, capped);
      }
    }
  }
  return Certificate{true, capped, {}, {}};
}

}  // namespace ore
