#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ore/ring.hpp"

namespace ore {

/// Outcome of a finite identity check. When `holds` is false, `tuple` lists the
/// violating basis elements and `violated` names the identity. `within_caps`
/// marks checks that only enumerated a truncated basis.
struct Certificate {
  bool holds = true;
  bool within_caps = false;
  std::string violated;
  std::vector<RingElement> tuple;

  explicit operator bool() const { return holds; }
};

RingElement commutator(const RingElement& r, const RingElement& s);
RingElement associator(const RingElement& r, const RingElement& s, const RingElement& t);

enum class Subset {
  commuter,        // C(R)
  left_nucleus,    // N_l(R)
  middle_nucleus,  // N_m(R)
  right_nucleus,   // N_r(R)
  nucleus,         // N(R)
  center,          // Z(R)
};

std::string to_string(Subset s);

/// Checks the defining identities of `which` against every (pair of) capped basis
/// element(s). The center is decided as C ∩ N_l ∩ N_m. y_cap is required for K[Y].
Certificate membership(const RingElement& r, Subset which, std::optional<unsigned> y_cap = std::nullopt);

/// True when every associator of capped basis triples vanishes; certificate on failure.
Certificate coefficients_associative(const RingDescriptor& r, std::optional<unsigned> y_cap = std::nullopt);

}  // namespace ore
