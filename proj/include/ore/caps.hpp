#pragma once

#include <optional>
#include <string>

#include "ore/error.hpp"

namespace ore {

/// Explicit finitization of every basis enumeration: X-degree bound, Y-degree
/// bound (used by K[Y] only) and the saturation round limit. All fields positive.
struct CapProfile {
  unsigned x = 4;
  unsigned y = 4;
  unsigned rounds = 8;

  void validate() const {
    if (x == 0 || y == 0 || rounds == 0) throw CapsError("caps must be positive: " + to_string());
  }
  std::optional<unsigned> y_cap() const { return y; }
  std::string to_string() const {
    return "X=" + std::to_string(x) + ",Y=" + std::to_string(y) + ",rounds=" + std::to_string(rounds);
  }
  friend bool operator==(const CapProfile&, const CapProfile&) = default;
};

/// Tri-state classification flag; `unknown` means no counterexample within caps
/// on an infinite-dimensional ring.
enum class Tri { yes, no, unknown };

inline std::string to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    case Tri::unknown: return "unknown-within-caps";
  }
  return "?";
}

}  // namespace ore
