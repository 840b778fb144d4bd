#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ore/families.hpp"

namespace ore::testing {

struct NamedHandle {
  std::string name;
  OreHandle handle;
};

/// The handles behind the shipped example specs plus the untwisted controls.
inline std::vector<NamedHandle> corpus() {
  const Field Q = Field::rationals();
  return {
      {"weyl-char0-rational", families::weyl(Q, 0)},
      {"weyl-char0-octonion", families::weyl(Q, 3)},
      {"weyl-fp2", families::weyl(Field::prime(2), 0)},
      {"weyl-fp3", families::weyl(Field::prime(3), 0)},
      {"quotient-weyl-fp2", families::quotient_weyl(Field::prime(2), 0, 2)},
      {"quotient-weyl-fp3", families::quotient_weyl(Field::prime(3), 0, 3)},
      {"quantum-q2", families::quantum(Scalar::from_int(Q, 2))},
      {"quantum-q-minus1", families::quantum(Scalar::from_int(Q, -1))},
      {"dynamics-cycle", families::dynamics(Q, {1, 2, 3, 0})},
      {"dynamics-two-cycles", families::dynamics(Q, {1, 2, 0, 4, 3})},
      {"dynamics-swap", families::dynamics(Q, {1, 0})},
      {"untwisted-rational", families::untwisted(RingDescriptor::cayley_dickson(Q, 0))},
      {"untwisted-octonion", families::untwisted(RingDescriptor::cayley_dickson(Q, 3))},
  };
}

}  // namespace ore::testing
