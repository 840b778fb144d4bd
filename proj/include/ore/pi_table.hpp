#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <tuple>

#include "ore/additive_map.hpp"

namespace ore {

/// Memoized pi_i^m: the sum over all words with i letters sigma and m - i letters
/// delta. Entries are keyed by (m, i, flat basis index) and filled by the recursion
///   pi_i^{m+1}(b) = pi_i^m(delta(b)) + pi_{i-1}^m(sigma(b)),   pi_0^0 = id,
/// with pi_i^m = 0 for i > m. Insertion is synchronized; values are deterministic.
class PiTable {
 public:
  PiTable(AdditiveMap sigma, AdditiveMap delta);

  const AdditiveMap& sigma() const { return sigma_; }
  const AdditiveMap& delta() const { return delta_; }

  RingElement operator()(unsigned m, unsigned i, const RingElement& b) const;
  RingElement on_basis(unsigned m, unsigned i, std::size_t flat) const;

  std::size_t cached_entries() const;
  /// Re-checks every cached entry against the outer recursion
  /// pi_i^{m}(b) = delta(pi_i^{m-1}(b)) + sigma(pi_{i-1}^{m-1}(b)).
  bool verify_cached() const;

 private:
  RingElement compute(unsigned m, unsigned i, std::size_t flat) const;
  bool outer_recursion_holds(unsigned m, unsigned i, std::size_t flat, const RingElement& value) const;

  AdditiveMap sigma_;
  AdditiveMap delta_;
  mutable std::mutex mu_;
  mutable std::map<std::tuple<unsigned, unsigned, std::size_t>, RingElement> cache_;
};

/// Sum over all interleavings, computed word by word (exponential in m).
RingElement pi_enumerated(unsigned m, unsigned i, const AdditiveMap& sigma, const AdditiveMap& delta,
                          const RingElement& b);

}  // namespace ore
