#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ore/scalar.hpp"

namespace ore {

inline constexpr unsigned kMaxCayleyDicksonLevel = 5;

/// Element of the level-k Cayley-Dickson algebra over a Field: 2^k coordinates
/// on the units e_0 = 1, e_1, ..., e_{2^k - 1}.
///
/// Doubling convention: (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)) and
/// conj(a,b) = (conj(a), -b), where the first half of the coordinates is a.
class CDElement {
 public:
  /// Zero element.
  CDElement(Field f, unsigned level);
  /// Throws DomainError unless coords has exactly 2^level entries over one field.
  CDElement(unsigned level, std::vector<Scalar> coords);

  static CDElement unit(Field f, unsigned level, std::size_t index);
  static CDElement scalar(unsigned level, const Scalar& s);

  unsigned level() const { return level_; }
  Field field() const { return field_; }
  std::size_t size() const { return coords_.size(); }
  std::span<const Scalar> coords() const { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const;

  CDElement operator-() const;
  CDElement& operator+=(const CDElement& o);
  CDElement& operator-=(const CDElement& o);
  friend CDElement operator+(CDElement a, const CDElement& b) { return a += b; }
  friend CDElement operator-(CDElement a, const CDElement& b) { return a -= b; }
  friend bool operator==(const CDElement& a, const CDElement& b);

 private:
  void check_compatible(const CDElement& o) const;

  Field field_;
  unsigned level_;
  std::vector<Scalar> coords_;
};

CDElement cd_mul(const CDElement& x, const CDElement& y);
CDElement cd_conj(const CDElement& x);
/// Level-0 coordinate of x * conj(x).
Scalar cd_norm(const CDElement& x);

namespace cd_detail {

/// e_i * e_j = cd_unit_sign(level, i, j) * e_{i xor j}.
int unit_sign(unsigned level, std::size_t i, std::size_t j);

/// out[i ^ j] += x_i y_j sign(i, j) for all nonzero x_i, y_j. Spans have length 2^level.
void mul_accumulate(unsigned level, std::span<const Scalar> x, std::span<const Scalar> y, std::span<Scalar> out);

}  // namespace cd_detail

}  // namespace ore
