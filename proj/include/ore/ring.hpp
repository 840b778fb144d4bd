#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ore/cayley_dickson.hpp"
#include "ore/scalar.hpp"

namespace ore {

enum class Construction {
  cayley_dickson,  // K itself
  poly,            // K[Y]
  quotient,        // K[Y] / (Y^m)
  functions,       // functions {0, ..., n-1} -> K, pointwise operations
};

std::string to_string(Construction c);

/// Full description of a coefficient ring built from a level-k Cayley-Dickson
/// algebra K over a Field.
///
/// Elements are stored as flat scalar coordinates in the canonical basis order:
/// slot-major (Y-degree or function point), Cayley-Dickson unit-minor, so the
/// basis element with flat index s * 2^k + u is e_u Y^s (or e_u at point s).
struct RingDescriptor {
  Field field;
  Construction construction = Construction::cayley_dickson;
  unsigned level = 0;
  unsigned modulus_exponent = 0;  // quotient only
  unsigned points = 0;            // functions only

  static RingDescriptor cayley_dickson(Field f, unsigned level);
  static RingDescriptor poly(Field f, unsigned level);
  static RingDescriptor quotient(Field f, unsigned level, unsigned m);
  static RingDescriptor functions(Field f, unsigned level, unsigned n);

  std::size_t unit_count() const { return std::size_t{1} << level; }
  bool has_variable() const { return construction == Construction::poly || construction == Construction::quotient; }
  bool finite_dimensional() const { return construction != Construction::poly; }
  /// Number of slots in the full ring; nullopt for K[Y].
  std::optional<std::size_t> slot_count() const;
  /// Number of slots in the basis enumeration; y_cap bounds the Y-degree for K[Y]
  /// and is ignored for finite-dimensional rings. Throws CapsError when required but absent.
  std::size_t capped_slots(std::optional<unsigned> y_cap) const;
  std::size_t capped_dimension(std::optional<unsigned> y_cap) const { return capped_slots(y_cap) * unit_count(); }
  /// Structural facts of the construction.
  bool is_associative() const { return level <= 2; }
  bool is_commutative() const { return level <= 1; }

  std::string to_string() const;

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;
};

/// Element of a coefficient ring, always in canonical form: polynomial and
/// quotient payloads carry no trailing zero slots, quotient payloads have at most
/// m slots, function payloads have exactly n slots.
class RingElement {
 public:
  RingElement(RingDescriptor ring, std::vector<Scalar> coords);

  static RingElement zero(const RingDescriptor& r);
  static RingElement one(const RingDescriptor& r);
  static RingElement from_scalar(const RingDescriptor& r, const Scalar& s);
  /// e_unit placed in the given slot (Y^slot or point slot).
  static RingElement unit(const RingDescriptor& r, std::size_t unit, std::size_t slot = 0);
  /// Basis element with the given flat index.
  static RingElement basis(const RingDescriptor& r, std::size_t flat_index);
  /// The constant Cayley-Dickson value k (k Y^0, or the constant function k).
  static RingElement constant(const RingDescriptor& r, const CDElement& k);

  const RingDescriptor& ring() const { return ring_; }
  std::span<const Scalar> coords() const { return coords_; }
  std::size_t slot_count() const { return coords_.size() / ring_.unit_count(); }
  CDElement slot(std::size_t s) const;
  /// Coordinate with the given flat index, zero past the payload.
  Scalar coord(std::size_t flat_index) const;
  bool is_zero() const;
  bool is_one() const;
  /// Highest Y-degree present (-1 for zero); meaningful for poly and quotient.
  long y_degree() const;

  /// Dense coordinates padded to `dim`; nullopt when the element has support beyond it.
  std::optional<std::vector<Scalar>> coords_within(std::size_t dim) const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement scaled(const Scalar& s) const;
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend bool operator==(const RingElement& a, const RingElement& b);

 private:
  void canonicalize();
  void check_same_ring(const RingElement& o) const;

  RingDescriptor ring_;
  std::vector<Scalar> coords_;
};

RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_neg(const RingElement& a);
RingElement ring_mul(const RingElement& a, const RingElement& b);
RingElement ring_one(const RingDescriptor& r);
RingElement ring_zero(const RingDescriptor& r);
bool ring_eq(const RingElement& a, const RingElement& b);

/// Canonical scalar basis of the ring, truncated at y_cap for K[Y].
std::vector<RingElement> capped_basis(const RingDescriptor& r, std::optional<unsigned> y_cap);

/// Builds an element from coordinates over the first coords.size() basis elements.
RingElement from_coords(const RingDescriptor& r, std::span<const Scalar> coords);

/// Canonical text: terms in basis order, e.g. "1 - 1/2*e3*Y^2" or "2*P0 + e1*P1".
std::string to_text(const RingElement& r);
/// Symbol of a basis element without coefficient ("1", "e2*Y^3", "P1").
std::string basis_symbol(const RingDescriptor& r, std::size_t flat_index);

}  // namespace ore
