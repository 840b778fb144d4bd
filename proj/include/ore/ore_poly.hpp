#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ore/additive_map.hpp"
#include "ore/caps.hpp"
#include "ore/pi_table.hpp"

namespace ore {

/// The ring S = R[X; sigma, delta] shared by every OrePoly built on it.
/// Created only through create(), which enforces sigma(1) = 1 and delta(1) = 0.
class OreRing {
 public:
  static std::shared_ptr<const OreRing> create(AdditiveMap sigma, AdditiveMap delta);

  const RingDescriptor& ring() const { return sigma_.ring(); }
  const AdditiveMap& sigma() const { return sigma_; }
  const AdditiveMap& delta() const { return delta_; }
  const PiTable& pi() const { return pi_; }

  /// Classification flags fixed at creation. `yes` is reported only with a
  /// structural reason or an exhaustive check on a finite-dimensional ring.
  Tri sigma_identity() const { return sigma_identity_; }
  Tri sigma_endomorphism() const { return sigma_endomorphism_; }
  Tri delta_zero() const { return delta_zero_; }
  Tri delta_sigma_derivation() const { return delta_derivation_; }
  Tri kernel_right_linear() const { return right_linear_; }
  Tri kernel_left_linear() const { return left_linear_; }

  /// "R[X; sigma, delta]" with the ring and map texts.
  std::string to_string() const;

 private:
  OreRing(AdditiveMap sigma, AdditiveMap delta);

  AdditiveMap sigma_;
  AdditiveMap delta_;
  PiTable pi_;
  Tri sigma_identity_ = Tri::unknown;
  Tri sigma_endomorphism_ = Tri::unknown;
  Tri delta_zero_ = Tri::unknown;
  Tri delta_derivation_ = Tri::unknown;
  Tri right_linear_ = Tri::unknown;
  Tri left_linear_ = Tri::unknown;
};

using OreHandle = std::shared_ptr<const OreRing>;

/// Degree in N or minus infinity. Addition absorbs minus infinity.
class Degree {
 public:
  constexpr Degree() = default;  // minus infinity
  constexpr explicit Degree(unsigned d) : finite_(true), value_(d) {}
  static constexpr Degree minus_infinity() { return Degree(); }

  constexpr bool is_finite() const { return finite_; }
  unsigned value() const {
    if (!finite_) throw DomainError("degree of the zero polynomial is minus infinity");
    return value_;
  }
  friend constexpr Degree operator+(Degree a, Degree b) {
    return a.finite_ && b.finite_ ? Degree(a.value_ + b.value_) : Degree();
  }
  friend constexpr bool operator==(Degree a, Degree b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }
  std::string to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

 private:
  bool finite_ = false;
  unsigned value_ = 0;
};

/// Element of S in left-coefficient form sum_i c_i X^i, with no trailing zeros.
class OrePoly {
 public:
  explicit OrePoly(OreHandle h);
  OrePoly(OreHandle h, std::vector<RingElement> coeffs);

  static OrePoly constant(OreHandle h, const RingElement& a);
  /// a X^n
  static OrePoly monomial(OreHandle h, const RingElement& a, unsigned n);
  static OrePoly x_power(OreHandle h, unsigned n);
  static OrePoly one(OreHandle h);

  const OreHandle& handle() const { return h_; }
  const RingDescriptor& ring() const { return h_->ring(); }
  const std::vector<RingElement>& coeffs() const { return coeffs_; }
  /// Coefficient of X^n, zero past the degree.
  RingElement coeff(std::size_t n) const;
  bool is_zero() const { return coeffs_.empty(); }

  OrePoly operator-() const;
  OrePoly& operator+=(const OrePoly& o);
  OrePoly& operator-=(const OrePoly& o);
  friend OrePoly operator+(OrePoly a, const OrePoly& b) { return a += b; }
  friend OrePoly operator-(OrePoly a, const OrePoly& b) { return a -= b; }
  friend OrePoly operator*(const OrePoly& a, const OrePoly& b);
  friend bool operator==(const OrePoly& a, const OrePoly& b);
  /// Multiplies every coefficient by a ground-field scalar.
  OrePoly scaled(const Scalar& s) const;

  /// Throws MismatchError unless both operands live in the same Ore ring.
  void check_same(const OrePoly& o) const;

 private:
  void canonicalize();

  OreHandle h_;
  std::vector<RingElement> coeffs_;
};

/// Bilinear extension of a X^m * b X^n = sum_i a pi_i^m(b) X^(i+n).
OrePoly ore_mul(const OrePoly& f, const OrePoly& g);

Degree degree(const OrePoly& f);
/// Zero for the zero polynomial.
RingElement leading_coeff(const OrePoly& f);
bool is_monic(const OrePoly& f);

struct Division {
  OrePoly quotient;
  OrePoly remainder;
};

/// a = q b + r with r = 0 or deg r < deg b. b must be monic.
Division euclid_divide(const OrePoly& a, const OrePoly& b);

/// Right coefficients c with f = sum_i X^i c_i. Uses the closed binomial formula
/// when sigma is the identity and a triangular solve with sigma^-1 otherwise.
std::vector<RingElement> to_right_coeffs(const OrePoly& f);
/// Inverse of to_right_coeffs: expands sum_i X^i c_i into left form.
OrePoly from_right_coeffs(const OreHandle& h, const std::vector<RingElement>& c);

/// Canonical text: terms by ascending X-degree, multi-term coefficients in
/// parentheses, e.g. "1 + (Y + e1)*X - 2*X^3".
std::string to_text(const OrePoly& f);
/// Right form as text, "c_0 + X*(c_1) + X^2*(c_2)"; parses back to f.
std::string to_right_text(const OrePoly& f);

}  // namespace ore
