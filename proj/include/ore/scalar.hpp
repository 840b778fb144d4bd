#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "ore/error.hpp"

namespace ore {

/// Ground field: the rationals (characteristic 0) or a prime field F_p with p < 2^31.
class Field {
 public:
  constexpr Field() = default;

  static Field rationals() { return Field(); }
  /// Throws DomainError when p is not a prime below 2^31.
  static Field prime(std::uint64_t p);

  constexpr std::uint32_t characteristic() const { return p_; }
  constexpr bool is_rational() const { return p_ == 0; }

  std::string to_string() const;

  friend constexpr bool operator==(Field a, Field b) { return a.p_ == b.p_; }

 private:
  explicit constexpr Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact element of a Field. Rationals are kept in lowest terms with positive
/// denominator (guaranteed by mpq canonicalization); residues live in [0, p).
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}

  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(Field f, long long v);
  /// Throws DomainError when the denominator vanishes modulo p.
  static Scalar from_rational(Field f, const mpq_class& q);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Rational value; only valid over the rationals.
  const mpq_class& rational() const;
  /// Residue in [0, p); only valid over a prime field.
  std::uint32_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws DomainError on division by zero.
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;
  Scalar pow(unsigned long e) const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "3", "-1/2" over the rationals; the residue over F_p.
  std::string to_string() const;

 private:
  Scalar(Field f, std::variant<mpq_class, std::uint32_t> v) : field_(f), value_(std::move(v)) {}
  void check_field(const Scalar& o) const;

  Field field_;
  std::variant<mpq_class, std::uint32_t> value_;
};

}  // namespace ore
