#include "ore/scalar.hpp"

namespace ore {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t residue_of(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= kMaxModulus) throw DomainError("modulus " + std::to_string(p) + " exceeds 2^31");
  if (!is_prime(p)) throw DomainError("modulus not prime: " + std::to_string(p));
  return Field(static_cast<std::uint32_t>(p));
}

std::string Field::to_string() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
}

Scalar Scalar::zero(Field f) { return from_int(f, 0); }
Scalar Scalar::one(Field f) { return from_int(f, 1); }

Scalar Scalar::from_int(Field f, long long v) {
  if (f.is_rational()) return Scalar(f, mpq_class(mpz_class(std::to_string(v))));
  const long long p = f.characteristic();
  long long r = v % p;
  if (r < 0) r += p;
  return Scalar(f, static_cast<std::uint32_t>(r));
}

Scalar Scalar::from_rational(Field f, const mpq_class& q) {
  if (f.is_rational()) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(f, std::move(c));
  }
  const std::uint32_t p = f.characteristic();
  const std::uint32_t den = residue_of(q.get_den(), p);
  if (den == 0) throw DomainError("denominator vanishes modulo " + std::to_string(p));
  const std::uint32_t num = residue_of(q.get_num(), p);
  const std::uint64_t inv = mod_pow(den, p - 2, p);
  return Scalar(f, static_cast<std::uint32_t>(num * inv % p));
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::uint32_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint32_t>(value_) == 1 % field_.characteristic();
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw DomainError("rational() on a prime-field scalar");
  return std::get<mpq_class>(value_);
}

std::uint32_t Scalar::residue() const {
  if (field_.is_rational()) throw DomainError("residue() on a rational scalar");
  return std::get<std::uint32_t>(value_);
}

void Scalar::check_field(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    throw MismatchError("scalar field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
  }
}

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
  const std::uint32_t p = field_.characteristic();
  const std::uint32_t r = std::get<std::uint32_t>(value_);
  return Scalar(field_, r == 0 ? 0u : p - r);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_field(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  } else {
    const std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} + std::get<std::uint32_t>(o.value_);
    std::get<std::uint32_t>(value_) = static_cast<std::uint32_t>(s % field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_field(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  } else {
    const std::uint64_t p = field_.characteristic();
    const std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} + p - std::get<std::uint32_t>(o.value_);
    std::get<std::uint32_t>(value_) = static_cast<std::uint32_t>(s % p);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_field(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  } else {
    const std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} * std::get<std::uint32_t>(o.value_);
    std::get<std::uint32_t>(value_) = static_cast<std::uint32_t>(s % field_.characteristic());
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (field_.is_rational()) return Scalar(field_, mpq_class(1 / std::get<mpq_class>(value_)));
  const std::uint32_t p = field_.characteristic();
  return Scalar(field_, mod_pow(std::get<std::uint32_t>(value_), p - 2, p));
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_field(o);
  return *this *= o.inverse();
}

Scalar Scalar::pow(unsigned long e) const {
  Scalar result = one(field_);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint32_t>(value_));
}

}  // namespace ore
