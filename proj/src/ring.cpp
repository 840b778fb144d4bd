#include "ore/ring.hpp"

#include <algorithm>

namespace ore {

std::string to_string(Construction c) {
  switch (c) {
    case Construction::cayley_dickson: return "cayley_dickson";
    case Construction::poly: return "poly";
    case Construction::quotient: return "quotient";
    case Construction::functions: return "functions";
  }
  return "?";
}

RingDescriptor RingDescriptor::cayley_dickson(Field f, unsigned level) {
  if (level > kMaxCayleyDicksonLevel) throw DomainError("Cayley-Dickson level exceeds 5");
  return RingDescriptor{f, Construction::cayley_dickson, level, 0, 0};
}

RingDescriptor RingDescriptor::poly(Field f, unsigned level) {
  if (level > kMaxCayleyDicksonLevel) throw DomainError("Cayley-Dickson level exceeds 5");
  return RingDescriptor{f, Construction::poly, level, 0, 0};
}

RingDescriptor RingDescriptor::quotient(Field f, unsigned level, unsigned m) {
  if (level > kMaxCayleyDicksonLevel) throw DomainError("Cayley-Dickson level exceeds 5");
  if (m < 1) throw DomainError("quotient modulus exponent must be at least 1");
  return RingDescriptor{f, Construction::quotient, level, m, 0};
}

RingDescriptor RingDescriptor::functions(Field f, unsigned level, unsigned n) {
  if (level > kMaxCayleyDicksonLevel) throw DomainError("Cayley-Dickson level exceeds 5");
  if (n < 1) throw DomainError("function index set must have at least one point");
  return RingDescriptor{f, Construction::functions, level, 0, n};
}

std::optional<std::size_t> RingDescriptor::slot_count() const {
  switch (construction) {
    case Construction::cayley_dickson: return 1;
    case Construction::poly: return std::nullopt;
    case Construction::quotient: return modulus_exponent;
    case Construction::functions: return points;
  }
  return std::nullopt;
}

std::size_t RingDescriptor::capped_slots(std::optional<unsigned> y_cap) const {
  if (auto n = slot_count()) return *n;
  if (!y_cap) throw CapsError("basis enumeration over " + to_string() + " requires a Y-degree cap");
  return std::size_t{*y_cap} + 1;
}

std::string RingDescriptor::to_string() const {
  std::string k = "CD" + std::to_string(level) + "(" + field.to_string() + ")";
  switch (construction) {
    case Construction::cayley_dickson: return k;
    case Construction::poly: return k + "[Y]";
    case Construction::quotient: return k + "[Y]/(Y^" + std::to_string(modulus_exponent) + ")";
    case Construction::functions: return "Fun({0.." + std::to_string(points - 1) + "}, " + k + ")";
  }
  return k;
}

RingElement::RingElement(RingDescriptor ring, std::vector<Scalar> coords)
    : ring_(ring), coords_(std::move(coords)) {
  for (const auto& c : coords_) {
    if (!(c.field() == ring_.field)) throw MismatchError("coordinate field does not match ring " + ring_.to_string());
  }
  canonicalize();
}

void RingElement::canonicalize() {
  const std::size_t u = ring_.unit_count();
  if (auto n = ring_.slot_count()) {
    const std::size_t want = *n * u;
    if (ring_.construction == Construction::quotient) {
      if (coords_.size() > want) coords_.resize(want, Scalar::zero(ring_.field));
    } else {
      if (coords_.size() > want) {
        for (std::size_t i = want; i < coords_.size(); ++i) {
          if (!coords_[i].is_zero()) throw DomainError("payload exceeds ring " + ring_.to_string());
        }
      }
      coords_.resize(want, Scalar::zero(ring_.field));
      return;
    }
  }
  // poly / quotient: pad to whole slots, then drop trailing zero slots.
  const std::size_t rem = coords_.size() % u;
  if (rem != 0) coords_.resize(coords_.size() + (u - rem), Scalar::zero(ring_.field));
  while (!coords_.empty()) {
    bool zero_slot = true;
    for (std::size_t i = coords_.size() - u; i < coords_.size(); ++i) {
      if (!coords_[i].is_zero()) {
        zero_slot = false;
        break;
      }
    }
    if (!zero_slot) break;
    coords_.resize(coords_.size() - u, Scalar());
  }
}

RingElement RingElement::zero(const RingDescriptor& r) { return RingElement(r, {}); }

RingElement RingElement::one(const RingDescriptor& r) { return from_scalar(r, Scalar::one(r.field)); }

RingElement RingElement::from_scalar(const RingDescriptor& r, const Scalar& s) {
  return constant(r, CDElement::scalar(r.level, s));
}

RingElement RingElement::constant(const RingDescriptor& r, const CDElement& k) {
  if (k.level() != r.level || !(k.field() == r.field)) throw MismatchError("constant does not match ring " + r.to_string());
  const std::size_t u = r.unit_count();
  const std::size_t copies = r.construction == Construction::functions ? r.points : 1;
  std::vector<Scalar> c;
  c.reserve(copies * u);
  for (std::size_t s = 0; s < copies; ++s) c.insert(c.end(), k.coords().begin(), k.coords().end());
  return RingElement(r, std::move(c));
}

RingElement RingElement::unit(const RingDescriptor& r, std::size_t unit, std::size_t slot) {
  if (unit >= r.unit_count()) throw DomainError("unit index out of range");
  if (auto n = r.slot_count(); n && slot >= *n) throw DomainError("slot index out of range for " + r.to_string());
  return basis(r, slot * r.unit_count() + unit);
}

RingElement RingElement::basis(const RingDescriptor& r, std::size_t flat_index) {
  if (auto n = r.slot_count(); n && flat_index >= *n * r.unit_count()) {
    throw DomainError("basis index out of range for " + r.to_string());
  }
  std::vector<Scalar> c(flat_index + 1, Scalar::zero(r.field));
  c[flat_index] = Scalar::one(r.field);
  return RingElement(r, std::move(c));
}

CDElement RingElement::slot(std::size_t s) const {
  const std::size_t u = ring_.unit_count();
  if ((s + 1) * u > coords_.size()) return CDElement(ring_.field, ring_.level);
  return CDElement(ring_.level, std::vector<Scalar>(coords_.begin() + s * u, coords_.begin() + (s + 1) * u));
}

Scalar RingElement::coord(std::size_t flat_index) const {
  return flat_index < coords_.size() ? coords_[flat_index] : Scalar::zero(ring_.field);
}

bool RingElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool RingElement::is_one() const { return *this == one(ring_); }

long RingElement::y_degree() const { return static_cast<long>(slot_count()) - 1; }

std::optional<std::vector<Scalar>> RingElement::coords_within(std::size_t dim) const {
  std::vector<Scalar> out(dim, Scalar::zero(ring_.field));
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero()) continue;
    if (i >= dim) return std::nullopt;
    out[i] = coords_[i];
  }
  return out;
}

void RingElement::check_same_ring(const RingElement& o) const {
  if (!(ring_ == o.ring_)) {
    throw MismatchError("ring descriptor mismatch: " + ring_.to_string() + " vs " + o.ring_.to_string());
  }
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

RingElement& RingElement::operator+=(const RingElement& o) {
  check_same_ring(o);
  if (coords_.size() < o.coords_.size()) coords_.resize(o.coords_.size(), Scalar::zero(ring_.field));
  for (std::size_t i = 0; i < o.coords_.size(); ++i) coords_[i] += o.coords_[i];
  canonicalize();
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  check_same_ring(o);
  if (coords_.size() < o.coords_.size()) coords_.resize(o.coords_.size(), Scalar::zero(ring_.field));
  for (std::size_t i = 0; i < o.coords_.size(); ++i) coords_[i] -= o.coords_[i];
  canonicalize();
  return *this;
}

RingElement RingElement::scaled(const Scalar& s) const {
  RingElement r = *this;
  for (auto& c : r.coords_) c *= s;
  r.canonicalize();
  return r;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  a.check_same_ring(b);
  const RingDescriptor& r = a.ring_;
  const std::size_t u = r.unit_count();
  const std::size_t sa = a.slot_count();
  const std::size_t sb = b.slot_count();
  std::vector<Scalar> out;
  if (r.construction == Construction::cayley_dickson || r.construction == Construction::functions) {
    out.assign(a.coords_.size(), Scalar::zero(r.field));
    for (std::size_t s = 0; s < sa; ++s) {
      cd_detail::mul_accumulate(r.level, std::span(a.coords_).subspan(s * u, u), std::span(b.coords_).subspan(s * u, u),
                                std::span(out).subspan(s * u, u));
    }
    return RingElement(r, std::move(out));
  }
  if (sa == 0 || sb == 0) return RingElement::zero(r);
  std::size_t slots = sa + sb - 1;
  if (r.construction == Construction::quotient) slots = std::min<std::size_t>(slots, r.modulus_exponent);
  out.assign(slots * u, Scalar::zero(r.field));
  for (std::size_t i = 0; i < sa; ++i) {
    auto ai = std::span(a.coords_).subspan(i * u, u);
    if (std::all_of(ai.begin(), ai.end(), [](const Scalar& s) { return s.is_zero(); })) continue;
    for (std::size_t j = 0; j < sb && i + j < slots; ++j) {
      cd_detail::mul_accumulate(r.level, ai, std::span(b.coords_).subspan(j * u, u),
                                std::span(out).subspan((i + j) * u, u));
    }
  }
  return RingElement(r, std::move(out));
}

bool operator==(const RingElement& a, const RingElement& b) { return a.ring_ == b.ring_ && a.coords_ == b.coords_; }

RingElement ring_add(const RingElement& a, const RingElement& b) { return a + b; }
RingElement ring_neg(const RingElement& a) { return -a; }
RingElement ring_mul(const RingElement& a, const RingElement& b) { return a * b; }
RingElement ring_one(const RingDescriptor& r) { return RingElement::one(r); }
RingElement ring_zero(const RingDescriptor& r) { return RingElement::zero(r); }
bool ring_eq(const RingElement& a, const RingElement& b) { return a == b; }

std::vector<RingElement> capped_basis(const RingDescriptor& r, std::optional<unsigned> y_cap) {
  const std::size_t dim = r.capped_dimension(y_cap);
  std::vector<RingElement> out;
  out.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) out.push_back(RingElement::basis(r, i));
  return out;
}

RingElement from_coords(const RingDescriptor& r, std::span<const Scalar> coords) {
  return RingElement(r, std::vector<Scalar>(coords.begin(), coords.end()));
}

std::string basis_symbol(const RingDescriptor& r, std::size_t flat_index) {
  const std::size_t u = r.unit_count();
  const std::size_t unit = flat_index % u;
  const std::size_t slot = flat_index / u;
  std::string out;
  if (unit != 0) out = "e" + std::to_string(unit);
  std::string slot_part;
  if (r.construction == Construction::functions) {
    slot_part = "P" + std::to_string(slot);
  } else if (r.has_variable() && slot > 0) {
    slot_part = slot == 1 ? std::string("Y") : "Y^" + std::to_string(slot);
  }
  if (!slot_part.empty()) out = out.empty() ? slot_part : out + "*" + slot_part;
  return out.empty() ? std::string("1") : out;
}

namespace {

void append_term(std::string& out, const Scalar& c, const std::string& symbol) {
  std::string coeff = c.to_string();
  bool negative = !coeff.empty() && coeff[0] == '-';
  if (negative) coeff.erase(0, 1);
  std::string body;
  if (symbol == "1") {
    body = coeff;
  } else if (coeff == "1") {
    body = symbol;
  } else {
    body = coeff + "*" + symbol;
  }
  if (out.empty()) {
    out = negative ? "-" + body : body;
  } else {
    out += negative ? " - " : " + ";
    out += body;
  }
}

}  // namespace

std::string to_text(const RingElement& r) {
  std::string out;
  auto coords = r.coords();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    append_term(out, coords[i], basis_symbol(r.ring(), i));
  }
  return out.empty() ? std::string("0") : out;
}

}  // namespace ore
