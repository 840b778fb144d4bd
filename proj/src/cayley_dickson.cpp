#include "ore/cayley_dickson.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace ore {

namespace {

using SignTable = std::vector<std::int8_t>;

int conj_sign(std::size_t i) { return i == 0 ? 1 : -1; }

// Unit multiplication signs for every level, derived from the doubling rule.
const std::array<SignTable, kMaxCayleyDicksonLevel + 1>& sign_tables() {
  static const auto tables = [] {
    std::array<SignTable, kMaxCayleyDicksonLevel + 1> t;
    t[0] = {1};
    for (unsigned k = 1; k <= kMaxCayleyDicksonLevel; ++k) {
      const std::size_t n = std::size_t{1} << k;
      const std::size_t h = n / 2;
      const SignTable& prev = t[k - 1];
      auto s = [&](std::size_t i, std::size_t j) { return prev[i * h + j]; };
      SignTable cur(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          int sign = 0;
          if (i < h && j < h) {
            sign = s(i, j);  // (a,0)(c,0) = (ac, 0)
          } else if (i < h) {
            sign = s(j - h, i);  // (a,0)(0,d) = (0, d a)
          } else if (j < h) {
            sign = s(i - h, j) * conj_sign(j);  // (0,b)(c,0) = (0, b conj(c))
          } else {
            sign = -conj_sign(j - h) * s(j - h, i - h);  // (0,b)(0,d) = (-conj(d) b, 0)
          }
          cur[i * n + j] = static_cast<std::int8_t>(sign);
        }
      }
      t[k] = std::move(cur);
    }
    return t;
  }();
  return tables;
}

void check_level(unsigned level) {
  if (level > kMaxCayleyDicksonLevel) {
    throw DomainError("Cayley-Dickson level " + std::to_string(level) + " exceeds " +
                      std::to_string(kMaxCayleyDicksonLevel));
  }
}

}  // namespace

namespace cd_detail {

int unit_sign(unsigned level, std::size_t i, std::size_t j) {
  check_level(level);
  const std::size_t n = std::size_t{1} << level;
  return sign_tables()[level][i * n + j];
}

void mul_accumulate(unsigned level, std::span<const Scalar> x, std::span<const Scalar> y, std::span<Scalar> out) {
  const std::size_t n = std::size_t{1} << level;
  const SignTable& table = sign_tables()[level];
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Scalar t = x[i] * y[j];
      if (table[i * n + j] > 0) {
        out[i ^ j] += t;
      } else {
        out[i ^ j] -= t;
      }
    }
  }
}

}  // namespace cd_detail

CDElement::CDElement(Field f, unsigned level) : field_(f), level_(level) {
  check_level(level);
  coords_.assign(std::size_t{1} << level, Scalar::zero(f));
}

CDElement::CDElement(unsigned level, std::vector<Scalar> coords) : level_(level), coords_(std::move(coords)) {
  check_level(level);
  if (coords_.size() != (std::size_t{1} << level)) {
    throw DomainError("Cayley-Dickson level " + std::to_string(level) + " needs " +
                      std::to_string(std::size_t{1} << level) + " coordinates, got " +
                      std::to_string(coords_.size()));
  }
  field_ = coords_.front().field();
  for (const auto& c : coords_) {
    if (!(c.field() == field_)) throw MismatchError("mixed scalar fields in Cayley-Dickson element");
  }
}

CDElement CDElement::unit(Field f, unsigned level, std::size_t index) {
  CDElement e(f, level);
  if (index >= e.size()) throw DomainError("unit index " + std::to_string(index) + " out of range");
  e.coords_[index] = Scalar::one(f);
  return e;
}

CDElement CDElement::scalar(unsigned level, const Scalar& s) {
  CDElement e(s.field(), level);
  e.coords_[0] = s;
  return e;
}

bool CDElement::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

void CDElement::check_compatible(const CDElement& o) const {
  if (level_ != o.level_) {
    throw MismatchError("Cayley-Dickson level mismatch: " + std::to_string(level_) + " vs " +
                        std::to_string(o.level_));
  }
  if (!(field_ == o.field_)) throw MismatchError("Cayley-Dickson field mismatch");
}

CDElement CDElement::operator-() const {
  CDElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

CDElement& CDElement::operator+=(const CDElement& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

CDElement& CDElement::operator-=(const CDElement& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

bool operator==(const CDElement& a, const CDElement& b) {
  return a.level_ == b.level_ && a.field_ == b.field_ && a.coords_ == b.coords_;
}

CDElement cd_mul(const CDElement& x, const CDElement& y) {
  if (x.level() != y.level()) {
    throw MismatchError("Cayley-Dickson level mismatch: " + std::to_string(x.level()) + " vs " +
                        std::to_string(y.level()));
  }
  if (!(x.field() == y.field())) throw MismatchError("Cayley-Dickson field mismatch");
  std::vector<Scalar> out(x.size(), Scalar::zero(x.field()));
  cd_detail::mul_accumulate(x.level(), x.coords(), y.coords(), out);
  return CDElement(x.level(), std::move(out));
}

CDElement cd_conj(const CDElement& x) {
  std::vector<Scalar> out(x.coords().begin(), x.coords().end());
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
  return CDElement(x.level(), std::move(out));
}

Scalar cd_norm(const CDElement& x) { return cd_mul(x, cd_conj(x))[0]; }

}  // namespace ore
