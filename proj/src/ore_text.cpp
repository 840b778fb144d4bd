#include "ore/ore_text.hpp"

#include <cctype>
#include <string>

namespace ore {

namespace {

class Parser {
 public:
  Parser(OreHandle h, std::string_view s, TextOrigin origin, bool allow_x)
      : h_(std::move(h)), s_(s), origin_(origin), allow_x_(allow_x) {}

  OrePoly parse() {
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    OrePoly v = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    throw ParseError(origin_.line, origin_.column + at, msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }

  unsigned small_int(std::size_t limit, const char* what) {
    const std::size_t at = pos_;
    const std::string d = digits();
    if (d.size() > 6 || std::stoul(d) > limit) fail_at(at, std::string(what) + " out of range: " + d);
    return static_cast<unsigned>(std::stoul(d));
  }

  OrePoly constant(const RingElement& a) { return OrePoly::constant(h_, a); }

  OrePoly expr() {
    OrePoly v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  OrePoly term() {
    OrePoly v = unary();
    while (accept('*')) v = v * unary();
    return v;
  }

  OrePoly unary() {
    if (accept('-')) return -unary();
    return power();
  }

  OrePoly power() {
    OrePoly base = atom();
    if (!accept('^')) return base;
    skip();
    const unsigned n = small_int(4096, "exponent");
    OrePoly out = OrePoly::one(h_);
    for (unsigned k = 0; k < n; ++k) out = out * base;
    return out;
  }

  OrePoly atom() {
    skip();
    if (pos_ == s_.size()) fail("unexpected end of expression");
    const RingDescriptor& r = h_->ring();
    const char c = s_[pos_];
    const std::size_t at = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(digits());
      mpz_class den(1);
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        den = mpz_class(digits());
        if (den == 0) fail_at(at, "zero denominator");
      }
      try {
        return constant(RingElement::from_scalar(r, Scalar::from_rational(r.field, mpq_class(num, den))));
      } catch (const DomainError& e) {
        fail_at(at, e.what());
      }
    }
    if (c == '(') {
      ++pos_;
      OrePoly v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    ++pos_;
    switch (c) {
      case 'X':
        if (!allow_x_) fail_at(at, "X is not allowed in a coefficient");
        return OrePoly::x_power(h_, 1);
      case 'Y':
        if (!r.has_variable()) fail_at(at, "Y needs a ring with variable Y, got " + r.to_string());
        return constant(RingElement::unit(r, 0, 1));
      case 'e': {
        const unsigned k = small_int(1u << kMaxCayleyDicksonLevel, "unit index");
        if (k >= r.unit_count()) fail_at(at, "unit e" + std::to_string(k) + " does not exist at level " + std::to_string(r.level));
        return constant(RingElement::constant(r, CDElement::unit(r.field, r.level, k)));
      }
      case 'P': {
        if (r.construction != Construction::functions) fail_at(at, "P<k> needs a function ring, got " + r.to_string());
        const unsigned k = small_int(1u << 20, "point index");
        if (k >= r.points) fail_at(at, "point P" + std::to_string(k) + " does not exist");
        return constant(RingElement::unit(r, 0, k));
      }
      default: fail_at(at, std::string("unexpected '") + c + "'");
    }
  }

  OreHandle h_;
  std::string_view s_;
  TextOrigin origin_;
  bool allow_x_;
  std::size_t pos_ = 0;
};

}  // namespace

OrePoly parse_poly(const OreHandle& h, std::string_view text, TextOrigin origin) {
  return Parser(h, text, origin, true).parse();
}

RingElement parse_element(const RingDescriptor& r, std::string_view text, TextOrigin origin) {
  const OreHandle h = OreRing::create(AdditiveMap::identity(r), AdditiveMap::zero(r));
  return Parser(h, text, origin, false).parse().coeff(0);
}

}  // namespace ore
