#include "ore/ore_poly.hpp"

#include <algorithm>

#include "ore/config.hpp"

namespace ore {

namespace {

constexpr unsigned kFlagProbeYCap = 3;

Tri from_certificate(const Certificate& c) {
  if (!c.holds) return Tri::no;
  return c.within_caps ? Tri::unknown : Tri::yes;
}

bool structurally_derivation(const AdditiveMap& d) {
  const RingDescriptor& r = d.ring();
  switch (d.kind()) {
    case MapKind::zero: return true;
    case MapKind::derivative: return r.construction == Construction::poly;
    case MapKind::inner: return r.is_associative();
    default: return d.structurally_zero();
  }
}

}  // namespace

OreRing::OreRing(AdditiveMap sigma, AdditiveMap delta)
    : sigma_(std::move(sigma)), delta_(std::move(delta)), pi_(sigma_, delta_) {}

std::shared_ptr<const OreRing> OreRing::create(AdditiveMap sigma, AdditiveMap delta) {
  if (!(sigma.ring() == delta.ring())) throw MismatchError("sigma and delta act on different rings");
  const RingDescriptor& r = sigma.ring();
  if (!sigma(ring_one(r)).is_one()) throw DomainError("sigma(1) must equal 1, got " + to_text(sigma(ring_one(r))));
  if (!delta(ring_one(r)).is_zero()) throw DomainError("delta(1) must equal 0, got " + to_text(delta(ring_one(r))));

  std::shared_ptr<OreRing> h(new OreRing(std::move(sigma), std::move(delta)));
  const std::optional<unsigned> cap = kFlagProbeYCap;
  const AdditiveMap id = AdditiveMap::identity(r);

  h->sigma_identity_ = h->sigma_.structurally_identity() ? Tri::yes : from_certificate(maps_agree(h->sigma_, id, cap));
  h->delta_zero_ = h->delta_.structurally_zero() ? Tri::yes
                                                 : from_certificate(maps_agree(h->delta_, AdditiveMap::zero(r), cap));
  h->sigma_endomorphism_ = h->sigma_identity_ == Tri::yes ? Tri::yes : from_certificate(is_homomorphism(h->sigma_, cap));
  const bool structural = h->sigma_identity_ == Tri::yes && structurally_derivation(h->delta_);
  h->delta_derivation_ = structural ? Tri::yes : from_certificate(is_sigma_derivation(h->delta_, h->sigma_, cap));
  const KernelLinearity kl = kernel_linearity_check(h->delta_, h->sigma_, cap);
  h->right_linear_ = from_certificate(kl.right);
  h->left_linear_ = from_certificate(kl.left);
  return h;
}

std::string OreRing::to_string() const {
  return ring().to_string() + "[X; " + sigma_.to_string() + ", " + delta_.to_string() + "]";
}

OrePoly::OrePoly(OreHandle h) : h_(std::move(h)) {
  if (!h_) throw DomainError("null Ore handle");
}

OrePoly::OrePoly(OreHandle h, std::vector<RingElement> coeffs) : h_(std::move(h)), coeffs_(std::move(coeffs)) {
  if (!h_) throw DomainError("null Ore handle");
  for (const auto& c : coeffs_) {
    if (!(c.ring() == h_->ring())) throw MismatchError("coefficient ring does not match the Ore handle");
  }
  canonicalize();
}

OrePoly OrePoly::constant(OreHandle h, const RingElement& a) { return OrePoly(std::move(h), {a}); }

OrePoly OrePoly::monomial(OreHandle h, const RingElement& a, unsigned n) {
  std::vector<RingElement> c(n + 1, RingElement::zero(h->ring()));
  c[n] = a;
  return OrePoly(std::move(h), std::move(c));
}

OrePoly OrePoly::x_power(OreHandle h, unsigned n) {
  const RingElement one = ring_one(h->ring());
  return monomial(std::move(h), one, n);
}

OrePoly OrePoly::one(OreHandle h) { return x_power(std::move(h), 0); }

RingElement OrePoly::coeff(std::size_t n) const {
  return n < coeffs_.size() ? coeffs_[n] : RingElement::zero(h_->ring());
}

void OrePoly::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void OrePoly::check_same(const OrePoly& o) const {
  if (h_ != o.h_ && !(h_->to_string() == o.h_->to_string())) throw MismatchError("polynomials from different Ore rings");
}

OrePoly OrePoly::operator-() const {
  OrePoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

OrePoly& OrePoly::operator+=(const OrePoly& o) {
  check_same(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), RingElement::zero(h_->ring()));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  canonicalize();
  return *this;
}

OrePoly& OrePoly::operator-=(const OrePoly& o) {
  check_same(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), RingElement::zero(h_->ring()));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  canonicalize();
  return *this;
}

OrePoly OrePoly::scaled(const Scalar& s) const {
  std::vector<RingElement> c;
  for (const auto& x : coeffs_) c.push_back(x.scaled(s));
  return OrePoly(h_, std::move(c));
}

bool operator==(const OrePoly& a, const OrePoly& b) {
  a.check_same(b);
  return a.coeffs_ == b.coeffs_;
}

namespace {

OrePoly mul_with(const OrePoly& f, const OrePoly& g, bool enumerate) {
  const OreHandle& h = f.handle();
  const RingDescriptor& r = h->ring();
  if (f.is_zero() || g.is_zero()) return OrePoly(h);
  const std::size_t df = f.coeffs().size() - 1, dg = g.coeffs().size() - 1;
  std::vector<RingElement> out(df + dg + 1, RingElement::zero(r));
  for (std::size_t m = 0; m <= df; ++m) {
    const RingElement& a = f.coeffs()[m];
    if (a.is_zero()) continue;
    for (std::size_t n = 0; n <= dg; ++n) {
      const RingElement& b = g.coeffs()[n];
      if (b.is_zero()) continue;
      for (std::size_t i = 0; i <= m; ++i) {
        const auto mm = static_cast<unsigned>(m), ii = static_cast<unsigned>(i);
        const RingElement p = enumerate ? pi_enumerated(mm, ii, h->sigma(), h->delta(), b) : h->pi()(mm, ii, b);
        if (!p.is_zero()) out[i + n] += a * p;
      }
    }
  }
  return OrePoly(h, std::move(out));
}

}  // namespace

OrePoly ore_mul(const OrePoly& f, const OrePoly& g) {
  f.check_same(g);
  OrePoly out = mul_with(f, g, false);
#if ORE_DEBUG_CHECKS
  if (f.coeffs().size() + g.coeffs().size() <= 7 && !(mul_with(f, g, true) == out)) {
    throw Error("product disagrees with the interleaving enumeration");
  }
#endif
  return out;
}

OrePoly operator*(const OrePoly& a, const OrePoly& b) { return ore_mul(a, b); }

Degree degree(const OrePoly& f) {
  return f.is_zero() ? Degree::minus_infinity() : Degree(static_cast<unsigned>(f.coeffs().size() - 1));
}

RingElement leading_coeff(const OrePoly& f) {
  return f.is_zero() ? RingElement::zero(f.ring()) : f.coeffs().back();
}

bool is_monic(const OrePoly& f) { return !f.is_zero() && f.coeffs().back().is_one(); }

Division euclid_divide(const OrePoly& a, const OrePoly& b) {
  a.check_same(b);
  if (!is_monic(b)) throw DomainError("euclid_divide needs a monic divisor, got leading coefficient " + to_text(leading_coeff(b)));
  const OreHandle& h = a.handle();
  const unsigned n = degree(b).value();
  OrePoly q(h), r = a;
  // Each step cancels the leading term: (c X^(m-n)) b has leading coefficient c.
  while (!r.is_zero() && degree(r).value() >= n) {
    const unsigned m = degree(r).value();
    const OrePoly t = OrePoly::monomial(h, leading_coeff(r), m - n);
    q += t;
    r -= t * b;
    if (!r.is_zero() && degree(r).value() >= m) throw Error("division step failed to lower the degree");
  }
#if ORE_DEBUG_CHECKS
  if (!(q * b + r == a)) throw Error("division round-trip failed");
#endif
  return Division{std::move(q), std::move(r)};
}

namespace {

Scalar binomial(Field f, unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Scalar::from_rational(f, mpq_class(b));
}

}  // namespace

OrePoly from_right_coeffs(const OreHandle& h, const std::vector<RingElement>& c) {
  OrePoly out(h);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    out += OrePoly::x_power(h, static_cast<unsigned>(i)) * OrePoly::constant(h, c[i]);
  }
  return out;
}

std::vector<RingElement> to_right_coeffs(const OrePoly& f) {
  const OreHandle& h = f.handle();
  const RingDescriptor& r = h->ring();
  std::vector<RingElement> c(f.coeffs().size(), RingElement::zero(r));
  if (h->sigma().structurally_identity()) {
    // r X^n = sum_i (-1)^i C(n,i) X^(n-i) delta^i(r)
    for (std::size_t n = 0; n < f.coeffs().size(); ++n) {
      RingElement d = f.coeffs()[n];
      for (unsigned i = 0; i <= n && !d.is_zero(); ++i) {
        Scalar s = binomial(r.field, static_cast<unsigned>(n), i);
        if (i % 2 == 1) s = -s;
        c[n - i] += d.scaled(s);
        d = h->delta()(d);
      }
    }
  } else {
    const auto inv = h->sigma().inverse();
    if (!inv) throw DomainError("right coefficients need sigma = identity or an invertible catalog sigma, got " + h->sigma().to_string());
    // Triangular solve: the leading coefficient of X^N c is sigma^N(c).
    OrePoly rest = f;
    while (!rest.is_zero()) {
      const unsigned top = degree(rest).value();
      RingElement cn = leading_coeff(rest);
      for (unsigned k = 0; k < top; ++k) cn = (*inv)(cn);
      c[top] += cn;
      rest -= OrePoly::x_power(h, top) * OrePoly::constant(h, cn);
      if (!rest.is_zero() && degree(rest).value() >= top) throw DomainError("sigma inverse failed on the leading coefficient");
    }
  }
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  if (!(from_right_coeffs(h, c) == f)) throw Error("right-coefficient re-expansion failed");
  return c;
}

namespace {

std::size_t term_count(const RingElement& a) {
  return static_cast<std::size_t>(
      std::count_if(a.coords().begin(), a.coords().end(), [](const Scalar& s) { return !s.is_zero(); }));
}

std::string x_symbol(std::size_t n) { return n == 1 ? "X" : "X^" + std::to_string(n); }

void append_term(std::string& out, std::string term) {
  if (out.empty()) {
    out = std::move(term);
  } else if (term[0] == '-') {
    out += " - " + term.substr(1);
  } else {
    out += " + " + term;
  }
}

}  // namespace

std::string to_text(const OrePoly& f) {
  std::string out;
  for (std::size_t n = 0; n < f.coeffs().size(); ++n) {
    const RingElement& c = f.coeffs()[n];
    if (c.is_zero()) continue;
    if (n == 0) {
      out = to_text(c);
      continue;
    }
    std::string term;
    if (c.is_one()) {
      term = x_symbol(n);
    } else if ((-c).is_one()) {
      term = "-" + x_symbol(n);
    } else if (term_count(c) == 1) {
      term = to_text(c) + "*" + x_symbol(n);
    } else {
      term = "(" + to_text(c) + ")*" + x_symbol(n);
    }
    append_term(out, std::move(term));
  }
  return out.empty() ? "0" : out;
}

std::string to_right_text(const OrePoly& f) {
  const auto c = to_right_coeffs(f);
  std::string out;
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (c[n].is_zero()) continue;
    if (n == 0) {
      out = to_text(c[n]);
    } else if (c[n].is_one()) {
      append_term(out, x_symbol(n));
    } else {
      append_term(out, x_symbol(n) + "*(" + to_text(c[n]) + ")");
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace ore
