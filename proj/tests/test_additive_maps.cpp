#include <doctest.h>

#include "ore/additive_map.hpp"
#include "ore/pi_table.hpp"
#include "ore/ore_text.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace ore;
using namespace ore::testing;

namespace {

const Field Q = Field::rationals();
const RingDescriptor QY = RingDescriptor::poly(Q, 0);

RingElement el(const RingDescriptor& r, const char* text) { return parse_element(r, text); }
Scalar q(long n, long d = 1) { return Scalar::from_rational(Q, mpq_class(n, d)); }

// Every catalog map on a few rings, for the generic property checks.
std::vector<AdditiveMap> catalog() {
  std::vector<AdditiveMap> out;
  const auto P1 = RingDescriptor::poly(Q, 1);
  const auto Qt = RingDescriptor::quotient(Field::prime(3), 2, 3);
  const auto Fn = RingDescriptor::functions(Q, 2, 3);
  const auto O = RingDescriptor::cayley_dickson(Q, 3);
  for (const auto& r : {QY, P1, Qt}) {
    out.push_back(AdditiveMap::identity(r));
    out.push_back(AdditiveMap::zero(r));
    out.push_back(AdditiveMap::derivative(r));
    out.push_back(AdditiveMap::weighted_derivative(r, {Scalar::from_int(r.field, 2), Scalar::from_int(r.field, 1),
                                                       Scalar::from_int(r.field, 1), Scalar::from_int(r.field, 2)}));
    out.push_back(AdditiveMap::scale(r, Scalar::from_int(r.field, 2)));
    out.push_back(AdditiveMap::kernel(AdditiveMap::scale(r, Scalar::from_int(r.field, -1))));
  }
  out.push_back(AdditiveMap::pullback(Fn, {1, 2, 0}));
  out.push_back(AdditiveMap::kernel(AdditiveMap::pullback(Fn, {2, 0, 1})));
  out.push_back(AdditiveMap::inner(RingElement::unit(Fn, 1, 0) + RingElement::unit(Fn, 3, 2)));
  out.push_back(AdditiveMap::inner(RingElement::unit(O, 5)));
  out.push_back(AdditiveMap::combination({{q(2), AdditiveMap::derivative(P1)}, {q(-1, 3), AdditiveMap::scale(P1, q(3))}}));
  out.push_back(AdditiveMap::composition({AdditiveMap::derivative(P1), AdditiveMap::scale(P1, q(2)),
                                          AdditiveMap::inner(RingElement::unit(P1, 1, 1))}));
  return out;
}

}  // namespace

TEST_CASE("apply examples") {
  CHECK(AdditiveMap::derivative(QY)(el(QY, "Y^3")) == el(QY, "3*Y^2"));
  const auto d2 = AdditiveMap::kernel(AdditiveMap::scale(QY, q(2)));
  CHECK(d2(el(QY, "Y")) == el(QY, "Y"));
  const auto F2 = RingDescriptor::functions(Q, 0, 2);
  const auto swap = AdditiveMap::pullback(F2, {1, 0});
  const auto f = el(F2, "3*P0 + 5*P1");
  CHECK(swap(f) == el(F2, "5*P0 + 3*P1"));
  CHECK(AdditiveMap::kernel(swap)(f) == el(F2, "2*P0 - 2*P1"));
  const auto H = RingDescriptor::cayley_dickson(Q, 2);
  CHECK(AdditiveMap::inner(el(H, "e1"))(el(H, "e2")) == el(H, "2*e3"));
  CHECK(AdditiveMap::identity(QY)(ring_one(QY)).is_one());
  CHECK(AdditiveMap::zero(QY)(ring_one(QY)).is_zero());
}

TEST_CASE("catalog maps reject the wrong constructor") {
  const auto F2 = RingDescriptor::functions(Q, 0, 2);
  CHECK_THROWS_AS(AdditiveMap::derivative(F2), DomainError);
  CHECK_THROWS_AS(AdditiveMap::scale(RingDescriptor::cayley_dickson(Q, 1), q(2)), DomainError);
  CHECK_THROWS_AS(AdditiveMap::pullback(QY, {0}), DomainError);
  CHECK_THROWS_AS(AdditiveMap::pullback(F2, {0, 0}), DomainError);
  CHECK_THROWS_AS(AdditiveMap::pullback(F2, {0}), DomainError);
  CHECK_THROWS_AS(AdditiveMap::weighted_derivative(QY, {q(1), q(0)}), DomainError);
  CHECK_THROWS_AS(AdditiveMap::weighted_derivative(RingDescriptor::quotient(Q, 0, 4), {q(1)}), DomainError);
  CHECK_THROWS_AS(AdditiveMap::scale(QY, q(0)), DomainError);
  const auto w = AdditiveMap::weighted_derivative(QY, {q(1), q(5)});
  CHECK(w(el(QY, "Y^2")) == el(QY, "5*Y"));
  CHECK_THROWS_AS(w(el(QY, "Y^3")), DomainError);
  CHECK_THROWS_AS(AdditiveMap::identity(QY)(ring_one(F2)), MismatchError);
  CHECK_THROWS_AS(AdditiveMap::combination({{q(1), AdditiveMap::identity(QY)}, {q(1), AdditiveMap::identity(F2)}}),
                  MismatchError);
}

TEST_CASE("catalog maps are additive and kernel maps are alpha - id") {
  for (const auto& f : catalog()) {
    CAPTURE(f.to_string());
    for (int k = 0; k < 200; ++k) {
      const auto r = random_element(f.ring(), 3), s = random_element(f.ring(), 3);
      REQUIRE(f(r + s) == f(r) + f(s));
    }
    if (f.kind() == MapKind::kernel) {
      for (int k = 0; k < 50; ++k) {
        const auto r = random_element(f.ring(), 3);
        REQUIRE(f(r) == f.children()[0](r) - r);
      }
    }
  }
}

TEST_CASE("inverse maps") {
  const auto Fn = RingDescriptor::functions(Q, 1, 4);
  const auto g = AdditiveMap::pullback(Fn, {1, 2, 3, 0});
  const auto s = AdditiveMap::scale(QY, q(-3, 2));
  for (int k = 0; k < 20; ++k) {
    const auto f = random_element(Fn), p = random_element(QY, 4);
    REQUIRE((*g.inverse())(g(f)) == f);
    REQUIRE(s((*s.inverse())(p)) == p);
  }
  CHECK(!AdditiveMap::derivative(QY).inverse());
}

TEST_CASE("pi table examples") {
  const auto id = AdditiveMap::identity(QY), d = AdditiveMap::derivative(QY);
  const PiTable pi(id, d);
  CHECK(pi(2, 1, el(QY, "Y^2")) == el(QY, "4*Y"));
  CHECK(oracle::pi_words(2, 1, id, d, el(QY, "Y^2")) == el(QY, "4*Y"));
  CHECK(pi(3, 5, el(QY, "Y^2")).is_zero());
  const auto a2 = AdditiveMap::scale(QY, q(2));
  const PiTable pq(a2, AdditiveMap::kernel(a2));
  CHECK(pq(1, 0, el(QY, "Y")) == el(QY, "Y"));
  CHECK(pq(1, 1, el(QY, "Y")) == el(QY, "2*Y"));
  RingElement power = el(QY, "Y + Y^2");
  for (unsigned m = 0; m <= 4; ++m) {
    CHECK(pq(m, m, el(QY, "Y + Y^2")) == power);
    power = a2(power);
  }
  CHECK(pq(3, 0, el(QY, "Y^2")) == el(QY, "27*Y^2"));
}

TEST_CASE("pi recursion against the word oracle") {
  // Non-commuting sigma and delta on a noncommutative ring.
  const auto P2 = RingDescriptor::poly(Q, 2);
  const auto sigma = AdditiveMap::scale(P2, q(3));
  const auto delta = AdditiveMap::combination(
      {{q(1), AdditiveMap::derivative(P2)}, {q(2), AdditiveMap::inner(RingElement::unit(P2, 1, 0))}});
  const PiTable pi(sigma, delta);
  for (unsigned m = 0; m <= 5; ++m) {
    for (unsigned i = 0; i <= m + 1; ++i) {
      for (int k = 0; k < 4; ++k) {
        const auto b = random_element(P2, 3);
        REQUIRE(pi(m, i, b) == oracle::pi_words(m, i, sigma, delta, b));
        REQUIRE(pi_enumerated(m, i, sigma, delta, b) == oracle::pi_words(m, i, sigma, delta, b));
      }
    }
  }
  CHECK(pi.verify_cached());
  CHECK(pi.cached_entries() > 0);
}

TEST_CASE("pi with sigma = id is binomial times delta power") {
  const auto id = AdditiveMap::identity(QY);
  const auto delta = AdditiveMap::kernel(AdditiveMap::scale(QY, q(2)));
  const PiTable pi(id, delta);
  for (unsigned m = 0; m <= 8; ++m) {
    for (unsigned i = 0; i <= m; ++i) {
      const auto b = random_element(QY, 4);
      RingElement expect = b;
      for (unsigned k = 0; k < m - i; ++k) expect = delta(expect);
      mpz_class c;
      mpz_bin_uiui(c.get_mpz_t(), m, i);
      REQUIRE(pi(m, i, b) == expect.scaled(Scalar::from_rational(Q, mpq_class(c))));
      if (m <= 5) REQUIRE(pi(m, i, b) == oracle::pi_words(m, i, id, delta, b));
    }
  }
  CHECK(pi.verify_cached());
}

TEST_CASE("homomorphism and derivation classifiers") {
  CHECK(is_homomorphism(AdditiveMap::identity(QY), 4).holds);
  CHECK(is_derivation(AdditiveMap::zero(QY), 4).holds);
  const auto d = is_derivation(AdditiveMap::derivative(QY), 6);
  CHECK(d.holds);
  CHECK(d.within_caps);
  const auto k2 = is_derivation(AdditiveMap::kernel(AdditiveMap::scale(QY, q(2))), 6);
  CHECK(!k2.holds);
  REQUIRE(k2.tuple.size() == 2);
  CHECK(k2.tuple[0] == el(QY, "Y"));
  CHECK(k2.tuple[1] == el(QY, "Y"));
  CHECK(is_homomorphism(AdditiveMap::scale(QY, q(2)), 4).holds);
  CHECK(!is_homomorphism(AdditiveMap::derivative(QY), 4).holds);
  const auto sigma = AdditiveMap::scale(QY, q(5));
  CHECK(is_sigma_derivation(AdditiveMap::kernel(sigma), sigma, 5).holds);
}

TEST_CASE("kernel derivations are derivations only for alpha = id") {
  const auto F3 = RingDescriptor::functions(Q, 0, 3);
  const std::vector<AdditiveMap> alphas = {
      AdditiveMap::identity(QY), AdditiveMap::scale(QY, q(2)), AdditiveMap::scale(QY, q(-1)),
      AdditiveMap::scale(QY, q(1, 2)), AdditiveMap::identity(F3), AdditiveMap::pullback(F3, {1, 2, 0}),
      AdditiveMap::pullback(F3, {1, 0, 2}), AdditiveMap::pullback(F3, {0, 1, 2})};
  for (const auto& a : alphas) {
    CAPTURE(a.to_string());
    const bool id = is_homomorphism(a, 5).holds && maps_agree(a, AdditiveMap::identity(a.ring()), 5).holds;
    CHECK(is_derivation(AdditiveMap::kernel(a), 5).holds == id);
  }
}

TEST_CASE("kernel linearity") {
  const auto dl = kernel_linearity_check(AdditiveMap::derivative(QY), AdditiveMap::identity(QY), 6);
  REQUIRE(dl.kernel.size() == 1);
  CHECK(dl.kernel[0].is_one());
  CHECK(dl.right.holds);
  CHECK(dl.left.holds);
  CHECK(dl.within_caps);

  const auto a2 = kernel_linearity_check(AdditiveMap::kernel(AdditiveMap::scale(QY, q(2))), AdditiveMap::identity(QY), 6);
  REQUIRE(a2.kernel.size() == 1);
  CHECK(a2.right.holds);
  CHECK(a2.left.holds);

  const auto H = RingDescriptor::cayley_dickson(Q, 2);
  const auto inner = kernel_linearity_check(AdditiveMap::inner(el(H, "e1")), AdditiveMap::identity(H), std::nullopt);
  REQUIRE(inner.kernel.size() == 2);
  CHECK(inner.kernel[0] == el(H, "1"));
  CHECK(inner.kernel[1] == el(H, "e1"));
  CHECK(inner.right.holds);
  CHECK(inner.left.holds);
  CHECK(!inner.within_caps);

  // The derivative is not linear over its kernel when that kernel is not central.
  const auto sw = kernel_linearity_check(AdditiveMap::derivative(RingDescriptor::poly(Q, 1)),
                                         AdditiveMap::identity(RingDescriptor::poly(Q, 1)), 3);
  CHECK(sw.kernel.size() == 2);
  CHECK(sw.right.holds);
}

TEST_CASE("Leibniz defect identity for kernel derivations") {
  CHECK(kernel_derivation_identity_check(AdditiveMap::identity(QY), 5).holds);
  CHECK(kernel_derivation_identity_check(AdditiveMap::scale(QY, q(2)), 6).holds);
  const auto d = AdditiveMap::kernel(AdditiveMap::scale(QY, q(2)));
  const auto Y = el(QY, "Y");
  CHECK(d(Y * Y) - d(Y) * Y - Y * d(Y) == el(QY, "Y^2"));
  CHECK(d(Y) * d(Y) == el(QY, "Y^2"));

  const auto F2 = RingDescriptor::functions(Q, 0, 2);
  const auto swap = AdditiveMap::pullback(F2, {1, 0});
  CHECK(kernel_derivation_identity_check(swap, std::nullopt).holds);
  const auto k = AdditiveMap::kernel(swap);
  const auto r = el(F2, "P0");
  // delta(P0) = P1 - P0, so both sides equal P0 + P1.
  CHECK(k(r * r) - k(r) * r - r * k(r) == el(F2, "P0 + P1"));
  CHECK(k(r) * k(r) == el(F2, "P0 + P1"));
  CHECK_THROWS_AS(kernel_derivation_identity_check(AdditiveMap::identity(RingDescriptor::cayley_dickson(Q, 3)), std::nullopt),
                  DomainError);
}

TEST_CASE("map text") {
  const auto F2 = RingDescriptor::functions(Q, 0, 2);
  CHECK(AdditiveMap::kernel(AdditiveMap::scale(QY, q(-1, 2))).to_string() == "kernel(scale(-1/2))");
  CHECK(AdditiveMap::pullback(F2, {1, 0}).to_string() == "pullback(1, 0)");
  CHECK(AdditiveMap::combination({{q(2), AdditiveMap::derivative(QY)}, {q(-1), AdditiveMap::identity(QY)}}).to_string() ==
        "sum(2*derivative, -1*identity)");
}
