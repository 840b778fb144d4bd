#include <doctest.h>

#include "ore/linalg.hpp"
#include "ore/ring_structure.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace ore;
using namespace ore::testing;

namespace {

const Field Q = Field::rationals();

CDElement e(unsigned level, std::size_t i, Field f = Q) { return CDElement::unit(f, level, i); }

std::vector<RingDescriptor> all_constructors() {
  std::vector<RingDescriptor> out;
  for (Field f : {Q, Field::prime(2), Field::prime(5)}) {
    for (unsigned level : {0u, 1u, 2u, 3u}) {
      out.push_back(RingDescriptor::cayley_dickson(f, level));
      out.push_back(RingDescriptor::poly(f, level));
      out.push_back(RingDescriptor::quotient(f, level, 3));
      out.push_back(RingDescriptor::functions(f, level, 3));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("scalar arithmetic is exact and field-checked") {
  const Scalar half = Scalar::from_rational(Q, mpq_class(2, 4));
  CHECK(half.rational().get_num() == 1);
  CHECK(half.rational().get_den() == 2);
  CHECK((-half).to_string() == "-1/2");
  CHECK(Scalar::from_rational(Q, mpq_class(3, -6)).rational().get_den() == 2);

  const Field F7 = Field::prime(7);
  CHECK(Scalar::from_int(F7, -1).residue() == 6);
  CHECK((Scalar::from_int(F7, 3) * Scalar::from_int(F7, 5)).residue() == 1);
  CHECK(Scalar::from_int(F7, 3).inverse().residue() == 5);
  CHECK(Scalar::from_rational(F7, mpq_class(1, 2)).residue() == 4);
  CHECK_THROWS_AS(Scalar::from_rational(F7, mpq_class(1, 7)), DomainError);
  CHECK_THROWS_AS(Scalar::zero(F7).inverse(), DomainError);
  CHECK_THROWS_AS(Scalar::one(Q) + Scalar::one(F7), MismatchError);
  CHECK_THROWS_AS(Field::prime(15), DomainError);
  CHECK_THROWS_AS(Field::prime(1), DomainError);
  CHECK(Field::prime(2147483647).characteristic() == 2147483647u);
  CHECK_THROWS_AS(Field::prime(2147483659ull), DomainError);
  // residue products must not overflow near the modulus bound
  const Field big = Field::prime(2147483647);
  CHECK((Scalar::from_int(big, -1) * Scalar::from_int(big, -1)).is_one());
}

TEST_CASE("cd_mul agrees with the recursive doubling oracle") {
  for (unsigned level = 0; level <= kMaxCayleyDicksonLevel; ++level) {
    const std::size_t n = std::size_t{1} << level;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        REQUIRE(cd_mul(e(level, i), e(level, j)) == oracle::cd_mul(e(level, i), e(level, j)));
      }
    }
  }
  for (unsigned level = 0; level <= 4; ++level) {
    for (int k = 0; k < 50; ++k) {
      const auto x = random_cd(Q, level), y = random_cd(Q, level);
      REQUIRE(cd_mul(x, y) == oracle::cd_mul(x, y));
      REQUIRE(cd_conj(x) == oracle::cd_conj(x));
    }
  }
}

TEST_CASE("cd_mul basics") {
  CHECK(cd_mul(e(1, 1), e(1, 1)) == -e(1, 0));
  const Scalar a = Scalar::from_int(Q, 3), b = Scalar::from_rational(Q, mpq_class(-2, 5));
  CHECK(cd_mul(CDElement::scalar(0, a), CDElement::scalar(0, b)) == CDElement::scalar(0, a * b));
  CHECK_THROWS_AS(cd_mul(e(1, 0), e(2, 0)), MismatchError);
  CHECK_THROWS_AS(cd_mul(e(1, 0), e(1, 0, Field::prime(3))), MismatchError);
  CHECK_THROWS_AS(CDElement(2, std::vector<Scalar>(3, Scalar::zero(Q))), DomainError);
}

TEST_CASE("octonion associator table from the oracle") {
  // Brute-force the 8x8x8 unit associator table with the independent oracle.
  int nonzero = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      for (std::size_t k = 0; k < 8; ++k) {
        const auto lhs = oracle::cd_mul(oracle::cd_mul(e(3, i), e(3, j)), e(3, k));
        const auto rhs = oracle::cd_mul(e(3, i), oracle::cd_mul(e(3, j), e(3, k)));
        if (!(lhs == rhs)) ++nonzero;
      }
    }
  }
  CHECK(nonzero == 168);
  // Frozen value: (e1, e2, e4) = 2 e7 under the fixed doubling convention.
  const RingDescriptor O = RingDescriptor::cayley_dickson(Q, 3);
  const auto a = associator(RingElement::unit(O, 1), RingElement::unit(O, 2), RingElement::unit(O, 4));
  CHECK(a == RingElement::unit(O, 7).scaled(Scalar::from_int(Q, 2)));
  CHECK(a == RingElement::constant(O, oracle::cd_mul(oracle::cd_mul(e(3, 1), e(3, 2)), e(3, 4)) -
                                         oracle::cd_mul(e(3, 1), oracle::cd_mul(e(3, 2), e(3, 4)))));
}

TEST_CASE("conjugation and norm") {
  for (int k = 0; k < 200; ++k) {
    const unsigned level = static_cast<unsigned>(k % 5);
    const auto x = random_cd(Q, level);
    REQUIRE(cd_conj(cd_conj(x)) == x);
    const auto n = cd_mul(x, cd_conj(x));
    for (std::size_t i = 1; i < n.size(); ++i) REQUIRE(n[i].is_zero());
    REQUIRE(n[0] == cd_norm(x));
  }
  for (unsigned level = 0; level <= 3; ++level) {
    for (int k = 0; k < 100; ++k) {
      const auto x = random_cd(Q, level), y = random_cd(Q, level);
      REQUIRE(cd_norm(cd_mul(x, y)) == cd_norm(x) * cd_norm(y));
      REQUIRE(cd_norm(x).is_zero() == x.is_zero());
    }
  }
}

TEST_CASE("sedenion zero divisor fixture") {
  // Found by exhaustive search over pairs e_a + e_b, e_c +- e_d.
  const CDElement x = e(4, 1) + e(4, 10);
  const CDElement y = e(4, 4) - e(4, 15);
  CHECK(cd_mul(x, y).is_zero());
  CHECK(oracle::cd_mul(x, y).is_zero());
  CHECK(!x.is_zero());
  CHECK(!y.is_zero());
}

TEST_CASE("ring arithmetic examples") {
  const RingDescriptor P = RingDescriptor::poly(Q, 0);
  const auto Y = RingElement::unit(P, 0, 1);
  const auto one = ring_one(P);
  CHECK((Y + one) * (Y - one) == Y * Y - one);
  CHECK(to_text(Y * Y - one) == "-1 + Y^2");

  const RingDescriptor Qt = RingDescriptor::quotient(Field::prime(2), 0, 2);
  const auto y = RingElement::unit(Qt, 0, 1);
  CHECK((y * y).is_zero());
  CHECK(y.coords().size() == 2);

  const RingDescriptor Fn = RingDescriptor::functions(Q, 1, 2);
  const auto p0 = RingElement::unit(Fn, 0, 0);
  const auto i1 = RingElement::unit(Fn, 1, 1);
  CHECK((p0 * i1).is_zero());
  CHECK((i1 * i1) == -RingElement::unit(Fn, 0, 1));
  CHECK(to_text(p0 + i1) == "P0 + e1*P1");

  CHECK_THROWS_AS(Y * y, MismatchError);
  CHECK_THROWS_AS(RingDescriptor::quotient(Q, 0, 0), DomainError);
  CHECK_THROWS_AS(RingDescriptor::functions(Q, 0, 0), DomainError);
  CHECK_THROWS_AS(capped_basis(P, std::nullopt), CapsError);
}

TEST_CASE("ring axioms on every constructor") {
  for (const auto& r : all_constructors()) {
    CAPTURE(r.to_string());
    const auto one = ring_one(r), zero = ring_zero(r);
    const int cases = r.level <= 1 ? 500 : 150;
    for (int k = 0; k < cases; ++k) {
      const auto a = random_element(r), b = random_element(r), c = random_element(r);
      REQUIRE(one * a == a);
      REQUIRE(a * one == a);
      REQUIRE(a + zero == a);
      REQUIRE((a + (-a)).is_zero());
      REQUIRE(a + b == b + a);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE((a + b) * c == a * c + b * c);
      if (r.is_associative()) REQUIRE((a * b) * c == a * (b * c));
      if (r.is_commutative()) REQUIRE(a * b == b * a);
    }
  }
}

TEST_CASE("canonical form decides equality") {
  const RingDescriptor P = RingDescriptor::poly(Q, 1);
  const auto Y = RingElement::unit(P, 0, 1);
  const auto a = Y + RingElement::unit(P, 1, 2);
  const auto b = a - RingElement::unit(P, 1, 2);
  CHECK(b == Y);
  CHECK(b.coords().size() == Y.coords().size());
  for (std::size_t i = 0; i < b.coords().size(); ++i) CHECK(b.coords()[i] == Y.coords()[i]);
  CHECK(RingElement(P, std::vector<Scalar>(8, Scalar::zero(Q))).coords().empty());
}

TEST_CASE("commutator and associator") {
  const RingDescriptor H = RingDescriptor::cayley_dickson(Q, 2);
  const auto i = RingElement::unit(H, 1), j = RingElement::unit(H, 2), k = RingElement::unit(H, 3);
  CHECK(commutator(i, j) == k.scaled(Scalar::from_int(Q, 2)));
  for (const auto& r : all_constructors()) {
    const auto x = random_element(r);
    REQUIRE(commutator(x, x).is_zero());
    if (r.is_commutative() && r.is_associative()) {
      const auto y = random_element(r), z = random_element(r);
      REQUIRE(commutator(x, y).is_zero());
      REQUIRE(associator(x, y, z).is_zero());
    }
  }
}

TEST_CASE("membership certificates") {
  for (const auto& r : all_constructors()) {
    CHECK(membership(ring_one(r), Subset::center, 3).holds);
  }
  const RingDescriptor O = RingDescriptor::cayley_dickson(Q, 3);
  const auto cert = membership(RingElement::unit(O, 1), Subset::left_nucleus);
  CHECK(!cert.holds);
  REQUIRE(cert.tuple.size() == 3);
  CHECK(!associator(cert.tuple[0], cert.tuple[1], cert.tuple[2]).is_zero());

  const RingDescriptor H = RingDescriptor::cayley_dickson(Q, 2);
  const auto zc = membership(RingElement::unit(H, 1), Subset::center);
  CHECK(!zc.holds);
  CHECK(zc.violated == "[r,s] != 0");
  REQUIRE(zc.tuple.size() == 2);
  CHECK(!commutator(zc.tuple[0], zc.tuple[1]).is_zero());
  CHECK(membership(RingElement::unit(H, 1), Subset::nucleus).holds);

  const RingDescriptor P = RingDescriptor::poly(Q, 0);
  const auto capped = membership(RingElement::unit(P, 0, 2), Subset::center, 4);
  CHECK(capped.holds);
  CHECK(capped.within_caps);
  CHECK_THROWS_AS(membership(ring_one(P), Subset::center), CapsError);
}

TEST_CASE("center via C, N_l, N_m agrees with the full definition") {
  for (int k = 0; k < 100; ++k) {
    const unsigned level = static_cast<unsigned>(k % 4);
    const RingDescriptor r = RingDescriptor::cayley_dickson(Q, level);
    // Mix random elements with scalar ones so both verdicts occur.
    const RingElement x = k % 3 == 0 ? RingElement::from_scalar(r, random_scalar(Q)) : random_element(r, 0, 0.4);
    const bool reduced = membership(x, Subset::center).holds;
    const bool full = membership(x, Subset::commuter).holds && membership(x, Subset::left_nucleus).holds &&
                      membership(x, Subset::middle_nucleus).holds && membership(x, Subset::right_nucleus).holds;
    REQUIRE(reduced == full);
  }
}

TEST_CASE("inverses of central elements are central") {
  for (const auto& r : all_constructors()) {
    if (!r.finite_dimensional()) continue;
    const std::size_t dim = r.capped_dimension(std::nullopt);
    const auto basis = capped_basis(r, std::nullopt);
    for (int k = 0; k < 5; ++k) {
      const RingElement z = k == 0 ? RingElement::from_scalar(r, Scalar::from_int(r.field, 2)) : random_element(r);
      if (!membership(z, Subset::center).holds) continue;
      // Solve z * s = 1 as a linear system over the basis columns z * b.
      std::vector<Vec> cols;
      for (const auto& b : basis) cols.push_back(*(z * b).coords_within(dim));
      const auto sol = solve_columns(r.field, cols, *ring_one(r).coords_within(dim));
      if (!sol) continue;
      const auto s = from_coords(r, *sol);
      REQUIRE((z * s).is_one());
      REQUIRE(membership(s, Subset::center).holds);
    }
  }
}
