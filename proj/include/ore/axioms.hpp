#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ore/ore_poly.hpp"

namespace ore {

/// Outcome of an identity check over polynomials; `tuple` holds the violating
/// elements when `holds` is false.
struct PolyCertificate {
  bool holds = true;
  bool within_caps = true;
  std::string violated;
  std::vector<OrePoly> tuple;

  explicit operator bool() const { return holds; }
};

OrePoly poly_associator(const OrePoly& f, const OrePoly& g, const OrePoly& h);

/// Monomials b X^n for b in the capped R-basis and n <= caps.x, ordered by
/// X-degree and then by basis index.
std::vector<OrePoly> capped_monomials(const OreHandle& h, const CapProfile& caps);

struct AxiomCheck {
  std::string name;
  PolyCertificate result;
};

struct AxiomReport {
  CapProfile caps;
  std::vector<AxiomCheck> checks;
  std::vector<RingElement> constants;  // capped basis of R_X = R_delta^sigma

  const AxiomCheck& get(const std::string& name) const;
  /// (N1)-(N3) hold within caps.
  bool ore_extension() const;
  /// (N4) or (N5) holds within caps.
  bool strong() const;
};

/// Checks (N1)-(N5), the strengthened (N4)/(N5) forms and seeded random samples
/// of the ring axioms of S, all on capped monomial bases.
AxiomReport axiom_suite(const OreHandle& h, const CapProfile& caps, std::uint64_t seed = 1);

struct AssociativityVerdict {
  bool associative = false;
  // Criterion route: R associative, sigma an endomorphism, delta a sigma-derivation.
  Certificate coefficients;
  Certificate sigma_endomorphism;
  Certificate delta_derivation;
  // Direct route: associators of capped monomial triples.
  PolyCertificate exhaustive;
  bool routes_agree = false;
  CapProfile caps;
};

/// Evaluates the associativity criterion and cross-checks it with an exhaustive
/// capped associator search.
AssociativityVerdict associativity_verdict(const OreHandle& h, const CapProfile& caps);

/// First nonzero associator among capped monomial triples.
PolyCertificate exhaustive_associator_search(const OreHandle& h, const CapProfile& caps);

}  // namespace ore
