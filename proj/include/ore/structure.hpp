#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ore/axioms.hpp"
#include "ore/linalg.hpp"
#include "ore/ore_poly.hpp"

namespace ore {

enum class Outcome { holds_certified, fails_with_witness, inconclusive_within_caps };

/// "holds-certified", "fails-with-witness", "inconclusive-within-caps".
std::string to_string(Outcome o);

/// Result of a structural decision. A certified outcome always names the
/// criterion that decided it; a failing outcome always carries a witness that
/// re-validates mechanically (see `witness_validated`).
struct Verdict {
  std::string property;
  Outcome outcome = Outcome::inconclusive_within_caps;
  std::string criterion;
  CapProfile caps;
  std::vector<RingElement> ideal;  // coefficient-ring ideal witness, capped basis
  std::vector<OrePoly> polys;      // ideal basis in S or central element(s)
  bool witness_validated = false;
  std::vector<std::string> cross_checks;
  std::vector<std::string> notes;
};

/// Echelon basis of (ideal ∩ capped subspace of S). Rows are sorted by their
/// leading (X-degree, basis index) position and are monic in that coordinate.
struct IdealBasis {
  enum class Closure { saturated, round_limit };

  OreHandle handle;
  CapProfile caps;
  std::vector<OrePoly> basis;
  Closure closure = Closure::saturated;
  unsigned rounds_used = 0;
  std::size_t discarded = 0;  // products that left the capped subspace
  std::shared_ptr<const EchelonBasis> echelon;

  /// Membership by reduction; nullopt when f lies outside the capped subspace.
  std::optional<bool> contains(const OrePoly& f) const;
  bool contains_one() const;
};

std::string to_string(IdealBasis::Closure c);

/// Coordinates of f in the capped subspace of S (X-degree <= caps.x, coefficients
/// in the capped R-basis), index n * dim + j for b_j X^n; nullopt beyond caps.
std::optional<Vec> poly_coords(const OrePoly& f, const CapProfile& caps);
OrePoly poly_from_coords(const OreHandle& h, const Vec& v, const CapProfile& caps);

/// Basis of Z(S) within caps by exact linear algebra over the ground field:
/// delta(c_i) = 0, [c, r] = 0 and the three associator conditions for capped r, s.
/// Requires sigma = id; throws DomainError otherwise or when delta is certified
/// not to be a kernel derivation.
std::vector<OrePoly> center_basis(const OreHandle& h, const CapProfile& caps);

/// The conditions above checked for a single polynomial.
PolyCertificate center_conditions(const OrePoly& a, const CapProfile& caps);

/// Least-degree non-constant monic element of the capped center. Certified when R
/// is finite dimensional (the center conditions are then exhaustive); on K[Y] a
/// found element is only a candidate. With none found the provisional answer is 1.
Verdict minimal_monic_central(const OreHandle& h, const CapProfile& caps);

struct ShapeCheck {
  bool holds = false;
  std::string reason;
  std::optional<RingElement> c;                             // constant term
  std::vector<std::pair<unsigned, RingElement>> terms;      // (p^i, b_i)
  Certificate operator_identity;  // sum b_i delta^(p^i)(r) + c r - r c = 0
};

/// Exponent law for a monic central b in characteristic p: b = c + sum b_i X^(p^i)
/// with central, delta-killed b_i, and sum b_i delta^(p^i) + delta_c = 0 on the
/// capped basis, delta_c(r) = c r - r c. Constants pass vacuously.
ShapeCheck char_p_shape_check(const OrePoly& b, unsigned p, const CapProfile& caps = {});

/// Closes span(generators) under left and right multiplication by X and by the
/// capped R-basis, dropping products that leave the capped subspace.
IdealBasis ideal_saturate(const OreHandle& h, const std::vector<OrePoly>& generators, const CapProfile& caps);

/// Monic generator of least degree of a saturated ideal basis, verified central and
/// dividing every basis row with remainder zero.
Verdict minimal_monic_generator(const IdealBasis& basis);

/// Ideal of R generated by `generators` and closed under sigma and delta, within
/// the Y-cap. `truncated` records dropped products (never for finite-dimensional R).
struct InvariantIdeal {
  std::vector<RingElement> basis;
  bool truncated = false;
  bool contains_one = false;
};
InvariantIdeal invariant_ideal(const AdditiveMap& sigma, const AdditiveMap& delta,
                               const std::vector<RingElement>& generators, std::optional<unsigned> y_cap);

/// Re-validates an ideal witness of R: nonzero, excludes 1, closed under sigma,
/// delta and capped basis multiplication on both sides.
Certificate validate_invariant_ideal(const AdditiveMap& sigma, const AdditiveMap& delta,
                                     const std::vector<RingElement>& basis, std::optional<unsigned> y_cap);

/// Capped basis of the lifted ideal of S whose coefficients all lie in J.
std::vector<OrePoly> lifted_ideal(const OreHandle& h, const std::vector<RingElement>& j, const CapProfile& caps);

/// Checks that the lifted ideal is closed under multiplication by X and the capped
/// R-basis on both sides and excludes 1.
PolyCertificate validate_lifted_ideal(const OreHandle& h, const std::vector<RingElement>& j, const CapProfile& caps);

/// Whether R admits no sigma-delta-invariant ideals besides 0 and R. Throws
/// DomainError on function rings over level >= 4 (zero-divisor values).
Verdict delta_simplicity_probe(const OreHandle& h, const CapProfile& caps);

/// Simplicity of S = R[X; id, delta]; throws DomainError when sigma is not the
/// identity or R is a function ring over level >= 4.
Verdict simplicity_verdict(const OreHandle& h, const CapProfile& caps);

/// Whether Z(R)_delta^sigma is a field; its capped basis is returned in `ideal`.
Verdict center_field_check(const OreHandle& h, const CapProfile& caps);

/// Multiplicative order of q, or nullopt when q is not a root of unity.
std::optional<unsigned long> root_of_unity_order(const Scalar& q);

/// True when the permutation g of {0..n-1} is a single n-cycle.
bool is_single_cycle(const std::vector<std::size_t>& g);

/// Finite dynamical system summary: the simplicity verdict, the capped center, and
/// a flag for a minimal action on a finite discrete space with more than one point
/// whose ring is nevertheless judged simple.
struct DynamicsReport {
  Verdict simplicity;
  std::vector<OrePoly> center;
  bool minimal = false;
  bool discrete_minimal_discrepancy = false;
  std::string note;
};
DynamicsReport dynamics_report(const OreHandle& h, const CapProfile& caps);

}  // namespace ore
