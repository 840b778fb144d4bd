#include "ore/structure.hpp"

#include <deque>
#include <functional>
#include <map>
#include <tuple>

namespace ore {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::holds_certified: return "holds-certified";
    case Outcome::fails_with_witness: return "fails-with-witness";
    case Outcome::inconclusive_within_caps: return "inconclusive-within-caps";
  }
  return "?";
}

std::string to_string(IdealBasis::Closure c) {
  return c == IdealBasis::Closure::saturated ? "saturated" : "round-limit";
}

namespace {

std::size_t r_dim(const OreHandle& h, const CapProfile& caps) { return h->ring().capped_dimension(caps.y_cap()); }

void require_sigma_identity(const OreHandle& h, const char* what) {
  if (!h->sigma().structurally_identity() && h->sigma_identity() != Tri::yes) {
    throw DomainError(std::string(what) + " requires sigma = identity, got " + h->sigma().to_string());
  }
}

// Function rings over level >= 4 have zero-divisor values; simplicity analysis excludes them.
void require_simplicity_domain(const OreHandle& h, const char* what) {
  const RingDescriptor& r = h->ring();
  if (r.construction == Construction::functions && r.level >= 4) {
    throw DomainError(std::string(what) + " excludes function rings over Cayley-Dickson level >= 4, got " + r.to_string());
  }
}

// Coordinates of ring one; on function rings this is the sum of all point units.
Vec one_vec(const RingDescriptor& r, std::size_t dim) { return *RingElement::one(r).coords_within(dim); }

// The coefficient ring T is simple with only the trivial ideal structure we rely on:
// a field (level 0) or a rational Cayley-Dickson division algebra (level <= 3).
bool coefficients_division(const RingDescriptor& r) {
  return r.level == 0 || (r.field.is_rational() && r.level <= 3);
}

// Sparse row accumulator for "Σ x_k image_k = 0": one row per (test, X-degree, flat index).
using RowKey = std::tuple<std::size_t, std::size_t, std::size_t>;

// Replaces `cands` by a basis of the combinations whose images all vanish.
void restrict_by(std::vector<OrePoly>& cands, Field f,
                 const std::function<void(const OrePoly&, std::vector<OrePoly>&)>& images) {
  const std::size_t k_count = cands.size();
  if (k_count == 0) return;
  std::map<RowKey, Vec> rows;
  std::vector<OrePoly> out;
  for (std::size_t k = 0; k < k_count; ++k) {
    out.clear();
    images(cands[k], out);
    for (std::size_t t = 0; t < out.size(); ++t) {
      const auto& coeffs = out[t].coeffs();
      for (std::size_t n = 0; n < coeffs.size(); ++n) {
        const auto c = coeffs[n].coords();
        for (std::size_t j = 0; j < c.size(); ++j) {
          if (c[j].is_zero()) continue;
          Vec& row = rows[{t, n, j}];
          if (row.empty()) row.assign(k_count, Scalar::zero(f));
          row[k] = c[j];
        }
      }
    }
  }
  if (rows.empty()) return;
  std::vector<Vec> m;
  m.reserve(rows.size());
  for (auto& [key, row] : rows) m.push_back(std::move(row));
  std::vector<OrePoly> next;
  for (const auto& x : nullspace(f, k_count, m)) {
    OrePoly acc(cands[0].handle());
    for (std::size_t k = 0; k < k_count; ++k) {
      if (!x[k].is_zero()) acc += cands[k].scaled(x[k]);
    }
    next.push_back(std::move(acc));
  }
  cands = std::move(next);
}

std::vector<OrePoly> echelonize(const OreHandle& h, const std::vector<OrePoly>& polys, const CapProfile& caps) {
  EchelonBasis e(h->ring().field, (caps.x + 1) * r_dim(h, caps));
  for (const auto& p : polys) {
    auto v = poly_coords(p, caps);
    if (!v) throw CapsError("center candidate left the capped subspace");
    e.insert(std::move(*v));
  }
  std::vector<OrePoly> out;
  for (const auto& row : e.rows()) out.push_back(poly_from_coords(h, row, caps));
  return out;
}

std::vector<OrePoly> constants(const OreHandle& h, const std::vector<RingElement>& elems) {
  std::vector<OrePoly> out;
  for (const auto& e : elems) out.push_back(OrePoly::constant(h, e));
  return out;
}

// Commutator and associator conditions against the capped R-basis.
void restrict_to_commuting(std::vector<OrePoly>& cands, const OreHandle& h, const std::vector<OrePoly>& rb) {
  const Field f = h->ring().field;
  for (const auto& r : rb) {
    if (cands.empty()) return;
    restrict_by(cands, f, [&](const OrePoly& c, std::vector<OrePoly>& out) { out.push_back(c * r - r * c); });
  }
}

void restrict_to_associating(std::vector<OrePoly>& cands, const OreHandle& h, const std::vector<OrePoly>& rb) {
  const Field f = h->ring().field;
  for (const auto& r : rb) {
    if (r.coeffs().size() == 1 && r.coeffs()[0].is_one()) continue;  // associators with 1 vanish
    for (const auto& s : rb) {
      if (cands.empty()) return;
      if (s.coeffs().size() == 1 && s.coeffs()[0].is_one()) continue;
      restrict_by(cands, f, [&](const OrePoly& c, std::vector<OrePoly>& out) {
        out.push_back(poly_associator(c, r, s));
        out.push_back(poly_associator(r, c, s));
        out.push_back(poly_associator(r, s, c));
      });
    }
  }
}

Verdict make_verdict(std::string property, const CapProfile& caps) {
  Verdict v;
  v.property = std::move(property);
  v.caps = caps;
  return v;
}

// Basis e_u Y^k (or e_u at a point) over the given slots.
std::vector<RingElement> slot_span(const RingDescriptor& r, const std::vector<std::size_t>& slots) {
  std::vector<RingElement> out;
  for (auto s : slots) {
    for (std::size_t u = 0; u < r.unit_count(); ++u) out.push_back(RingElement::unit(r, u, s));
  }
  return out;
}

// An ideal already closed under R-multiplication; checks sigma- and delta-invariance exactly.
bool maps_preserve(const AdditiveMap& sigma, const AdditiveMap& delta, const std::vector<RingElement>& ideal,
                   std::size_t dim) {
  const RingDescriptor& r = sigma.ring();
  EchelonBasis e(r.field, dim);
  for (const auto& b : ideal) e.insert(*b.coords_within(dim));
  for (const auto& b : ideal) {
    for (const auto& img : {sigma(b), delta(b)}) {
      auto v = img.coords_within(dim);
      if (!v || !e.contains(*v)) return false;
    }
  }
  return true;
}

std::uint64_t int_pow_capped(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

// Projective enumeration limit for exhaustive checks over F_p.
constexpr std::uint64_t kEnumerationLimit = 4096;

// Calls visit on every nonzero vector of F_p^dim whose last nonzero entry is 1.
void for_each_projective(Field f, std::size_t dim, const std::function<bool(const Vec&)>& visit) {
  const std::uint32_t p = f.characteristic();
  for (std::size_t lead = 0; lead < dim; ++lead) {
    Vec v(dim, Scalar::zero(f));
    v[lead] = Scalar::one(f);
    const std::uint64_t count = int_pow_capped(p, lead, kEnumerationLimit);
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = 0; i < lead; ++i) {
        v[i] = Scalar::from_int(f, static_cast<long long>(c % p));
        c /= p;
      }
      if (!visit(v)) return;
    }
  }
}

bool finite_enumerable(const RingDescriptor& r, std::size_t dim) {
  return !r.field.is_rational() && r.finite_dimensional() &&
         int_pow_capped(r.field.characteristic(), dim, kEnumerationLimit) <= kEnumerationLimit;
}

const AdditiveMap* kernel_child(const AdditiveMap& delta, MapKind child) {
  if (delta.kind() != MapKind::kernel) return nullptr;
  const AdditiveMap& a = delta.children()[0];
  return a.kind() == child ? &a : nullptr;
}

// delta(b) != 0 for some capped basis element.
bool delta_nonzero(const AdditiveMap& delta, std::optional<unsigned> y) {
  for (const auto& b : capped_basis(delta.ring(), y)) {
    if (!delta(b).is_zero()) return true;
  }
  return false;
}

}  // namespace

std::optional<Vec> poly_coords(const OrePoly& f, const CapProfile& caps) {
  const std::size_t d = f.ring().capped_dimension(caps.y_cap());
  if (f.coeffs().size() > caps.x + 1) return std::nullopt;
  Vec out((caps.x + 1) * d, Scalar::zero(f.ring().field));
  for (std::size_t n = 0; n < f.coeffs().size(); ++n) {
    auto c = f.coeffs()[n].coords_within(d);
    if (!c) return std::nullopt;
    std::copy(c->begin(), c->end(), out.begin() + static_cast<std::ptrdiff_t>(n * d));
  }
  return out;
}

OrePoly poly_from_coords(const OreHandle& h, const Vec& v, const CapProfile& caps) {
  const std::size_t d = r_dim(h, caps);
  std::vector<RingElement> coeffs;
  for (std::size_t n = 0; n * d < v.size(); ++n) {
    coeffs.push_back(from_coords(h->ring(), std::span<const Scalar>(v).subspan(n * d, d)));
  }
  return OrePoly(h, std::move(coeffs));
}

std::optional<bool> IdealBasis::contains(const OrePoly& f) const {
  auto v = poly_coords(f, caps);
  if (!v) return std::nullopt;
  return echelon->contains(*v);
}

bool IdealBasis::contains_one() const { return contains(OrePoly::one(handle)).value_or(false); }

std::vector<OrePoly> center_basis(const OreHandle& h, const CapProfile& caps) {
  caps.validate();
  require_sigma_identity(h, "center_basis");
  if (h->kernel_right_linear() == Tri::no && h->kernel_left_linear() == Tri::no) {
    throw DomainError("center_basis requires a kernel derivation; " + h->delta().to_string() +
                      " is neither left nor right linear over its kernel");
  }
  const auto y = caps.y_cap();
  // (i) X c = c X iff delta kills every coefficient.
  const auto kernel = fixed_kernel_basis(h->sigma(), h->delta(), y);
  std::vector<OrePoly> cands;
  for (unsigned n = 0; n <= caps.x; ++n) {
    for (const auto& k : kernel) cands.push_back(OrePoly::monomial(h, k, n));
  }
  const auto rb = constants(h, capped_basis(h->ring(), y));
  restrict_to_commuting(cands, h, rb);    // (ii)
  restrict_to_associating(cands, h, rb);  // (iii)
  return echelonize(h, cands, caps);
}

PolyCertificate center_conditions(const OrePoly& a, const CapProfile& caps) {
  const OreHandle& h = a.handle();
  require_sigma_identity(h, "center_conditions");
  const auto y = caps.y_cap();
  for (const auto& c : a.coeffs()) {
    if (!h->delta()(c).is_zero()) return PolyCertificate{false, true, "delta(a_i) != 0", {OrePoly::constant(h, c)}};
  }
  const auto rb = constants(h, capped_basis(h->ring(), y));
  for (const auto& r : rb) {
    if (!(a * r == r * a)) return PolyCertificate{false, true, "[a, r] != 0", {a, r}};
  }
  for (const auto& r : rb) {
    for (const auto& s : rb) {
      if (!poly_associator(a, r, s).is_zero()) return PolyCertificate{false, true, "(a, r, s) != 0", {a, r, s}};
      if (!poly_associator(r, a, s).is_zero()) return PolyCertificate{false, true, "(r, a, s) != 0", {r, a, s}};
      if (!poly_associator(r, s, a).is_zero()) return PolyCertificate{false, true, "(r, s, a) != 0", {r, s, a}};
    }
  }
  return PolyCertificate{true, !h->ring().finite_dimensional(), {}, {}};
}

Verdict minimal_monic_central(const OreHandle& h, const CapProfile& caps) {
  Verdict v = make_verdict("non-constant monic central element", caps);
  const auto center = center_basis(h, caps);
  const RingDescriptor& r = h->ring();
  const std::size_t d = r_dim(h, caps);
  const Vec one = one_vec(r, d);
  v.polys = center;
  for (unsigned n = 1; n <= caps.x; ++n) {
    std::vector<const OrePoly*> rows;
    std::vector<Vec> lcs;
    for (const auto& c : center) {
      if (degree(c) == Degree(n)) {
        rows.push_back(&c);
        lcs.push_back(*leading_coeff(c).coords_within(d));
      }
    }
    if (rows.empty()) continue;
    auto x = solve_columns(r.field, lcs, one);
    if (!x) continue;
    OrePoly b(h);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (!(*x)[k].is_zero()) b += rows[k]->scaled((*x)[k]);
    }
    v.polys = {b};
    v.witness_validated = center_conditions(b, caps).holds && is_monic(b);
    if (r.finite_dimensional()) {
      v.outcome = v.witness_validated ? Outcome::holds_certified : Outcome::inconclusive_within_caps;
      v.criterion = "exhaustive-center-conditions";
    } else {
      v.criterion = "capped-center-conditions";
      v.notes.push_back("candidate central on the capped basis of an infinite-dimensional ring");
    }
    return v;
  }
  v.polys = {OrePoly::one(h)};
  v.criterion = "none";
  v.notes.push_back("no non-constant monic central element up to X-degree " + std::to_string(caps.x) +
                    "; provisional b = 1");
  return v;
}

ShapeCheck char_p_shape_check(const OrePoly& b, unsigned p, const CapProfile& caps) {
  ShapeCheck out;
  const OreHandle& h = b.handle();
  const auto y = caps.y_cap();
  out.operator_identity.within_caps = !h->ring().finite_dimensional();
  if (b.is_zero() || !is_monic(b)) {
    out.reason = "not monic";
    return out;
  }
  out.c = b.coeff(0);
  if (degree(b) == Degree(0)) {
    out.holds = true;
    out.reason = "constant";
    return out;
  }
  if (p < 2 || !is_prime(p)) {
    out.reason = "characteristic " + std::to_string(p) + " is not prime";
    return out;
  }
  const AdditiveMap& delta = h->delta();
  for (std::size_t n = 1; n < b.coeffs().size(); ++n) {
    const RingElement& bn = b.coeffs()[n];
    if (bn.is_zero()) continue;
    std::size_t e = 1;
    while (e < n) e *= p;
    if (e != n) {
      out.reason = "exponent " + std::to_string(n) + " is not a power of " + std::to_string(p);
      return out;
    }
    if (!delta(bn).is_zero()) {
      out.reason = "delta does not kill the X^" + std::to_string(n) + " coefficient";
      return out;
    }
    if (!membership(bn, Subset::center, y).holds) {
      out.reason = "the X^" + std::to_string(n) + " coefficient is not central";
      return out;
    }
    out.terms.emplace_back(static_cast<unsigned>(n), bn);
  }
  if (!delta(*out.c).is_zero()) {
    out.reason = "delta does not kill the constant term";
    return out;
  }
  for (const auto& r : capped_basis(h->ring(), y)) {
    RingElement acc = (*out.c) * r - r * (*out.c);
    for (const auto& [e, bi] : out.terms) {
      RingElement dr = r;
      for (unsigned k = 0; k < e; ++k) dr = delta(dr);
      acc += bi * dr;
    }
    if (!acc.is_zero()) {
      out.operator_identity.holds = false;
      out.operator_identity.violated = "sum b_i delta^(p^i)(r) + c r - r c != 0";
      out.operator_identity.tuple = {r};
      out.reason = "operator identity fails";
      return out;
    }
  }
  out.holds = true;
  out.reason = "exponents are powers of " + std::to_string(p);
  return out;
}

IdealBasis ideal_saturate(const OreHandle& h, const std::vector<OrePoly>& generators, const CapProfile& caps) {
  caps.validate();
  IdealBasis out;
  out.handle = h;
  out.caps = caps;
  auto echelon = std::make_shared<EchelonBasis>(h->ring().field, (caps.x + 1) * r_dim(h, caps));
  std::vector<OrePoly> frontier;
  auto offer = [&](const OrePoly& f, std::vector<OrePoly>& into) {
    f.check_same(OrePoly(h));
    auto v = poly_coords(f, caps);
    if (!v) {
      ++out.discarded;
      return;
    }
    if (echelon->insert(std::move(*v))) into.push_back(f);
  };
  for (const auto& g : generators) offer(g, frontier);
  std::vector<OrePoly> mult = {OrePoly::x_power(h, 1)};
  for (const auto& b : capped_basis(h->ring(), caps.y_cap())) {
    if (!b.is_one()) mult.push_back(OrePoly::constant(h, b));
  }
  const std::size_t full = echelon->dim();
  while (!frontier.empty() && echelon->rank() < full) {
    if (out.rounds_used == caps.rounds) break;
    ++out.rounds_used;
    std::vector<OrePoly> next;
    for (const auto& f : frontier) {
      for (const auto& m : mult) {
        offer(m * f, next);
        offer(f * m, next);
      }
    }
    frontier = std::move(next);
  }
  out.closure = frontier.empty() || echelon->rank() == full ? IdealBasis::Closure::saturated
                                                            : IdealBasis::Closure::round_limit;
  for (const auto& row : echelon->rows()) out.basis.push_back(poly_from_coords(h, row, caps));
  out.echelon = std::move(echelon);
  return out;
}

Verdict minimal_monic_generator(const IdealBasis& basis) {
  Verdict v = make_verdict("monic central generator", basis.caps);
  if (basis.closure != IdealBasis::Closure::saturated) {
    v.notes.push_back("round limit hit after " + std::to_string(basis.rounds_used) + " rounds; no generator claimed");
    return v;
  }
  if (basis.basis.empty()) {
    v.notes.push_back("zero ideal");
    return v;
  }
  const OreHandle& h = basis.handle;
  const std::size_t d = r_dim(h, basis.caps);
  const Degree m = degree(basis.basis.front());
  std::vector<const OrePoly*> rows;
  std::vector<Vec> lcs;
  for (const auto& f : basis.basis) {
    if (degree(f) != m) break;
    rows.push_back(&f);
    lcs.push_back(*leading_coeff(f).coords_within(d));
  }
  auto x = solve_columns(h->ring().field, lcs, one_vec(h->ring(), d));
  if (!x) {
    v.notes.push_back("1 is not in the leading-coefficient span of the degree-" + m.to_string() + " elements");
    return v;
  }
  OrePoly a(h);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (!(*x)[k].is_zero()) a += rows[k]->scaled((*x)[k]);
  }
  v.polys = {a};
  const auto central = center_conditions(a, basis.caps);
  bool divides = true;
  for (const auto& f : basis.basis) {
    if (!euclid_divide(f, a).remainder.is_zero()) {
      divides = false;
      v.notes.push_back("nonzero remainder for " + to_text(f));
      break;
    }
  }
  if (!central.holds) v.notes.push_back("generator fails the center conditions: " + central.violated);
  v.witness_validated = central.holds && divides;
  if (v.witness_validated) {
    v.outcome = Outcome::holds_certified;
    v.criterion = "minimal-monic-generator";
  }
  return v;
}

InvariantIdeal invariant_ideal(const AdditiveMap& sigma, const AdditiveMap& delta,
                               const std::vector<RingElement>& generators, std::optional<unsigned> y_cap) {
  const RingDescriptor& r = sigma.ring();
  const std::size_t dim = r.capped_dimension(y_cap);
  InvariantIdeal out;
  EchelonBasis e(r.field, dim);
  std::deque<RingElement> work;
  auto offer = [&](const RingElement& x) {
    auto v = x.coords_within(dim);
    if (!v) {
      out.truncated = true;
      return;
    }
    if (e.insert(std::move(*v))) work.push_back(x);
  };
  for (const auto& g : generators) offer(g);
  std::vector<RingElement> basis;
  for (const auto& b : capped_basis(r, y_cap)) {
    if (!b.is_one()) basis.push_back(b);
  }
  while (!work.empty() && e.rank() < dim) {
    const RingElement x = work.front();
    work.pop_front();
    offer(sigma(x));
    offer(delta(x));
    for (const auto& b : basis) {
      offer(b * x);
      offer(x * b);
    }
  }
  out.contains_one = e.contains(one_vec(r, dim));
  for (const auto& row : e.rows()) out.basis.push_back(from_coords(r, row));
  return out;
}

Certificate validate_invariant_ideal(const AdditiveMap& sigma, const AdditiveMap& delta,
                                     const std::vector<RingElement>& basis, std::optional<unsigned> y_cap) {
  const RingDescriptor& r = sigma.ring();
  Certificate c;
  c.within_caps = !r.finite_dimensional();
  auto bad = [&](std::string what, std::vector<RingElement> t) {
    c.holds = false;
    c.violated = std::move(what);
    c.tuple = std::move(t);
    return c;
  };
  if (basis.empty()) return bad("ideal is zero", {});
  std::size_t dim = r.capped_dimension(y_cap);
  for (const auto& b : basis) dim = std::max(dim, b.coords().size());
  EchelonBasis e(r.field, dim);
  for (const auto& b : basis) e.insert(*b.coords_within(dim));
  if (e.contains(one_vec(r, dim))) return bad("ideal contains 1", {});
  auto inside = [&](const RingElement& x) {
    auto v = x.coords_within(dim);
    return !v || e.contains(*v);  // beyond the cap: not checkable here
  };
  const auto mult = capped_basis(r, y_cap);
  for (const auto& x : basis) {
    if (!inside(sigma(x))) return bad("sigma(a) not in ideal", {x});
    if (!inside(delta(x))) return bad("delta(a) not in ideal", {x});
    for (const auto& b : mult) {
      if (!inside(b * x)) return bad("r a not in ideal", {b, x});
      if (!inside(x * b)) return bad("a r not in ideal", {x, b});
    }
  }
  return c;
}

std::vector<OrePoly> lifted_ideal(const OreHandle& h, const std::vector<RingElement>& j, const CapProfile& caps) {
  std::vector<OrePoly> out;
  for (unsigned n = 0; n <= caps.x; ++n) {
    for (const auto& b : j) out.push_back(OrePoly::monomial(h, b, n));
  }
  return out;
}

PolyCertificate validate_lifted_ideal(const OreHandle& h, const std::vector<RingElement>& j, const CapProfile& caps) {
  const RingDescriptor& r = h->ring();
  if (j.empty()) return PolyCertificate{false, true, "J is zero", {}};
  std::size_t dim = r.capped_dimension(caps.y_cap());
  for (const auto& b : j) dim = std::max(dim, b.coords().size());
  EchelonBasis e(r.field, dim);
  for (const auto& b : j) e.insert(*b.coords_within(dim));
  if (e.contains(one_vec(r, dim))) return PolyCertificate{false, true, "1 in J", {}};
  auto inside = [&](const OrePoly& f) {
    for (const auto& c : f.coeffs()) {
      auto v = c.coords_within(dim);
      if (v && !e.contains(*v)) return false;
    }
    return true;
  };
  std::vector<OrePoly> mult = {OrePoly::x_power(h, 1)};
  for (const auto& b : capped_basis(r, caps.y_cap())) mult.push_back(OrePoly::constant(h, b));
  for (const auto& f : lifted_ideal(h, j, caps)) {
    for (const auto& m : mult) {
      if (!inside(m * f)) return PolyCertificate{false, true, "m f has a coefficient outside J", {m, f}};
      if (!inside(f * m)) return PolyCertificate{false, true, "f m has a coefficient outside J", {f, m}};
    }
  }
  return PolyCertificate{true, true, {}, {}};
}

std::optional<unsigned long> root_of_unity_order(const Scalar& q) {
  if (q.is_zero()) return std::nullopt;
  const Field f = q.field();
  if (f.is_rational()) {
    if (q.is_one()) return 1;
    if ((-q).is_one()) return 2;
    return std::nullopt;  // the only rational roots of unity are 1 and -1
  }
  // ord(q) divides p - 1: strip prime factors while q^(ord/l) stays 1.
  unsigned long order = f.characteristic() - 1;
  unsigned long rest = order;
  for (unsigned long l = 2; l * l <= rest; ++l) {
    if (rest % l != 0) continue;
    while (rest % l == 0) rest /= l;
    while (order % l == 0 && q.pow(order / l).is_one()) order /= l;
  }
  if (rest > 1) {
    while (order % rest == 0 && q.pow(order / rest).is_one()) order /= rest;
  }
  return order;
}

bool is_single_cycle(const std::vector<std::size_t>& g) {
  const std::size_t n = g.size();
  if (n == 0) return false;
  std::size_t x = 0, len = 0;
  do {
    if (g[x] >= n) return false;
    x = g[x];
    ++len;
  } while (x != 0 && len <= n);
  return x == 0 && len == n;
}

Verdict delta_simplicity_probe(const OreHandle& h, const CapProfile& caps) {
  caps.validate();
  require_simplicity_domain(h, "delta_simplicity_probe");
  Verdict v = make_verdict("sigma-delta-simple", caps);
  const RingDescriptor& r = h->ring();
  const AdditiveMap& sigma = h->sigma();
  const AdditiveMap& delta = h->delta();
  const auto y = caps.y_cap();
  const bool sigma_id = sigma.structurally_identity();
  const bool t_division = coefficients_division(r);

  auto certified = [&](std::string criterion) {
    v.outcome = Outcome::holds_certified;
    v.criterion = std::move(criterion);
    return v;
  };
  auto witness = [&](std::string criterion, std::vector<RingElement> ideal, std::optional<unsigned> y_eff) {
    v.outcome = Outcome::fails_with_witness;
    v.criterion = std::move(criterion);
    const auto check = validate_invariant_ideal(sigma, delta, ideal, y_eff);
    v.witness_validated = check.holds;
    if (!check.holds) v.notes.push_back("witness re-validation failed: " + check.violated);
    if (check.within_caps) v.notes.push_back("witness closure checked up to Y-degree " + std::to_string(*y_eff));
    v.ideal = std::move(ideal);
    return v;
  };
  // (Y^n) in K[Y], spanned up to Y-degree max(y, n) so it is never empty.
  auto monomial_ideal = [&](std::size_t n) {
    const std::size_t top = std::max<std::size_t>(*y, n);
    std::vector<std::size_t> slots;
    for (std::size_t k = n; k <= top; ++k) slots.push_back(k);
    return std::pair{slot_span(r, slots), std::optional<unsigned>(static_cast<unsigned>(top))};
  };

  // Stage 1: structured criteria.
  switch (r.construction) {
    case Construction::cayley_dickson:
      if (t_division) return certified("division-algebra-coefficients");
      break;
    case Construction::poly: {
      if (!sigma_id || !t_division) break;
      if (delta.kind() == MapKind::derivative) {
        if (r.field.is_rational()) return certified("weyl-nonvanishing-weights");
        auto [ideal, y_eff] = monomial_ideal(r.field.characteristic());
        return witness("vanishing-weight-ideal", std::move(ideal), y_eff);
      }
      if (const AdditiveMap* alpha = kernel_child(delta, MapKind::scale)) {
        if (auto ord = root_of_unity_order(alpha->scale_factor())) {
          auto [ideal, y_eff] = monomial_ideal(*ord);
          v.notes.push_back("q has multiplicative order " + std::to_string(*ord));
          return witness("root-of-unity-ideal", std::move(ideal), y_eff);
        }
        return certified("non-root-of-unity");
      }
      if (delta.structurally_zero()) {
        auto [ideal, y_eff] = monomial_ideal(1);
        return witness("zero-derivation-ideal", std::move(ideal), y_eff);
      }
      if (delta.kind() == MapKind::weighted_derivative) {
        v.notes.push_back("explicit weights cover only k_1..k_" + std::to_string(delta.weights().size()));
      }
      break;
    }
    case Construction::quotient: {
      if (!t_division) break;
      // Every ideal of T[Y]/(Y^m) with T a division algebra is some (Y^j).
      const std::size_t m = r.modulus_exponent, dim = r.capped_dimension(y);
      for (std::size_t j = 1; j < m; ++j) {
        std::vector<std::size_t> slots;
        for (std::size_t k = j; k < m; ++k) slots.push_back(k);
        auto ideal = slot_span(r, slots);
        if (maps_preserve(sigma, delta, ideal, dim)) return witness("quotient-ideal-chain", std::move(ideal), y);
      }
      return certified("quotient-ideal-chain");
    }
    case Construction::functions: {
      if (!t_division || r.points > 16) break;
      // Every ideal of T^n with T simple is supported on a subset of points.
      const std::size_t n = r.points, dim = r.capped_dimension(y);
      const AdditiveMap* g = sigma_id ? kernel_child(delta, MapKind::pullback) : nullptr;
      for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> slots;
        for (std::size_t x = 0; x < n; ++x) {
          if (mask >> x & 1) slots.push_back(x);
        }
        auto ideal = slot_span(r, slots);
        if (maps_preserve(sigma, delta, ideal, dim)) {
          if (g) {
            v.cross_checks.push_back(std::string("single-cycle criterion: ") +
                                     (is_single_cycle(g->permutation()) ? "disagrees" : "agrees"));
          }
          return witness("invariant-support-subsets", std::move(ideal), y);
        }
      }
      if (g) {
        v.cross_checks.push_back(std::string("single-cycle criterion: ") +
                                 (is_single_cycle(g->permutation()) ? "agrees" : "disagrees"));
      }
      return certified("invariant-support-subsets");
    }
  }

  // Stage 2: exhaustive or witness search, only meaningful in finite dimension.
  if (r.finite_dimensional()) {
    const std::size_t dim = r.capped_dimension(y);
    if (finite_enumerable(r, dim)) {
      std::optional<InvariantIdeal> found;
      for_each_projective(r.field, dim, [&](const Vec& x) {
        auto ideal = invariant_ideal(sigma, delta, {from_coords(r, x)}, y);
        if (ideal.contains_one) return true;
        found = std::move(ideal);
        return false;
      });
      if (found) return witness("exhaustive-element-enumeration", std::move(found->basis), y);
      return certified("exhaustive-element-enumeration");
    }
    for (const auto& b : capped_basis(r, y)) {
      auto ideal = invariant_ideal(sigma, delta, {b}, y);
      if (!ideal.contains_one) return witness("invariant-ideal-witness-search", std::move(ideal.basis), y);
    }
    v.notes.push_back("every basis element generates the whole ring; other ideals were not enumerated");
  } else {
    v.notes.push_back("no structured criterion applies to " + r.to_string());
  }
  v.criterion = "none";
  return v;
}

Verdict simplicity_verdict(const OreHandle& h, const CapProfile& caps) {
  caps.validate();
  require_sigma_identity(h, "simplicity_verdict");
  require_simplicity_domain(h, "simplicity_verdict");
  Verdict v = make_verdict("simple", caps);
  const RingDescriptor& r = h->ring();
  const AdditiveMap& delta = h->delta();
  const auto y = caps.y_cap();

  const Verdict probe = delta_simplicity_probe(h, caps);
  v.cross_checks.push_back("delta-simplicity: " + to_string(probe.outcome) + " (" + probe.criterion + ")");
  for (const auto& c : probe.cross_checks) v.cross_checks.push_back(c);
  if (probe.outcome == Outcome::fails_with_witness) {
    // A proper invariant ideal J of R lifts to the proper ideal with coefficients in J.
    v.outcome = Outcome::fails_with_witness;
    v.criterion = "lifted-invariant-ideal";
    v.ideal = probe.ideal;
    v.polys = lifted_ideal(h, probe.ideal, caps);
    const auto lifted = validate_lifted_ideal(h, probe.ideal, caps);
    if (!lifted.holds) v.notes.push_back("lifted ideal re-validation failed: " + lifted.violated);
    v.witness_validated = probe.witness_validated && lifted.holds;
    return v;
  }
  if (probe.outcome == Outcome::inconclusive_within_caps) {
    v.criterion = "none";
    v.notes.push_back("delta-simplicity of R is undecided");
    for (const auto& n : probe.notes) v.notes.push_back(n);
    return v;
  }

  // R is delta-simple; simplicity now hinges on Z(S) being a field.
  const Verdict central = minimal_monic_central(h, caps);
  const bool found = central.criterion != "none";
  if (found && central.outcome == Outcome::holds_certified) {
    // A non-constant monic central b is not invertible, so S b is a proper ideal.
    const OrePoly& b = central.polys.front();
    v.outcome = Outcome::fails_with_witness;
    v.criterion = "non-constant-monic-central";
    v.polys = {b};
    const auto ideal = ideal_saturate(h, {b}, caps);
    v.witness_validated = central.witness_validated && !ideal.contains_one();
    v.notes.push_back("witness ideal S*(" + to_text(b) + "), " + std::to_string(ideal.basis.size()) +
                      " basis elements within caps, 1 excluded");
    return v;
  }

  const bool char0 = r.field.is_rational();
  std::vector<std::string> routes;
  if (r.construction == Construction::poly && coefficients_division(r) && char0 &&
      delta.kind() == MapKind::derivative) {
    routes.push_back("weyl-nonvanishing-weights");
  }
  if (const AdditiveMap* alpha = kernel_child(delta, MapKind::scale);
      alpha && r.construction == Construction::poly && coefficients_division(r) && char0 &&
      !root_of_unity_order(alpha->scale_factor())) {
    routes.push_back("non-root-of-unity-deformation");
  }
  if (r.is_associative() && char0) {
    const auto der = is_derivation(delta, y);
    if (!der.holds) routes.push_back("associative-coefficients-non-derivation");
  }
  if (char0 && r.is_commutative() && delta_nonzero(delta, y)) {
    const bool derivation = delta.kind() == MapKind::derivative ||
                            (r.finite_dimensional() && is_derivation(delta, y).holds);
    if (derivation) routes.push_back("commutative-derivation-center");
  }
  if (found) {
    v.polys = central.polys;
    v.notes.push_back("capped center has a non-constant monic candidate " + to_text(central.polys.front()));
  }
  if (!routes.empty()) {
    v.outcome = Outcome::holds_certified;
    v.criterion = routes.front();
    for (std::size_t i = 1; i < routes.size(); ++i) v.cross_checks.push_back("route " + routes[i] + ": certified");
    v.cross_checks.push_back(std::string("capped center: ") + (found ? "disagrees" : "agrees, constants only"));
    return v;
  }
  v.criterion = "none";
  if (!found) v.notes.push_back("simple up to evidence caps " + caps.to_string());
  return v;
}

Verdict center_field_check(const OreHandle& h, const CapProfile& caps) {
  caps.validate();
  Verdict v = make_verdict("Z(R)_delta^sigma is a field", caps);
  const RingDescriptor& r = h->ring();
  const auto y = caps.y_cap();
  auto cands = constants(h, fixed_kernel_basis(h->sigma(), h->delta(), y));
  const auto rb = constants(h, capped_basis(r, y));
  restrict_to_commuting(cands, h, rb);
  restrict_to_associating(cands, h, rb);
  const auto z = echelonize(h, cands, caps);
  for (const auto& p : z) v.ideal.push_back(p.coeff(0));
  const std::size_t d = r_dim(h, caps);
  const Vec one = one_vec(r, d);
  std::vector<Vec> zc;
  for (const auto& e : v.ideal) zc.push_back(*e.coords_within(d));

  // Inverse of x inside span(Z), confirmed on both sides.
  auto inverse_in_span = [&](const RingElement& x) -> std::optional<RingElement> {
    std::vector<Vec> cols;
    for (const auto& e : v.ideal) {
      auto c = (x * e).coords_within(d);
      if (!c) return std::nullopt;
      cols.push_back(std::move(*c));
    }
    auto w = solve_columns(r.field, cols, one);
    if (!w) return std::nullopt;
    RingElement inv = RingElement::zero(r);
    for (std::size_t k = 0; k < v.ideal.size(); ++k) inv += v.ideal[k].scaled((*w)[k]);
    if (!(x * inv).is_one() || !(inv * x).is_one()) return std::nullopt;
    return inv;
  };
  const bool exact = r.finite_dimensional();
  for (const auto& e : v.ideal) {
    if (inverse_in_span(e)) continue;
    if (exact) {
      v.outcome = Outcome::fails_with_witness;
      v.criterion = "inverse-in-center-span";
      v.polys = {OrePoly::constant(h, e)};
      v.witness_validated = true;
      v.notes.push_back("no inverse of " + to_text(e) + " in span(Z(R)_delta^sigma)");
    } else {
      v.criterion = "none";
      v.notes.push_back("no inverse of " + to_text(e) + " within caps");
    }
    return v;
  }
  if (v.ideal.size() == 1) {
    if (exact) {
      v.outcome = Outcome::holds_certified;
      v.criterion = "scalar-center";
    } else {
      v.criterion = "none";
      v.notes.push_back("only scalars up to Y-degree " + std::to_string(*y));
    }
    return v;
  }
  if (exact && finite_enumerable(r, v.ideal.size())) {
    bool all = true;
    for_each_projective(r.field, v.ideal.size(), [&](const Vec& x) {
      RingElement e = RingElement::zero(r);
      for (std::size_t k = 0; k < x.size(); ++k) e += v.ideal[k].scaled(x[k]);
      if (inverse_in_span(e)) return true;
      all = false;
      v.polys = {OrePoly::constant(h, e)};
      return false;
    });
    v.outcome = all ? Outcome::holds_certified : Outcome::fails_with_witness;
    v.criterion = "exhaustive-element-enumeration";
    v.witness_validated = !all;
    return v;
  }
  v.criterion = "none";
  v.notes.push_back("basis elements are invertible; general elements were not enumerated");
  return v;
}

DynamicsReport dynamics_report(const OreHandle& h, const CapProfile& caps) {
  const AdditiveMap* g = kernel_child(h->delta(), MapKind::pullback);
  if (!g || !h->sigma().structurally_identity()) {
    throw DomainError("dynamics report needs R[X; id, kernel(pullback(g))], got " + h->to_string());
  }
  DynamicsReport out;
  out.simplicity = simplicity_verdict(h, caps);
  out.center = center_basis(h, caps);
  out.minimal = is_single_cycle(g->permutation());
  const std::size_t n = g->permutation().size();
  out.discrete_minimal_discrepancy =
      out.minimal && n > 1 && out.simplicity.outcome == Outcome::holds_certified;
  if (out.discrete_minimal_discrepancy) {
    out.note = "minimal action on a discrete space of " + std::to_string(n) +
               " points, yet the ring is certified simple; a non-discreteness requirement would exclude it";
  } else if (out.minimal && n > 1) {
    out.note = "minimal action on " + std::to_string(n) + " discrete points; simplicity not certified";
  } else {
    out.note = "action is not minimal";
  }
  return out;
}

}  // namespace ore
