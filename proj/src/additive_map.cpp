#include "ore/additive_map.hpp"

#include <algorithm>
#include <numeric>

#include "ore/linalg.hpp"

namespace ore {

struct AdditiveMap::Node {
  MapKind kind;
  std::vector<Scalar> weights;       // weighted_derivative; also combination coefficients
  Scalar q;                          // scale
  std::vector<std::size_t> perm;     // pullback
  std::optional<RingElement> a;      // inner
  std::vector<AdditiveMap> children; // kernel, combination, composition
};

namespace {

void require_variable(const RingDescriptor& r, const char* what) {
  if (!r.has_variable()) {
    throw DomainError(std::string(what) + " needs a ring with variable Y, got " + r.to_string());
  }
}

void require_same_ring(const RingDescriptor& a, const RingDescriptor& b) {
  if (!(a == b)) throw MismatchError("maps act on different rings: " + a.to_string() + " vs " + b.to_string());
}

}  // namespace

AdditiveMap AdditiveMap::identity(const RingDescriptor& r) {
  return AdditiveMap(r, std::make_shared<const Node>(Node{MapKind::identity, {}, Scalar::one(r.field), {}, {}, {}}));
}

AdditiveMap AdditiveMap::zero(const RingDescriptor& r) {
  return AdditiveMap(r, std::make_shared<const Node>(Node{MapKind::zero, {}, Scalar::one(r.field), {}, {}, {}}));
}

AdditiveMap AdditiveMap::derivative(const RingDescriptor& r) {
  require_variable(r, "derivative");
  return AdditiveMap(r, std::make_shared<const Node>(Node{MapKind::derivative, {}, Scalar::one(r.field), {}, {}, {}}));
}

AdditiveMap AdditiveMap::weighted_derivative(const RingDescriptor& r, std::vector<Scalar> weights) {
  require_variable(r, "weighted derivative");
  for (std::size_t n = 0; n < weights.size(); ++n) {
    if (!(weights[n].field() == r.field)) throw MismatchError("weight k_" + std::to_string(n + 1) + " has the wrong field");
    if (weights[n].is_zero()) throw DomainError("weight k_" + std::to_string(n + 1) + " is zero");
  }
  if (r.construction == Construction::quotient && weights.size() + 1 < r.modulus_exponent) {
    throw DomainError("weighted derivative on " + r.to_string() + " needs " +
                      std::to_string(r.modulus_exponent - 1) + " weights");
  }
  return AdditiveMap(r, std::make_shared<const Node>(
                            Node{MapKind::weighted_derivative, std::move(weights), Scalar::one(r.field), {}, {}, {}}));
}

AdditiveMap AdditiveMap::scale(const RingDescriptor& r, const Scalar& q) {
  require_variable(r, "scale");
  if (!(q.field() == r.field)) throw MismatchError("scale factor has the wrong field");
  if (q.is_zero()) throw DomainError("scale factor must be nonzero");
  return AdditiveMap(r, std::make_shared<const Node>(Node{MapKind::scale, {}, q, {}, {}, {}}));
}

AdditiveMap AdditiveMap::pullback(const RingDescriptor& r, std::vector<std::size_t> g) {
  if (r.construction != Construction::functions) {
    throw DomainError("pullback needs a function ring, got " + r.to_string());
  }
  if (g.size() != r.points) {
    throw DomainError("pullback permutation has " + std::to_string(g.size()) + " entries, expected " +
                      std::to_string(r.points));
  }
  std::vector<bool> seen(g.size(), false);
  for (std::size_t x : g) {
    if (x >= g.size() || seen[x]) throw DomainError("pullback map is not a permutation");
    seen[x] = true;
  }
  return AdditiveMap(r, std::make_shared<const Node>(Node{MapKind::pullback, {}, Scalar::one(r.field), std::move(g), {}, {}}));
}

AdditiveMap AdditiveMap::kernel(const AdditiveMap& alpha) {
  return AdditiveMap(alpha.ring_,
                     std::make_shared<const Node>(Node{MapKind::kernel, {}, Scalar::one(alpha.ring_.field), {}, {}, {alpha}}));
}

AdditiveMap AdditiveMap::inner(const RingElement& a) {
  return AdditiveMap(a.ring(), std::make_shared<const Node>(Node{MapKind::inner, {}, Scalar::one(a.ring().field), {}, a, {}}));
}

AdditiveMap AdditiveMap::combination(std::vector<std::pair<Scalar, AdditiveMap>> terms) {
  if (terms.empty()) throw DomainError("empty linear combination of maps");
  const RingDescriptor r = terms.front().second.ring_;
  std::vector<Scalar> coeffs;
  std::vector<AdditiveMap> maps;
  for (auto& [c, f] : terms) {
    require_same_ring(r, f.ring_);
    if (!(c.field() == r.field)) throw MismatchError("combination coefficient has the wrong field");
    coeffs.push_back(c);
    maps.push_back(f);
  }
  return AdditiveMap(r, std::make_shared<const Node>(
                            Node{MapKind::combination, std::move(coeffs), Scalar::one(r.field), {}, {}, std::move(maps)}));
}

AdditiveMap AdditiveMap::composition(std::vector<AdditiveMap> maps) {
  if (maps.empty()) throw DomainError("empty composition of maps");
  const RingDescriptor r = maps.front().ring_;
  for (const auto& f : maps) require_same_ring(r, f.ring_);
  return AdditiveMap(r, std::make_shared<const Node>(Node{MapKind::composition, {}, Scalar::one(r.field), {}, {}, std::move(maps)}));
}

MapKind AdditiveMap::kind() const { return node_->kind; }
const std::vector<Scalar>& AdditiveMap::weights() const { return node_->weights; }
const Scalar& AdditiveMap::scale_factor() const { return node_->q; }
const std::vector<std::size_t>& AdditiveMap::permutation() const { return node_->perm; }
const RingElement& AdditiveMap::element() const {
  if (!node_->a) throw DomainError("map has no element payload");
  return *node_->a;
}
const std::vector<AdditiveMap>& AdditiveMap::children() const { return node_->children; }
const std::vector<Scalar>& AdditiveMap::coefficients() const { return node_->weights; }

RingElement AdditiveMap::apply(const RingElement& r) const {
  if (!(r.ring() == ring_)) throw MismatchError("map on " + ring_.to_string() + " applied to element of " + r.ring().to_string());
  const std::size_t u = ring_.unit_count();
  const std::span<const Scalar> c = r.coords();
  const Field f = ring_.field;
  switch (node_->kind) {
    case MapKind::identity: return r;
    case MapKind::zero: return RingElement::zero(ring_);
    case MapKind::derivative:
    case MapKind::weighted_derivative: {
      const std::size_t slots = r.slot_count();
      if (slots <= 1) return RingElement::zero(ring_);
      std::vector<Scalar> out((slots - 1) * u, Scalar::zero(f));
      for (std::size_t s = 1; s < slots; ++s) {
        bool nonzero = false;
        for (std::size_t k = 0; k < u; ++k) nonzero = nonzero || !c[s * u + k].is_zero();
        if (!nonzero) continue;
        Scalar k_s = Scalar::from_int(f, static_cast<long long>(s));
        if (node_->kind == MapKind::weighted_derivative) {
          if (s > node_->weights.size()) {
            throw DomainError("weight list too short: degree " + std::to_string(s) + " needs k_" + std::to_string(s));
          }
          k_s = node_->weights[s - 1];
        }
        for (std::size_t k = 0; k < u; ++k) out[(s - 1) * u + k] = k_s * c[s * u + k];
      }
      return RingElement(ring_, std::move(out));
    }
    case MapKind::scale: {
      std::vector<Scalar> out(c.begin(), c.end());
      Scalar power = Scalar::one(f);
      for (std::size_t s = 0; s < r.slot_count(); ++s) {
        for (std::size_t k = 0; k < u; ++k) out[s * u + k] *= power;
        power *= node_->q;
      }
      return RingElement(ring_, std::move(out));
    }
    case MapKind::pullback: {
      std::vector<Scalar> out(c.size(), Scalar::zero(f));
      for (std::size_t x = 0; x < node_->perm.size(); ++x) {
        const std::size_t gx = node_->perm[x];
        for (std::size_t k = 0; k < u; ++k) out[x * u + k] = c[gx * u + k];
      }
      return RingElement(ring_, std::move(out));
    }
    case MapKind::kernel: return node_->children[0].apply(r) - r;
    case MapKind::inner: return (*node_->a) * r - r * (*node_->a);
    case MapKind::combination: {
      RingElement out = RingElement::zero(ring_);
      for (std::size_t i = 0; i < node_->children.size(); ++i) {
        out += node_->children[i].apply(r).scaled(node_->weights[i]);
      }
      return out;
    }
    case MapKind::composition: {
      RingElement out = r;
      for (auto it = node_->children.rbegin(); it != node_->children.rend(); ++it) out = it->apply(out);
      return out;
    }
  }
  throw DomainError("unknown map kind");
}

std::optional<AdditiveMap> AdditiveMap::inverse() const {
  switch (node_->kind) {
    case MapKind::identity: return *this;
    case MapKind::scale: return scale(ring_, node_->q.inverse());
    case MapKind::pullback: {
      std::vector<std::size_t> inv(node_->perm.size());
      for (std::size_t x = 0; x < inv.size(); ++x) inv[node_->perm[x]] = x;
      return pullback(ring_, std::move(inv));
    }
    case MapKind::composition: {
      std::vector<AdditiveMap> inv;
      for (auto it = node_->children.rbegin(); it != node_->children.rend(); ++it) {
        auto i = it->inverse();
        if (!i) return std::nullopt;
        inv.push_back(*i);
      }
      return composition(std::move(inv));
    }
    default: return std::nullopt;
  }
}

bool AdditiveMap::structurally_identity() const {
  switch (node_->kind) {
    case MapKind::identity: return true;
    case MapKind::scale: return node_->q.is_one();
    case MapKind::pullback: {
      for (std::size_t x = 0; x < node_->perm.size(); ++x) {
        if (node_->perm[x] != x) return false;
      }
      return true;
    }
    case MapKind::composition:
      return std::all_of(node_->children.begin(), node_->children.end(),
                         [](const AdditiveMap& m) { return m.structurally_identity(); });
    default: return false;
  }
}

bool AdditiveMap::structurally_zero() const {
  switch (node_->kind) {
    case MapKind::zero: return true;
    case MapKind::kernel: return node_->children[0].structurally_identity();
    case MapKind::inner: {
      // Elements with scalar Cayley-Dickson parts in every slot are central.
      const auto& a = *node_->a;
      if (ring_.is_commutative()) return true;
      for (std::size_t i = 0; i < a.coords().size(); ++i) {
        if (i % ring_.unit_count() != 0 && !a.coords()[i].is_zero()) return false;
      }
      return true;
    }
    case MapKind::combination:
      for (std::size_t i = 0; i < node_->children.size(); ++i) {
        if (!node_->weights[i].is_zero() && !node_->children[i].structurally_zero()) return false;
      }
      return true;
    case MapKind::composition:
      return std::any_of(node_->children.begin(), node_->children.end(),
                         [](const AdditiveMap& m) { return m.structurally_zero(); });
    default: return false;
  }
}

std::string AdditiveMap::to_string() const {
  auto join = [](const std::vector<std::string>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
    return s;
  };
  switch (node_->kind) {
    case MapKind::identity: return "identity";
    case MapKind::zero: return "zero";
    case MapKind::derivative: return "derivative";
    case MapKind::weighted_derivative: {
      std::vector<std::string> parts;
      for (const auto& w : node_->weights) parts.push_back(w.to_string());
      return "weighted(" + join(parts) + ")";
    }
    case MapKind::scale: return "scale(" + node_->q.to_string() + ")";
    case MapKind::pullback: {
      std::vector<std::string> parts;
      for (auto x : node_->perm) parts.push_back(std::to_string(x));
      return "pullback(" + join(parts) + ")";
    }
    case MapKind::kernel: return "kernel(" + node_->children[0].to_string() + ")";
    case MapKind::inner: return "inner(" + to_text(*node_->a) + ")";
    case MapKind::combination: {
      std::vector<std::string> parts;
      for (std::size_t i = 0; i < node_->children.size(); ++i) {
        parts.push_back(node_->weights[i].to_string() + "*" + node_->children[i].to_string());
      }
      return "sum(" + join(parts) + ")";
    }
    case MapKind::composition: {
      std::vector<std::string> parts;
      for (const auto& m : node_->children) parts.push_back(m.to_string());
      return "compose(" + join(parts) + ")";
    }
  }
  return "?";
}

namespace {

Certificate ok(bool capped) { return Certificate{true, capped, {}, {}}; }

Certificate bad(std::string what, std::vector<RingElement> tuple, bool capped) {
  return Certificate{false, capped, std::move(what), std::move(tuple)};
}

// Coordinates of every element padded to a common length.
std::vector<Vec> padded(const std::vector<RingElement>& xs, std::size_t min_dim) {
  std::size_t dim = min_dim;
  for (const auto& x : xs) dim = std::max(dim, x.coords().size());
  std::vector<Vec> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(*x.coords_within(dim));
  return out;
}

}  // namespace

Certificate is_homomorphism(const AdditiveMap& sigma, std::optional<unsigned> y_cap) {
  const RingDescriptor& r = sigma.ring();
  const bool capped = !r.finite_dimensional();
  if (!sigma(ring_one(r)).is_one()) return bad("sigma(1) != 1", {ring_one(r)}, capped);
  const auto basis = capped_basis(r, y_cap);
  std::vector<RingElement> images;
  for (const auto& b : basis) images.push_back(sigma(b));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (!(sigma(basis[i] * basis[j]) == images[i] * images[j])) {
        return bad("sigma(ab) != sigma(a)sigma(b)", {basis[i], basis[j]}, capped);
      }
    }
  }
  return ok(capped);
}

Certificate is_sigma_derivation(const AdditiveMap& delta, const AdditiveMap& sigma, std::optional<unsigned> y_cap) {
  const RingDescriptor& r = delta.ring();
  require_same_ring(r, sigma.ring());
  const bool capped = !r.finite_dimensional();
  const auto basis = capped_basis(r, y_cap);
  std::vector<RingElement> s_img, d_img;
  for (const auto& b : basis) {
    s_img.push_back(sigma(b));
    d_img.push_back(delta(b));
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (!(delta(basis[i] * basis[j]) == s_img[i] * d_img[j] + d_img[i] * basis[j])) {
        return bad("delta(ab) != sigma(a)delta(b) + delta(a)b", {basis[i], basis[j]}, capped);
      }
    }
  }
  return ok(capped);
}

Certificate is_derivation(const AdditiveMap& delta, std::optional<unsigned> y_cap) {
  auto c = is_sigma_derivation(delta, AdditiveMap::identity(delta.ring()), y_cap);
  if (!c.holds) c.violated = "delta(ab) != a delta(b) + delta(a) b";
  return c;
}

Certificate maps_agree(const AdditiveMap& f, const AdditiveMap& g, std::optional<unsigned> y_cap) {
  require_same_ring(f.ring(), g.ring());
  const bool capped = !f.ring().finite_dimensional();
  for (const auto& b : capped_basis(f.ring(), y_cap)) {
    if (!(f(b) == g(b))) return bad("f(b) != g(b)", {b}, capped);
  }
  return ok(capped);
}

std::vector<RingElement> fixed_kernel_basis(const AdditiveMap& sigma, const AdditiveMap& delta,
                                            std::optional<unsigned> y_cap) {
  const RingDescriptor& r = delta.ring();
  require_same_ring(r, sigma.ring());
  const auto basis = capped_basis(r, y_cap);
  std::vector<RingElement> s_def, d_img;
  for (const auto& b : basis) {
    s_def.push_back(sigma(b) - b);
    d_img.push_back(delta(b));
  }
  const auto sc = padded(s_def, 0), dc = padded(d_img, 0);
  // Unknowns are the coordinates over `basis`; one equation per image coordinate.
  std::vector<Vec> rows;
  const std::size_t ns = sc.empty() ? 0 : sc[0].size(), nd = dc.empty() ? 0 : dc[0].size();
  for (std::size_t k = 0; k < ns; ++k) {
    Vec row;
    for (std::size_t j = 0; j < basis.size(); ++j) row.push_back(sc[j][k]);
    if (!is_zero_vec(row)) rows.push_back(std::move(row));
  }
  for (std::size_t k = 0; k < nd; ++k) {
    Vec row;
    for (std::size_t j = 0; j < basis.size(); ++j) row.push_back(dc[j][k]);
    if (!is_zero_vec(row)) rows.push_back(std::move(row));
  }
  std::vector<RingElement> out;
  for (const auto& x : nullspace(r.field, basis.size(), rows)) out.push_back(from_coords(r, x));
  return out;
}

KernelLinearity kernel_linearity_check(const AdditiveMap& delta, const AdditiveMap& sigma,
                                       std::optional<unsigned> y_cap) {
  const RingDescriptor& r = delta.ring();
  KernelLinearity out;
  out.within_caps = !r.finite_dimensional();
  out.kernel = fixed_kernel_basis(sigma, delta, y_cap);
  out.right = ok(out.within_caps);
  out.left = ok(out.within_caps);
  for (const auto& x : capped_basis(r, y_cap)) {
    const RingElement dx = delta(x), sx = sigma(x);
    for (const auto& s : out.kernel) {
      if (out.right.holds && (!(delta(x * s) == dx * s) || !(sigma(x * s) == sx * s))) {
        out.right = bad("delta(rs) != delta(r)s or sigma(rs) != sigma(r)s", {x, s}, out.within_caps);
      }
      if (out.left.holds && (!(delta(s * x) == s * dx) || !(sigma(s * x) == s * sx))) {
        out.left = bad("delta(sr) != s delta(r) or sigma(sr) != s sigma(r)", {s, x}, out.within_caps);
      }
    }
  }
  return out;
}

Certificate kernel_derivation_identity_check(const AdditiveMap& alpha, std::optional<unsigned> y_cap) {
  const RingDescriptor& r = alpha.ring();
  if (!r.is_associative()) throw DomainError("Leibniz defect identity needs an associative ring, got " + r.to_string());
  const AdditiveMap d = AdditiveMap::kernel(alpha);
  const bool capped = !r.finite_dimensional();
  const auto basis = capped_basis(r, y_cap);
  std::vector<RingElement> img;
  for (const auto& b : basis) img.push_back(d(b));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const RingElement defect = d(basis[i] * basis[j]) - img[i] * basis[j] - basis[i] * img[j];
      if (!(defect == img[i] * img[j])) {
        return bad("delta(rs) - delta(r)s - r delta(s) != delta(r)delta(s)", {basis[i], basis[j]}, capped);
      }
    }
  }
  return ok(capped);
}

}  // namespace ore
