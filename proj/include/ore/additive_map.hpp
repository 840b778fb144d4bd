#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ore/ring.hpp"
#include "ore/ring_structure.hpp"

namespace ore {

enum class MapKind {
  identity,
  zero,
  derivative,           // Y^n -> n Y^(n-1)
  weighted_derivative,  // Y^n -> k_n Y^(n-1), explicit k_1, k_2, ...
  scale,                // Y -> qY
  pullback,             // f -> f o g on a function ring
  kernel,               // r -> alpha(r) - r
  inner,                // r -> a r - r a
  combination,          // r -> sum c_i f_i(r)
  composition,          // f_1(f_2(...f_k(r)))
};

/// Immutable additive map R -> R drawn from a fixed catalog. Every catalog map is
/// linear over the ground field. Construction validates the map against its ring
/// and throws DomainError on a tag/constructor mismatch.
class AdditiveMap {
 public:
  static AdditiveMap identity(const RingDescriptor& r);
  static AdditiveMap zero(const RingDescriptor& r);
  static AdditiveMap derivative(const RingDescriptor& r);
  /// weights[n-1] = k_n; every weight must be nonzero.
  static AdditiveMap weighted_derivative(const RingDescriptor& r, std::vector<Scalar> weights);
  static AdditiveMap scale(const RingDescriptor& r, const Scalar& q);
  /// g[x] is the image of point x; the map sends f to x -> f(g[x]).
  static AdditiveMap pullback(const RingDescriptor& r, std::vector<std::size_t> g);
  static AdditiveMap kernel(const AdditiveMap& alpha);
  static AdditiveMap inner(const RingElement& a);
  static AdditiveMap combination(std::vector<std::pair<Scalar, AdditiveMap>> terms);
  /// maps.back() is applied first.
  static AdditiveMap composition(std::vector<AdditiveMap> maps);

  const RingDescriptor& ring() const { return ring_; }
  MapKind kind() const;

  RingElement apply(const RingElement& r) const;
  RingElement operator()(const RingElement& r) const { return apply(r); }

  /// Inverse map, available for identity, scale and pullback.
  std::optional<AdditiveMap> inverse() const;
  /// Identity or zero decided from the descriptor alone (no evaluation).
  bool structurally_identity() const;
  bool structurally_zero() const;

  /// Accessors for the descriptor payload.
  const std::vector<Scalar>& weights() const;
  const Scalar& scale_factor() const;
  const std::vector<std::size_t>& permutation() const;
  const RingElement& element() const;
  const std::vector<AdditiveMap>& children() const;
  const std::vector<Scalar>& coefficients() const;

  /// Map expression text: identity, zero, derivative, weighted(k1,...), scale(q),
  /// pullback(g0,...), kernel(f), inner(a), sum(c1*f1, ...), compose(f1, ...).
  std::string to_string() const;

  friend bool operator==(const AdditiveMap& a, const AdditiveMap& b) { return a.to_string() == b.to_string() && a.ring_ == b.ring_; }

 private:
  struct Node;
  AdditiveMap(RingDescriptor r, std::shared_ptr<const Node> n) : ring_(std::move(r)), node_(std::move(n)) {}

  RingDescriptor ring_;
  std::shared_ptr<const Node> node_;
};

/// sigma(ab) = sigma(a) sigma(b) and sigma(1) = 1 on capped basis pairs.
Certificate is_homomorphism(const AdditiveMap& sigma, std::optional<unsigned> y_cap);
/// delta(ab) = sigma(a) delta(b) + delta(a) b on capped basis pairs.
Certificate is_sigma_derivation(const AdditiveMap& delta, const AdditiveMap& sigma, std::optional<unsigned> y_cap);
Certificate is_derivation(const AdditiveMap& delta, std::optional<unsigned> y_cap);
/// True when f agrees with g on every capped basis element.
Certificate maps_agree(const AdditiveMap& f, const AdditiveMap& g, std::optional<unsigned> y_cap);

/// Basis of R_delta^sigma = {a : sigma(a) = a, delta(a) = 0} intersected with the capped subspace.
std::vector<RingElement> fixed_kernel_basis(const AdditiveMap& sigma, const AdditiveMap& delta,
                                            std::optional<unsigned> y_cap);

struct KernelLinearity {
  std::vector<RingElement> kernel;  // capped basis of R_delta^sigma
  Certificate right;                // delta(rs) = delta(r)s, sigma(rs) = sigma(r)s
  Certificate left;                 // delta(sr) = s delta(r), sigma(sr) = s sigma(r)
  bool within_caps = false;
};

/// Checks one-sided linearity over the fixed kernel for r in the capped basis and s in the kernel basis.
KernelLinearity kernel_linearity_check(const AdditiveMap& delta, const AdditiveMap& sigma,
                                       std::optional<unsigned> y_cap);

/// delta(rs) - delta(r)s - r delta(s) = delta(r) delta(s) for delta = kernel(alpha) on capped
/// basis pairs. Requires an associative coefficient ring.
Certificate kernel_derivation_identity_check(const AdditiveMap& alpha, std::optional<unsigned> y_cap);

}  // namespace ore
