#ifndef HCUBE_IDENTITIES_HPP
#define HCUBE_IDENTITIES_HPP

#include <cstdint>

#include "hcube/cube.hpp"

namespace hcube {

/// Both sides of one exact double-counting identity.
struct IdentityReport {
  BigInt lhs;
  BigInt rhs;
  bool match = false;
  int n = 0;
  int l = 0;
  std::uint64_t set_size = 0;
};

/// Σ_{v ∈ V_n} h_l(v)²  against  Σ_{x ∈ S} Σ_{k=0}^{l} C(2k,k)·C(n−2k,l−k)·h_{2k}(x).
/// Both count pairs (x, y) with x ∈ S and a walk x → y → z of two l-flips
/// ending in S. Requires 1 <= l <= n/2.
IdentityReport verify_identity_one(const PointSet& s, int l);

/// Σ_{v ∈ S} h_l(v)²  against  Σ_{x, z ∈ S} |S ∩ Γ_l(x) ∩ Γ_l(z)|.
/// Both count triples (x, y, z) ∈ S³ with dist(x,y) = dist(y,z) = l.
/// Requires 1 <= l <= n/2.
IdentityReport verify_identity_two(const PointSet& s, int l);

struct MantelReport {
  std::uint64_t edge_count = 0;
  bool triangle_found = false;
  /// edge_count <= n²/4
  bool within_mantel_bound = false;
};

/// The graph on [n] whose edges are the supports of y ⊕ x for y ∈ S at
/// distance two from x. Requires x ∈ S.
MantelReport mantel_diagnostic(const PointSet& s, const Vertex& x);

}  // namespace hcube

#endif  // HCUBE_IDENTITIES_HPP
