#ifndef HCUBE_STABILITY_HPP
#define HCUBE_STABILITY_HPP

#include <cstdint>
#include <vector>

#include "hcube/cube.hpp"

namespace hcube {

/// l-subsets of [n] (as bitmasks over coordinates) that lead from x to a
/// member of S when flipped. Sorted.
std::vector<std::uint64_t> local_view(const PointSet& s, const Vertex& x, int l);

/// Size of S²(x) Δ (C([n],2) ∖ C(S¹(x),2)).
std::uint64_t pair_defect(const PointSet& s, std::uint64_t x);

struct StabilityReport {
  int n = 0;
  std::uint64_t set_size = 0;
  Rational delta;
  /// x ∉ S with h_1(x) < (1−δ)n.
  std::uint64_t bad_a = 0;
  /// x ∈ S with |h_1(x) − n/2| > δn.
  std::uint64_t bad_b = 0;
  /// x ∈ S whose pair defect exceeds δ·C(n,2).
  std::uint64_t bad_c = 0;
  /// x ∈ S failing (b) or (c).
  std::uint64_t bad_bc_union = 0;
  /// (bad_a + bad_bc_union) / 2^n: size of the union of all exceptional sets,
  /// which bounds the smallest exceptional set T from above.
  Rational exceptional_fraction;
  /// max(0, 2/3 − |S|/2^n).
  Rational epsilon;
  /// 4·ε^{1/6}, informational only.
  double proof_delta = 0.0;
  /// Index h = 0..n.
  std::vector<std::uint64_t> h1_hist_in;
  std::vector<std::uint64_t> h1_hist_out;
};

/// Requires 0 <= delta <= 1. All threshold comparisons are exact.
StabilityReport stability_report(const PointSet& s, const Rational& delta);

}  // namespace hcube

#endif  // HCUBE_STABILITY_HPP
