#include "hcube/identities.hpp"

#include <vector>

namespace hcube {

namespace {

void check_radius(const PointSet& s, int l) {
  if (l < 1 || 2 * l > s.dim()) throw CubeError("identity radius must satisfy 1 <= l <= n/2");
}

std::uint64_t count_at(const PointSet& s, std::uint64_t x, int l) {
  std::uint64_t count = 0;
  for_each_weight_mask(s.dim(), l, [&](std::uint64_t m) { count += s.contains(x ^ m); });
  return count;
}

}  // namespace

IdentityReport verify_identity_one(const PointSet& s, int l) {
  check_radius(s, l);
  const int n = s.dim();
  IdentityReport report{0, 0, false, n, l, s.size()};

  for (std::uint64_t v = 0; v < s.universe(); ++v) {
    const std::uint64_t h = count_at(s, v, l);
    report.lhs += BigInt(h) * h;
  }

  std::vector<std::uint64_t> coeff(static_cast<std::size_t>(l) + 1);
  for (int k = 0; k <= l; ++k) coeff[static_cast<std::size_t>(k)] = binomial(2 * k, k) * binomial(n - 2 * k, l - k);
  s.for_each([&](std::uint64_t x) {
    BigInt inner = 0;
    for (int k = 0; k <= l; ++k) inner += BigInt(coeff[static_cast<std::size_t>(k)]) * count_at(s, x, 2 * k);
    report.rhs += inner;
  });

  report.match = report.lhs == report.rhs;
  return report;
}

IdentityReport verify_identity_two(const PointSet& s, int l) {
  check_radius(s, l);
  const int n = s.dim();
  IdentityReport report{0, 0, false, n, l, s.size()};

  s.for_each([&](std::uint64_t v) {
    const std::uint64_t h = count_at(s, v, l);
    report.lhs += BigInt(h) * h;
  });

  // Only z at even distance <= 2l can share a point at distance l with x.
  s.for_each([&](std::uint64_t x) {
    const Vertex vx(n, x);
    std::uint64_t inner = 0;
    for (int j = 0; j <= l; ++j) {
      for_each_weight_mask(n, 2 * j, [&](std::uint64_t m) {
        if (s.contains(x ^ m)) inner += pair_sphere_count(s, vx, Vertex(n, x ^ m), l);
      });
    }
    report.rhs += inner;
  });

  report.match = report.lhs == report.rhs;
  return report;
}

MantelReport mantel_diagnostic(const PointSet& s, const Vertex& x) {
  if (!s.contains(x)) throw CubeError("mantel diagnostic requires x in S");
  const int n = s.dim();
  std::vector<std::uint64_t> adjacency(static_cast<std::size_t>(n), 0);
  MantelReport report;
  for_each_weight_mask(n, 2, [&](std::uint64_t m) {
    if (!s.contains(x.bits() ^ m)) return;
    const int i = std::countr_zero(m);
    const int j = 63 - std::countl_zero(m);
    adjacency[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    adjacency[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
    ++report.edge_count;
  });
  for (int i = 0; i < n && !report.triangle_found; ++i) {
    for (std::uint64_t rest = adjacency[static_cast<std::size_t>(i)]; rest != 0; rest &= rest - 1) {
      const int j = std::countr_zero(rest);
      if (j > i && (adjacency[static_cast<std::size_t>(i)] & adjacency[static_cast<std::size_t>(j)]) != 0) {
        report.triangle_found = true;
        break;
      }
    }
  }
  report.within_mantel_bound = 4 * report.edge_count <= static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  return report;
}

}  // namespace hcube
