#include "hcube/stability.hpp"

#include <algorithm>
#include <cmath>

namespace hcube {

std::vector<std::uint64_t> local_view(const PointSet& s, const Vertex& x, int l) {
  if (s.dim() != x.dim()) throw CubeError("vertex and point set dimensions differ");
  if (l < 0 || l > s.dim()) throw CubeError("local view radius out of range");
  std::vector<std::uint64_t> out;
  for_each_weight_mask(s.dim(), l, [&](std::uint64_t m) {
    if (s.contains(x.bits() ^ m)) out.push_back(m);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t pair_defect(const PointSet& s, std::uint64_t x) {
  const int n = s.dim();
  std::uint64_t ones = 0;
  for (int i = 0; i < n; ++i) {
    if (s.contains(x ^ (std::uint64_t{1} << i))) ones |= std::uint64_t{1} << i;
  }
  // Target: pairs not inside S¹(x). Defect counts pairs of S²(x) inside
  // S¹(x) plus target pairs missing from S²(x).
  std::uint64_t defect = 0;
  for_each_weight_mask(n, 2, [&](std::uint64_t m) {
    const bool present = s.contains(x ^ m);
    const bool target = (m & ones) != m;
    defect += present != target;
  });
  return defect;
}

StabilityReport stability_report(const PointSet& s, const Rational& delta) {
  if (delta < Rational(0) || delta > Rational(1)) throw CubeError("delta must lie in [0, 1]");
  const int n = s.dim();
  // 128-bit products keep cross-multiplication exact for any int64 delta.
  using Wide = __int128;
  const Wide p = delta.numerator();
  const Wide q = delta.denominator();
  const Wide nn = n;
  const Wide pairs = binomial(n, 2);

  StabilityReport report;
  report.n = n;
  report.set_size = s.size();
  report.delta = delta;
  report.h1_hist_in.assign(static_cast<std::size_t>(n) + 1, 0);
  report.h1_hist_out.assign(static_cast<std::size_t>(n) + 1, 0);

  for (std::uint64_t x = 0; x < s.universe(); ++x) {
    Wide h1 = 0;
    for (int i = 0; i < n; ++i) h1 += s.contains(x ^ (std::uint64_t{1} << i));
    if (!s.contains(x)) {
      ++report.h1_hist_out[static_cast<std::size_t>(h1)];
      // h1 < (1 − p/q)·n
      if (q * h1 < (q - p) * nn) ++report.bad_a;
      continue;
    }
    ++report.h1_hist_in[static_cast<std::size_t>(h1)];
    // |h1 − n/2| > (p/q)·n
    const Wide spread = 2 * h1 - nn;
    const bool fails_b = (spread < 0 ? -spread : spread) * q > 2 * p * nn;
    // defect > (p/q)·C(n,2)
    const bool fails_c = static_cast<Wide>(pair_defect(s, x)) * q > p * pairs;
    report.bad_b += fails_b;
    report.bad_c += fails_c;
    report.bad_bc_union += fails_b || fails_c;
  }

  const auto universe = static_cast<std::int64_t>(s.universe());
  report.exceptional_fraction = Rational(static_cast<std::int64_t>(report.bad_a + report.bad_bc_union), universe);
  const Rational density(static_cast<std::int64_t>(report.set_size), universe);
  report.epsilon = std::max(Rational(0), Rational(2, 3) - density);
  report.proof_delta =
      4.0 * std::pow(boost::rational_cast<double>(report.epsilon), 1.0 / 6.0);
  return report;
}

}  // namespace hcube
