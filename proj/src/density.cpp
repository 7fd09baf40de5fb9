#include "hcube/density.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hcube {

std::vector<int> LayerPattern::residue_list() const {
  std::vector<int> out;
  for (int r = 0; r < period; ++r) {
    if ((residues >> r) & 1U) out.push_back(r);
  }
  return out;
}

Rational LayerPattern::density() const {
  return Rational(std::popcount(residues), period);
}

PointSet LayerPattern::realize(int n) const {
  std::vector<int> weights;
  for (int w = 0; w <= n; ++w) {
    if (includes_weight(w)) weights.push_back(w);
  }
  return layer_set(n, weights);
}

namespace {

void check_pattern(const LayerPattern& pat) {
  if (pat.period < 1 || pat.period > kMaxPatternPeriod) throw CubeError("pattern period out of range");
  if (pat.period < 64 && (pat.residues >> pat.period) != 0) throw CubeError("pattern residue out of range");
}

// Distinct sets of weights {|x ^ flip| : x ∈ F} over all flips, as bitmasks
// over 0..d.
std::vector<std::uint64_t> weight_signatures(const Configuration& f) {
  const int d = f.dim();
  if (d > kMaxPatternDim) throw CubeError("pattern checks limited to configurations with d <= 20");
  std::set<std::uint64_t> sigs;
  for (std::uint64_t flip = 0; flip < (std::uint64_t{1} << d); ++flip) {
    std::uint64_t sig = 0;
    for (auto p : f.points()) sig |= std::uint64_t{1} << std::popcount(p ^ flip);
    sigs.insert(sig);
  }
  return {sigs.begin(), sigs.end()};
}

// Residues hit by a signature after shifting all weights by k.
std::uint64_t shifted_residues(std::uint64_t sig, int k, int m) {
  std::uint64_t out = 0;
  for (std::uint64_t rest = sig; rest != 0; rest &= rest - 1) {
    const int w = std::countr_zero(rest);
    out |= std::uint64_t{1} << ((w + k) % m);
  }
  return out;
}

// For period m: residue masks B such that a pattern I contains a copy iff
// B ⊆ I for some B.
std::vector<std::uint64_t> blocking_masks(const std::vector<std::vector<std::uint64_t>>& signatures, int m) {
  std::set<std::uint64_t> masks;
  for (const auto& sigs : signatures) {
    for (auto sig : sigs) {
      for (int k = 0; k < m; ++k) masks.insert(shifted_residues(sig, k, m));
    }
  }
  return {masks.begin(), masks.end()};
}

std::vector<std::vector<std::uint64_t>> family_signatures(const ConfigurationFamily& family) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& f : family.members()) out.push_back(weight_signatures(f));
  return out;
}

template <typename Fn>
void for_each_free_pattern(const ConfigurationFamily& family, int max_period, Fn&& fn) {
  if (max_period < 1 || max_period > kMaxSearchPeriod) throw CubeError("max period must lie in [1, 24]");
  const auto signatures = family_signatures(family);
  for (int m = 1; m <= max_period; ++m) {
    const auto blocks = blocking_masks(signatures, m);
    for (std::uint64_t set = 1; set < (std::uint64_t{1} << m); ++set) {
      const bool blocked = std::any_of(blocks.begin(), blocks.end(), [&](auto b) { return (b & ~set) == 0; });
      if (!blocked) fn(LayerPattern{m, set});
    }
  }
}

}  // namespace

bool layer_pattern_free(const Configuration& f, const LayerPattern& pat) {
  check_pattern(pat);
  for (auto sig : weight_signatures(f)) {
    for (int k = 0; k < pat.period; ++k) {
      if ((shifted_residues(sig, k, pat.period) & ~pat.residues) == 0) return false;
    }
  }
  return true;
}

PatternResult best_periodic_pattern(const ConfigurationFamily& family, int max_period) {
  PatternResult best{LayerPattern{1, 0}, Rational(0)};
  bool found = false;
  for_each_free_pattern(family, max_period, [&](const LayerPattern& pat) {
    const Rational density = pat.density();
    bool better = !found || density > best.density;
    if (found && density == best.density) {
      if (pat.period != best.pattern.period) {
        better = pat.period < best.pattern.period;
      } else {
        const auto a = pat.residue_list();
        const auto b = best.pattern.residue_list();
        better = std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
      }
    }
    if (better) {
      best = {pat, density};
      found = true;
    }
  });
  return best;
}

std::vector<LayerPattern> free_patterns(const ConfigurationFamily& family, int max_period) {
  std::vector<LayerPattern> out;
  for_each_free_pattern(family, max_period, [&](const LayerPattern& pat) { out.push_back(pat); });
  return out;
}

SubcubeMax max_subcube_points(const PointSet& s, int d) {
  if (d < 1 || d > s.dim()) throw CubeError("subcube dimension must lie in [1, n]");
  SubcubeMax best{0, Subcube{}};
  bool found = false;
  for_each_subcube(s.dim(), d, [&](const Subcube& c) {
    std::uint64_t count = 0;
    std::uint64_t sub = 0;
    do {
      count += s.contains(c.fixed | sub);
      sub = (sub - c.varying) & c.varying;
    } while (sub != 0);
    if (!found || count > best.count) {
      best = {count, c};
      found = true;
    }
    return best.count < (std::uint64_t{1} << d);
  });
  return best;
}

MuBounds mu_bounds(int d) {
  if (d < 2) throw CubeError("mu bounds require d >= 2");
  const auto t = t_values(d);
  return {t.t2 + t.t3, binomial(d, d / 2)};
}

std::vector<DensityRow> density_table(const ConfigurationFamily& family, int n_max, const ExcOptions& options) {
  if (n_max > kMaxPlacementDim) throw CubeError("density tables limited to n <= 16");
  std::vector<DensityRow> rows;
  for (int n = std::max(1, family.max_dim()); n <= n_max; ++n) {
    const ExcResult r = exc_exact(n, family, options);
    rows.push_back(DensityRow{n, r.value,
                              Rational(static_cast<std::int64_t>(r.value), std::int64_t{1} << n),
                              r.optimal, r.nodes});
  }
  return rows;
}

std::string density_csv(const std::vector<DensityRow>& rows) {
  std::ostringstream out;
  out << "n,exc,ratio_num,ratio_den,optimal\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.exc_value << ',' << r.ratio.numerator() << ',' << r.ratio.denominator() << ','
        << (r.optimal ? "true" : "false") << '\n';
  }
  return out.str();
}

bool ratios_non_increasing(const std::vector<DensityRow>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i - 1].optimal && rows[i].optimal && rows[i].ratio > rows[i - 1].ratio) return false;
  }
  return true;
}

}  // namespace hcube
