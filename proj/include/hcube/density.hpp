#ifndef HCUBE_DENSITY_HPP
#define HCUBE_DENSITY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hcube/configurations.hpp"
#include "hcube/cube.hpp"
#include "hcube/embeddings.hpp"
#include "hcube/exact_solver.hpp"

namespace hcube {

/// The residue-class set {x : |x| mod period ∈ residues}, for every n.
struct LayerPattern {
  int period = 1;
  std::uint64_t residues = 0;  // bit r set <=> residue r included

  std::vector<int> residue_list() const;
  bool includes_weight(int w) const { return (residues >> (w % period)) & 1U; }
  Rational density() const;
  PointSet realize(int n) const;

  friend bool operator==(const LayerPattern&, const LayerPattern&) = default;
};

/// Decides freeness of the pattern's set in V_n for all n >= dim(F). A
/// d-subcube whose fixed part has weight k meets the set exactly in the
/// layers w with (w + k) mod period ∈ residues, and an automorphism g of
/// Q_d changes weights only through its flip part, so it suffices to try
/// every flip and every shift.
bool layer_pattern_free(const Configuration& f, const LayerPattern& pat);

inline constexpr int kMaxPatternDim = 20;
inline constexpr int kMaxPatternPeriod = 64;
inline constexpr int kMaxSearchPeriod = 24;

struct PatternResult {
  LayerPattern pattern;
  Rational density;
};

/// Densest family-free pattern with period <= max_period. Ties go to the
/// smaller period, then the lexicographically smaller residue list. An
/// empty pattern (density 0) is returned when nothing nonempty is free.
PatternResult best_periodic_pattern(const ConfigurationFamily& family, int max_period);

/// Every nonempty family-free pattern with period <= max_period.
std::vector<LayerPattern> free_patterns(const ConfigurationFamily& family, int max_period);

struct SubcubeMax {
  std::uint64_t count = 0;
  Subcube witness;
};

/// Largest |S ∩ C| over d-subcubes C, first maximizer in scan order.
SubcubeMax max_subcube_points(const PointSet& s, int d);

struct MuBounds {
  std::uint64_t lower;
  std::uint64_t upper;
};

MuBounds mu_bounds(int d);

struct DensityRow {
  int n = 0;
  std::uint64_t exc_value = 0;
  Rational ratio;
  bool optimal = false;
  std::uint64_t nodes = 0;
};

/// exc(n, family) for n from the family's largest dimension up to n_max.
std::vector<DensityRow> density_table(const ConfigurationFamily& family, int n_max,
                                      const ExcOptions& options = {});

/// Columns: n, exc, ratio_num, ratio_den, optimal.
std::string density_csv(const std::vector<DensityRow>& rows);

/// True when ratios never increase between consecutive optimal rows.
bool ratios_non_increasing(const std::vector<DensityRow>& rows);

}  // namespace hcube

#endif  // HCUBE_DENSITY_HPP
