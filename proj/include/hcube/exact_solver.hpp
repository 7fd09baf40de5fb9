#ifndef HCUBE_EXACT_SOLVER_HPP
#define HCUBE_EXACT_SOLVER_HPP

#include <cstdint>
#include <vector>

#include "hcube/configurations.hpp"
#include "hcube/cube.hpp"
#include "hcube/hitting_set.hpp"

namespace hcube {

struct ExcOptions {
  SearchBudget budget;
  unsigned threads = 1;
};

struct ExcResult {
  std::uint64_t value = 0;
  PointSet witness;
  bool optimal = false;
  std::uint64_t nodes = 0;
  /// Set when the family contains the empty configuration (value is 0 by convention).
  bool degenerate = false;
};

/// The hitting-set instance whose transversals are complements of
/// family-free sets in V_n.
HittingInstance placement_instance(int n, const ConfigurationFamily& family);

/// exc(n, family). The witness is always re-verified to be family-free.
ExcResult exc_exact(int n, const ConfigurationFamily& family, const ExcOptions& options = {});

/// A family-free set grown by randomized add/swap moves from the largest
/// free periodic-layer set in V_n.
PointSet exc_lower_localsearch(int n, const ConfigurationFamily& family, std::uint64_t seed,
                               std::uint64_t iterations);

/// Lexicographically smallest image of S under Aut(Q_n), comparing
/// membership tables as 2^n-bit words. n <= 6.
PointSet canonical_form(const PointSet& s);

/// All maximum family-free sets of V_n up to Aut(Q_n), one canonical
/// representative each, sorted. n <= 5.
std::vector<PointSet> enumerate_extremal(int n, const ConfigurationFamily& family,
                                         const SearchBudget& budget = {});

}  // namespace hcube

#endif  // HCUBE_EXACT_SOLVER_HPP
