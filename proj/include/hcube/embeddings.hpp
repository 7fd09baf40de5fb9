#ifndef HCUBE_EMBEDDINGS_HPP
#define HCUBE_EMBEDDINGS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hcube/configurations.hpp"
#include "hcube/cube.hpp"

namespace hcube {

/// A d-dimensional subcube of Q_n: coordinates in `varying` are free, the
/// others are pinned to the corresponding bits of `fixed`.
struct Subcube {
  int dim_ambient = 0;
  std::uint64_t varying = 0;
  std::uint64_t fixed = 0;

  int dim() const { return popcount(varying); }
  /// Image of a local point of V_d under the increasing bijection onto `varying`.
  std::uint64_t embed(std::uint64_t local) const { return fixed | deposit_bits(local, varying); }

  friend bool operator==(const Subcube&, const Subcube&) = default;
};

/// Image i(F) of one embedding, as sorted points of V_n.
struct Placement {
  int dim_ambient = 0;
  std::vector<std::uint64_t> points;

  friend bool operator==(const Placement&, const Placement&) = default;
};

/// All distinct images of a configuration under Aut(Q_d). The seed comes first.
struct Orbit {
  int dim = 0;
  std::vector<Configuration> members;
};

inline constexpr int kMaxOrbitDim = 10;
inline constexpr int kMaxPlacementDim = 16;

/// Visits every d-subcube of Q_n: varying sets in lexicographic order, then
/// fixed bits in increasing numeric order. Returns early if fn returns false.
void for_each_subcube(int n, int d, const std::function<bool(const Subcube&)>& fn);

std::vector<Subcube> enumerate_subcubes(int n, int d);

Orbit config_orbit(const Configuration& f);

/// First copy of F inside S in scan order, if any.
std::optional<Placement> find_witness(const PointSet& s, const Configuration& f);

bool is_family_free(const PointSet& s, const ConfigurationFamily& family);

/// Every distinct image of every member of the family in Q_n.
std::vector<Placement> all_placements(int n, const ConfigurationFamily& family);

/// Same images, streamed without deduplication. Used by the solver, which
/// deduplicates into its own flat storage.
void for_each_placement(int n, const Configuration& f,
                        const std::function<void(std::span<const std::uint64_t>)>& fn);

/// Precomputed orbits of a family, for repeated local freeness queries.
class CopyDetector {
 public:
  CopyDetector(int n, const ConfigurationFamily& family);

  /// True when S ∪ {v} contains a copy of some member that uses v.
  bool creates_copy(const PointSet& s, std::uint64_t v) const;

 private:
  struct Member {
    int dim;
    std::size_t size;
    std::vector<std::vector<std::uint64_t>> orbit_masks;  // 2^d-bit masks
    std::vector<std::uint64_t> varying_sets;
  };
  int n_;
  std::vector<Member> members_;
};

}  // namespace hcube

#endif  // HCUBE_EMBEDDINGS_HPP
