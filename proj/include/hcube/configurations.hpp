#ifndef HCUBE_CONFIGURATIONS_HPP
#define HCUBE_CONFIGURATIONS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hcube/cube.hpp"

namespace hcube {

/// A forbidden configuration F ⊆ V_d. Points are kept sorted and distinct.
class Configuration {
 public:
  Configuration(int dim, std::vector<std::uint64_t> points);

  int dim() const { return dim_; }
  const std::vector<std::uint64_t>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  std::vector<Vertex> vertices() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  int dim_;
  std::vector<std::uint64_t> points_;
};

/// A nonempty list of configurations, possibly of different dimensions.
class ConfigurationFamily {
 public:
  ConfigurationFamily(std::vector<Configuration> members);
  ConfigurationFamily(std::initializer_list<Configuration> members)
      : ConfigurationFamily(std::vector<Configuration>(members)) {}

  const std::vector<Configuration>& members() const { return members_; }
  int max_dim() const;
  bool has_empty_member() const;

 private:
  std::vector<Configuration> members_;
};

/// G_d: weights 0 and 1, plus weight-2 points whose support pairs an odd
/// and an even coordinate.
Configuration make_g(int d);

/// The three 3-dimensional configurations F_1 (star), F_2 (even star) and
/// F_3 (antipodal pair).
Configuration make_f(int which);

enum class GeneralKind { kStar, kEvenStar, kAntipodal };

/// F_1^d, F_2^d and F_d^d for d >= 3.
Configuration make_f_general(GeneralKind kind, int d);

enum class Construction {
  kDeleteLayer0,    // |x| ≢ 0 mod 3
  kDeleteLayer1,    // |x| ≢ 1 mod 3
  kDeleteLayer2,    // |x| ≢ 2 mod 3
  kEven,            // |x| ≡ 0 mod 2
  kZeroOneMod4,     // |x| ≡ 0,1 mod 4
  kZeroMod3,        // |x| ≡ 0 mod 3
  kZeroMod4,        // |x| ≡ 0 mod 4
  kZeroModDPlus1,   // |x| ≡ 0 mod d+1
  kNonStable,       // two-piece G_d-free set that is not layered globally
};

/// Builds a named construction in V_n. `d` is only read for kZeroModDPlus1.
PointSet make_construction(Construction which, int n, int d = 0);

/// Parses S0, S1, S2 (delete a layer class), S_1, S_2, S_12, S_23,
/// S_d+1:<d> and nonstab.
std::pair<Construction, int> parse_construction(const std::string& name);

/// The canonical partition of d into parts of size 3 and 2.
std::vector<int> multipartite_parts(int d);

/// Weight-r points of V_d whose support takes exactly one coordinate from
/// each consecutive block of sizes `parts`.
Configuration make_multipartite_config(int d, std::span<const int> parts);

struct TValues {
  std::uint64_t t2;
  std::uint64_t t3;
};

TValues t_values(int d);

}  // namespace hcube

#endif  // HCUBE_CONFIGURATIONS_HPP
