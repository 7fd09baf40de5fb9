#ifndef HCUBE_HITTING_SET_HPP
#define HCUBE_HITTING_SET_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "hcube/cube.hpp"

namespace hcube {

/// Edges over the vertex slots of V_n, stored flat. Edges are nonempty,
/// sorted and distinct.
class HittingInstance {
 public:
  explicit HittingInstance(int dim);

  int dim() const { return dim_; }
  std::uint32_t universe() const { return std::uint32_t{1} << dim_; }
  std::size_t edge_count() const { return offsets_.size() - 1; }

  std::span<const std::uint32_t> edge(std::size_t i) const {
    return {items_.data() + offsets_[i], items_.data() + offsets_[i + 1]};
  }

  /// Adds an edge; returns false if an identical edge is already present.
  bool add_edge(std::span<const std::uint64_t> points);

  std::size_t max_edge_size() const { return max_edge_size_; }

 private:
  int dim_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<std::uint32_t> items_;
  std::unordered_multimap<std::uint64_t, std::uint32_t> index_;
  std::size_t max_edge_size_ = 0;
};

struct SearchBudget {
  std::uint64_t max_nodes = 100'000'000;
  std::chrono::milliseconds max_time{300'000};
};

struct HittingOptions {
  SearchBudget budget;
  unsigned threads = 1;
  /// The instance is invariant under Aut(Q_n); vertex 0 may be forced into
  /// the cover.
  bool vertex_transitive = false;
  /// A known cover used as the initial incumbent.
  std::optional<PointSet> initial_cover;
};

struct HittingResult {
  std::uint64_t size = 0;
  PointSet cover;
  bool optimal = false;
  std::uint64_t nodes = 0;
};

HittingResult min_hitting_set(const HittingInstance& inst, const HittingOptions& options = {});

/// Calls fn for every hitting set of exactly `size` elements when `size` is
/// the minimum. Returns false if the budget ran out.
bool for_each_min_hitting_set(const HittingInstance& inst, std::uint64_t size, const SearchBudget& budget,
                              const std::function<void(const PointSet&)>& fn);

}  // namespace hcube

#endif  // HCUBE_HITTING_SET_HPP
