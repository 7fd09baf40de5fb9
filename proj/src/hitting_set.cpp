#include "hcube/hitting_set.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <queue>
#include <thread>

namespace hcube {

HittingInstance::HittingInstance(int dim) : dim_(dim) {
  if (dim < 1 || dim > kMaxSetDim) throw CubeError("hitting instance dimension out of range");
}

bool HittingInstance::add_edge(std::span<const std::uint64_t> points) {
  if (points.empty()) throw CubeError("hitting instance edges must be nonempty");
  std::vector<std::uint32_t> edge;
  edge.reserve(points.size());
  for (auto p : points) {
    if (p >= universe()) throw CubeError("edge point outside V_n");
    edge.push_back(static_cast<std::uint32_t>(p));
  }
  std::sort(edge.begin(), edge.end());
  edge.erase(std::unique(edge.begin(), edge.end()), edge.end());

  std::uint64_t h = 1469598103934665603ULL;
  for (auto v : edge) h = (h ^ v) * 1099511628211ULL;
  auto [lo, hi] = index_.equal_range(h);
  for (auto it = lo; it != hi; ++it) {
    auto other = this->edge(it->second);
    if (std::equal(other.begin(), other.end(), edge.begin(), edge.end())) return false;
  }
  index_.emplace(h, static_cast<std::uint32_t>(edge_count()));
  items_.insert(items_.end(), edge.begin(), edge.end());
  offsets_.push_back(static_cast<std::uint32_t>(items_.size()));
  max_edge_size_ = std::max(max_edge_size_, edge.size());
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint32_t kNotActive = std::numeric_limits<std::uint32_t>::max();

enum : std::uint8_t { kUndecided = 0, kInCover = 1, kExcluded = 2 };

struct Decision {
  std::uint32_t vertex;
  bool include;
};

// State shared between workers. Only improvements are published to `best`.
struct Shared {
  std::atomic<std::uint64_t> best;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::mutex mutex;
  std::vector<std::uint32_t> best_cover;
  std::uint64_t max_nodes;
  Clock::time_point deadline;

  explicit Shared(std::uint64_t initial, const SearchBudget& budget)
      : best(initial), max_nodes(budget.max_nodes), deadline(Clock::now() + budget.max_time) {}
};

class Searcher {
 public:
  Searcher(const HittingInstance& inst, Shared& shared) : inst_(inst), shared_(shared) {
    const std::uint32_t nv = inst.universe();
    std::vector<std::uint32_t> degree(nv, 0);
    for (std::size_t e = 0; e < inst.edge_count(); ++e) {
      for (auto v : inst.edge(e)) ++degree[v];
    }
    inc_offsets_.assign(nv + 1, 0);
    for (std::uint32_t v = 0; v < nv; ++v) inc_offsets_[v + 1] = inc_offsets_[v] + degree[v];
    incidence_.resize(inc_offsets_[nv]);
    std::vector<std::uint32_t> fill(inc_offsets_.begin(), inc_offsets_.end() - 1);
    for (std::size_t e = 0; e < inst.edge_count(); ++e) {
      for (auto v : inst.edge(e)) incidence_[fill[v]++] = static_cast<std::uint32_t>(e);
    }
    status_.assign(nv, kUndecided);
    stamp_.assign(nv, 0);
    hits_.assign(inst.edge_count(), 0);
    free_.resize(inst.edge_count());
    active_.resize(inst.edge_count());
    position_.resize(inst.edge_count());
    for (std::size_t e = 0; e < inst.edge_count(); ++e) {
      free_[e] = static_cast<std::uint32_t>(inst.edge(e).size());
      active_[e] = static_cast<std::uint32_t>(e);
      position_[e] = static_cast<std::uint32_t>(e);
    }
    active_size_ = static_cast<std::uint32_t>(inst.edge_count());
    buckets_.resize(inst.max_edge_size() + 1);
  }

  void set_enumeration(std::uint64_t target, const std::function<void(const PointSet&)>* fn) {
    enumerate_ = true;
    target_ = target;
    on_solution_ = fn;
  }

  void apply(const Decision& d) {
    if (d.include) {
      include(d.vertex);
    } else {
      exclude(d.vertex);
    }
  }

  void revert(const Decision& d) {
    if (d.include) {
      undo_include(d.vertex);
    } else {
      undo_exclude(d.vertex);
    }
  }

  // Depth-first search below the current state. With a split depth, nodes
  // at that depth are recorded as tasks instead of being explored.
  void search(std::size_t split_depth = 0, std::vector<std::vector<Decision>>* tasks = nullptr) {
    if (shared_.stop.load(std::memory_order_relaxed)) return;
    count_node();
    if (active_size_ == 0) {
      record_leaf();
      return;
    }
    const std::uint64_t limit = enumerate_ ? target_ + 1 : shared_.best.load(std::memory_order_relaxed);
    std::uint32_t branch_edge = kNotActive;
    if (!bound_allows(limit, branch_edge)) return;
    if (tasks != nullptr && trail_.size() >= split_depth) {
      tasks->push_back(trail_);
      return;
    }

    std::vector<std::uint32_t> choices;
    for (auto v : inst_.edge(branch_edge)) {
      if (status_[v] == kUndecided) choices.push_back(v);
    }
    std::size_t excluded = 0;
    for (auto v : choices) {
      push({v, true});
      search(split_depth, tasks);
      pop();
      if (shared_.stop.load(std::memory_order_relaxed)) break;
      push({v, false});
      ++excluded;
    }
    for (std::size_t i = 0; i < excluded; ++i) pop();
  }

  void push(const Decision& d) {
    apply(d);
    trail_.push_back(d);
  }

  void pop() {
    revert(trail_.back());
    trail_.pop_back();
  }

  void flush_nodes() {
    shared_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed);
    local_nodes_ = 0;
  }

  bool has_vertex(std::uint32_t v) const { return inc_offsets_[v + 1] > inc_offsets_[v]; }

 private:
  void include(std::uint32_t v) {
    status_[v] = kInCover;
    cover_.push_back(v);
    for (auto i = inc_offsets_[v]; i < inc_offsets_[v + 1]; ++i) {
      const auto e = incidence_[i];
      --free_[e];
      if (hits_[e]++ == 0) deactivate(e);
    }
  }

  void undo_include(std::uint32_t v) {
    for (auto i = inc_offsets_[v]; i < inc_offsets_[v + 1]; ++i) {
      const auto e = incidence_[i];
      ++free_[e];
      if (--hits_[e] == 0) activate(e);
    }
    cover_.pop_back();
    status_[v] = kUndecided;
  }

  void exclude(std::uint32_t v) {
    status_[v] = kExcluded;
    for (auto i = inc_offsets_[v]; i < inc_offsets_[v + 1]; ++i) --free_[incidence_[i]];
  }

  void undo_exclude(std::uint32_t v) {
    for (auto i = inc_offsets_[v]; i < inc_offsets_[v + 1]; ++i) ++free_[incidence_[i]];
    status_[v] = kUndecided;
  }

  void deactivate(std::uint32_t e) {
    const auto p = position_[e];
    const auto last = active_[--active_size_];
    active_[p] = last;
    position_[last] = p;
    active_[active_size_] = e;
    position_[e] = active_size_;
  }

  void activate(std::uint32_t e) {
    // e sits somewhere at or past active_size_; swap it to the boundary.
    const auto p = position_[e];
    const auto other = active_[active_size_];
    active_[p] = other;
    position_[other] = p;
    active_[active_size_] = e;
    position_[e] = active_size_;
    ++active_size_;
  }

  // Greedy family of disjoint uncovered edges, smallest first, as a lower
  // bound on the number of further cover vertices. Also picks the branching
  // edge: fewest undecided vertices, lowest index on ties.
  bool bound_allows(std::uint64_t limit, std::uint32_t& branch_edge) {
    for (auto& b : buckets_) b.clear();
    for (std::uint32_t i = 0; i < active_size_; ++i) {
      const auto e = active_[i];
      if (free_[e] == 0) return false;
      buckets_[free_[e]].push_back(e);
    }
    for (const auto& b : buckets_) {
      if (!b.empty()) {
        branch_edge = *std::min_element(b.begin(), b.end());
        break;
      }
    }
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    std::uint64_t lower = cover_.size();
    if (lower >= limit) return false;
    for (const auto& b : buckets_) {
      for (auto e : b) {
        bool disjoint = true;
        for (auto v : inst_.edge(e)) {
          if (status_[v] == kUndecided && stamp_[v] == epoch_) {
            disjoint = false;
            break;
          }
        }
        if (!disjoint) continue;
        for (auto v : inst_.edge(e)) {
          if (status_[v] == kUndecided) stamp_[v] = epoch_;
        }
        if (++lower >= limit) return false;
      }
    }
    return true;
  }

  void record_leaf() {
    if (enumerate_) {
      if (cover_.size() == target_ && on_solution_ != nullptr) {
        PointSet cover(inst_.dim());
        for (auto v : cover_) cover.insert(v);
        (*on_solution_)(cover);
      }
      return;
    }
    std::lock_guard lock(shared_.mutex);
    if (cover_.size() < shared_.best.load()) {
      shared_.best.store(cover_.size());
      shared_.best_cover = cover_;
    }
  }

  void count_node() {
    if (++local_nodes_ < 1024) return;
    const auto total = shared_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed) + local_nodes_;
    local_nodes_ = 0;
    if (total >= shared_.max_nodes || Clock::now() >= shared_.deadline) shared_.stop.store(true);
  }

  const HittingInstance& inst_;
  Shared& shared_;
  std::vector<std::uint32_t> inc_offsets_;
  std::vector<std::uint32_t> incidence_;
  std::vector<std::uint8_t> status_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> hits_;
  std::vector<std::uint32_t> free_;
  std::vector<std::uint32_t> active_;
  std::vector<std::uint32_t> position_;
  std::uint32_t active_size_ = 0;
  std::vector<std::vector<std::uint32_t>> buckets_;
  std::vector<std::uint32_t> cover_;
  std::vector<Decision> trail_;
  std::uint64_t local_nodes_ = 0;
  bool enumerate_ = false;
  std::uint64_t target_ = 0;
  const std::function<void(const PointSet&)>* on_solution_ = nullptr;
};

std::vector<std::uint32_t> greedy_cover(const HittingInstance& inst) {
  const std::uint32_t nv = inst.universe();
  std::vector<std::vector<std::uint32_t>> incident(nv);
  std::vector<std::uint32_t> degree(nv, 0);
  for (std::size_t e = 0; e < inst.edge_count(); ++e) {
    for (auto v : inst.edge(e)) {
      incident[v].push_back(static_cast<std::uint32_t>(e));
      ++degree[v];
    }
  }
  // Max-degree vertex first, lowest index on ties; stale heap entries are
  // re-pushed with their current degree.
  using Entry = std::pair<std::uint32_t, std::int64_t>;
  std::priority_queue<Entry> heap;
  for (std::uint32_t v = 0; v < nv; ++v) {
    if (degree[v] > 0) heap.push({degree[v], -static_cast<std::int64_t>(v)});
  }
  std::vector<bool> covered(inst.edge_count(), false);
  std::vector<std::uint32_t> cover;
  while (!heap.empty()) {
    auto [deg, neg] = heap.top();
    heap.pop();
    const auto v = static_cast<std::uint32_t>(-neg);
    if (deg != degree[v]) {
      if (degree[v] > 0) heap.push({degree[v], neg});
      continue;
    }
    if (deg == 0) break;
    cover.push_back(v);
    for (auto e : incident[v]) {
      if (covered[e]) continue;
      covered[e] = true;
      for (auto u : inst.edge(e)) --degree[u];
    }
  }
  return cover;
}

}  // namespace

HittingResult min_hitting_set(const HittingInstance& inst, const HittingOptions& options) {
  HittingResult result{0, PointSet(inst.dim()), true, 0};
  if (inst.edge_count() == 0) return result;

  std::vector<std::uint32_t> incumbent = greedy_cover(inst);
  if (options.initial_cover) {
    const PointSet& hint = *options.initial_cover;
    if (hint.dim() != inst.dim()) throw CubeError("initial cover dimension mismatch");
    bool hits_all = true;
    for (std::size_t e = 0; e < inst.edge_count() && hits_all; ++e) {
      const auto edge = inst.edge(e);
      hits_all = std::any_of(edge.begin(), edge.end(), [&](auto v) { return hint.contains(v); });
    }
    if (hits_all && hint.size() < incumbent.size()) {
      incumbent.clear();
      hint.for_each([&](std::uint64_t v) { incumbent.push_back(static_cast<std::uint32_t>(v)); });
    }
  }

  Shared shared(incumbent.size(), options.budget);
  shared.best_cover = incumbent;

  Searcher root(inst, shared);
  std::vector<Decision> prefix;
  if (options.vertex_transitive && root.has_vertex(0)) {
    prefix.push_back({0, true});
    root.push(prefix.back());
  }

  const unsigned threads = std::max(1U, options.threads);
  if (threads == 1) {
    root.search();
    root.flush_nodes();
  } else {
    // Split the tree into independent subproblems, then let workers pull them.
    std::vector<std::vector<Decision>> tasks;
    std::size_t depth = prefix.size();
    do {
      tasks.clear();
      depth += 2;
      root.search(depth, &tasks);
    } while (tasks.size() < 4 * threads && !tasks.empty() && depth < 64 && !shared.stop.load());
    root.flush_nodes();

    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        Searcher worker(inst, shared);
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= tasks.size() || shared.stop.load()) break;
          for (const auto& d : tasks[i]) worker.push(d);
          worker.search();
          for (std::size_t k = 0; k < tasks[i].size(); ++k) worker.pop();
        }
        worker.flush_nodes();
      });
    }
    for (auto& th : pool) th.join();
  }

  result.optimal = !shared.stop.load();
  result.nodes = shared.nodes.load();
  result.size = shared.best.load();
  for (auto v : shared.best_cover) result.cover.insert(v);
  return result;
}

bool for_each_min_hitting_set(const HittingInstance& inst, std::uint64_t size, const SearchBudget& budget,
                              const std::function<void(const PointSet&)>& fn) {
  if (inst.edge_count() == 0) {
    if (size == 0) fn(PointSet(inst.dim()));
    return true;
  }
  Shared shared(size + 1, budget);
  Searcher searcher(inst, shared);
  searcher.set_enumeration(size, &fn);
  searcher.search();
  return !shared.stop.load();
}

}  // namespace hcube
