#include "hcube/exact_solver.hpp"

#include <algorithm>
#include <set>
#include <random>
#include <stdexcept>

#include "hcube/density.hpp"
#include "hcube/embeddings.hpp"

namespace hcube {

namespace {

void check_family(int n, const ConfigurationFamily& family) {
  if (n < 1 || n > kMaxPlacementDim) throw CubeError("exact computation limited to 1 <= n <= 16");
  if (family.max_dim() > n) throw CubeError("family member dimension exceeds n");
}

// Largest free periodic-layer set in V_n, trying every free pattern of small
// period. Empty when no pattern is free.
PointSet best_layer_start(int n, const ConfigurationFamily& family) {
  PointSet best(n);
  for (const auto& pat : free_patterns(family, 6)) {
    PointSet candidate = pat.realize(n);
    if (candidate.size() > best.size()) best = std::move(candidate);
  }
  return best;
}

// All vertex maps of Aut(Q_n), for canonicalizing many sets of one dimension.
class Canonicalizer {
 public:
  explicit Canonicalizer(int n) : n_(n) {
    if (n < 1 || n > 6) throw CubeError("canonical forms limited to n <= 6");
    for_each_automorphism(n, [&](const CubeAutomorphism& g) {
      std::vector<std::uint8_t> map(std::size_t{1} << n);
      for (std::uint64_t v = 0; v < map.size(); ++v) map[v] = static_cast<std::uint8_t>(g.apply(v));
      maps_.push_back(std::move(map));
      return true;
    });
  }

  std::uint64_t canonical_word(const PointSet& s) const {
    if (s.dim() != n_) throw CubeError("canonical form dimension mismatch");
    const auto members = s.members();
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& map : maps_) {
      std::uint64_t word = 0;
      for (auto v : members) word |= std::uint64_t{1} << map[v];
      best = std::min(best, word);
    }
    return best;
  }

  PointSet to_set(std::uint64_t word) const {
    PointSet out(n_);
    for (std::uint64_t v = 0; v < out.universe(); ++v) {
      if ((word >> v) & 1U) out.insert(v);
    }
    return out;
  }

 private:
  int n_;
  std::vector<std::vector<std::uint8_t>> maps_;
};

}  // namespace

HittingInstance placement_instance(int n, const ConfigurationFamily& family) {
  check_family(n, family);
  HittingInstance inst(n);
  for (const auto& f : family.members()) {
    for_each_placement(n, f, [&](std::span<const std::uint64_t> pts) { inst.add_edge(pts); });
  }
  return inst;
}

ExcResult exc_exact(int n, const ConfigurationFamily& family, const ExcOptions& options) {
  check_family(n, family);
  if (family.has_empty_member()) {
    // Every set, including ∅, contains the empty configuration; report 0.
    return ExcResult{0, PointSet(n), true, 0, true};
  }
  const HittingInstance inst = placement_instance(n, family);

  HittingOptions hopts;
  hopts.budget = options.budget;
  hopts.threads = options.threads;
  hopts.vertex_transitive = true;
  hopts.initial_cover = best_layer_start(n, family).complement();
  const HittingResult cover = min_hitting_set(inst, hopts);

  ExcResult result{std::uint64_t{1} << n, cover.cover.complement(), cover.optimal, cover.nodes, false};
  result.value -= cover.size;
  if (!is_family_free(result.witness, family)) {
    throw std::logic_error("exc_exact produced a witness that is not family-free");
  }
  return result;
}

PointSet exc_lower_localsearch(int n, const ConfigurationFamily& family, std::uint64_t seed,
                               std::uint64_t iterations) {
  if (n < 1 || n > kMaxSetDim) throw CubeError("local search limited to 1 <= n <= 24");
  if (family.max_dim() > n) throw CubeError("family member dimension exceeds n");
  if (family.has_empty_member()) return PointSet(n);

  const CopyDetector detector(n, family);
  const int reach = family.max_dim();
  std::mt19937_64 rng(seed);
  const std::uint64_t universe = std::uint64_t{1} << n;

  PointSet current = best_layer_start(n, family);
  PointSet best = current;
  for (std::uint64_t it = 0; it < iterations; ++it) {
    const std::uint64_t v = rng() % universe;
    if (current.contains(v)) continue;
    if (!detector.creates_copy(current, v)) {
      current.insert(v);
      if (current.size() > best.size()) best = current;
      continue;
    }
    // Plateau swap: drop a nearby member (any copy through v lies within
    // distance `reach`) and take v instead if that removes every conflict.
    std::uint64_t flip = 0;
    const int radius = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(reach));
    while (popcount(flip) < radius) flip |= std::uint64_t{1} << (rng() % static_cast<std::uint64_t>(n));
    const std::uint64_t u = v ^ flip;
    if (!current.contains(u)) continue;
    current.erase(u);
    if (detector.creates_copy(current, v)) {
      current.insert(u);
    } else {
      current.insert(v);
    }
  }
  if (!is_family_free(best, family)) throw std::logic_error("local search produced a non-free set");
  return best;
}

PointSet canonical_form(const PointSet& s) {
  const Canonicalizer canon(s.dim());
  return canon.to_set(canon.canonical_word(s));
}

std::vector<PointSet> enumerate_extremal(int n, const ConfigurationFamily& family, const SearchBudget& budget) {
  if (n < 1 || n > 5) throw CubeError("extremal enumeration limited to n <= 5");
  check_family(n, family);
  const Canonicalizer canon(n);
  if (family.has_empty_member()) return {PointSet(n)};

  const HittingInstance inst = placement_instance(n, family);
  HittingOptions hopts;
  hopts.budget = budget;
  hopts.vertex_transitive = true;
  const HittingResult tau = min_hitting_set(inst, hopts);
  if (!tau.optimal) throw std::runtime_error("search budget exhausted before the optimum was proven");

  std::set<std::uint64_t> classes;
  const bool complete = for_each_min_hitting_set(inst, tau.size, budget, [&](const PointSet& cover) {
    classes.insert(canon.canonical_word(cover.complement()));
  });
  if (!complete) throw std::runtime_error("search budget exhausted during extremal enumeration");

  std::vector<PointSet> out;
  for (auto word : classes) out.push_back(canon.to_set(word));
  return out;
}

}  // namespace hcube
