#include "hcube/exact_solver.hpp"

#include <gtest/gtest.h>

#include <random>

#include "hcube/embeddings.hpp"
#include "test_support.hpp"

namespace hcube {
namespace {

TEST(HittingSetTest, FacesOfTheCube) {
  HittingInstance inst(3);
  for (const auto& p : all_placements(3, {make_g(2)})) EXPECT_TRUE(inst.add_edge(p.points));
  EXPECT_EQ(inst.edge_count(), 6U);
  const auto r = min_hitting_set(inst);
  EXPECT_EQ(r.size, 2U);
  EXPECT_TRUE(r.optimal);
  EXPECT_EQ(r.cover.size(), 2U);
}

TEST(HittingSetTest, TrivialInstances) {
  HittingInstance empty(3);
  const auto r0 = min_hitting_set(empty);
  EXPECT_EQ(r0.size, 0U);
  EXPECT_TRUE(r0.optimal);

  HittingInstance single(3);
  const std::uint64_t e[] = {5};
  single.add_edge(e);
  EXPECT_FALSE(single.add_edge(e));
  const auto r1 = min_hitting_set(single);
  EXPECT_EQ(r1.size, 1U);
  EXPECT_TRUE(r1.cover.contains(5));
}

std::uint64_t brute_tau(const HittingInstance& inst) {
  const std::uint32_t u = inst.universe();
  std::uint64_t best = u;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << u); ++mask) {
    const auto size = static_cast<std::uint64_t>(__builtin_popcountll(mask));
    if (size >= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < inst.edge_count() && ok; ++i) {
      bool hit = false;
      for (auto v : inst.edge(i)) hit |= (mask >> v) & 1U;
      ok = hit;
    }
    if (ok) best = size;
  }
  return best;
}

TEST(HittingSetTest, RandomInstancesAgainstExhaustiveSearch) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    HittingInstance inst(4);
    const int edges = 1 + static_cast<int>(rng() % 20);
    for (int e = 0; e < edges; ++e) {
      std::vector<std::uint64_t> pts;
      for (std::uint64_t v = 0; v < 16; ++v) {
        if (rng() % 5 == 0) pts.push_back(v);
      }
      if (pts.empty()) pts.push_back(rng() % 16);
      inst.add_edge(pts);
    }
    const auto r = min_hitting_set(inst);
    EXPECT_TRUE(r.optimal);
    EXPECT_EQ(r.size, brute_tau(inst)) << "trial " << trial;
    for (std::size_t i = 0; i < inst.edge_count(); ++i) {
      bool hit = false;
      for (auto v : inst.edge(i)) hit |= r.cover.contains(v);
      EXPECT_TRUE(hit);
    }
  }
}

TEST(HittingSetTest, EnumeratesAllMinimumCovers) {
  HittingInstance inst(2);
  const std::uint64_t a[] = {0, 1};
  const std::uint64_t b[] = {2, 3};
  inst.add_edge(a);
  inst.add_edge(b);
  std::size_t count = 0;
  EXPECT_TRUE(for_each_min_hitting_set(inst, 2, {}, [&](const PointSet& c) {
    EXPECT_EQ(c.size(), 2U);
    ++count;
  }));
  EXPECT_EQ(count, 4U);
}

TEST(ExcExactTest, KostochkaValues) {
  const std::uint64_t expected[] = {3, 6, 11};
  for (int n = 2; n <= 4; ++n) {
    const auto r = exc_exact(n, {make_g(2)});
    EXPECT_TRUE(r.optimal);
    EXPECT_EQ(r.value, expected[n - 2]);
    EXPECT_EQ(r.witness.size(), r.value);
    EXPECT_TRUE(is_family_free(r.witness, {make_g(2)}));
  }
}

TEST(ExcExactTest, AntipodalPairs) {
  const auto r = exc_exact(3, {make_f(3)});
  EXPECT_EQ(r.value, 4U);
  EXPECT_TRUE(r.optimal);
}

TEST(ExcExactTest, AgreesWithExhaustiveSearch) {
  const std::vector<std::vector<Configuration>> families = {
      {make_g(2)},           {make_f(1)},           {make_f(2)}, {make_f(3)}, {make_f(1), make_f(2)},
      {make_f(2), make_f(3)}, {make_f(1), make_f(3)}, {make_g(3)}, {Configuration(1, {0, 1})}};
  for (const auto& fam : families) {
    int max_dim = 0;
    for (const auto& f : fam) max_dim = std::max(max_dim, f.dim());
    for (int n = max_dim; n <= 4; ++n) {
      const auto r = exc_exact(n, ConfigurationFamily(fam));
      EXPECT_TRUE(r.optimal);
      EXPECT_EQ(r.value, testing::brute_exc(n, fam)) << "n=" << n;
    }
  }
}

TEST(ExcExactTest, EqualsComplementOfMinimumCover) {
  for (int n = 3; n <= 5; ++n) {
    const ConfigurationFamily fam{make_f(1), make_f(3)};
    const auto r = exc_exact(n, fam);
    const auto h = min_hitting_set(placement_instance(n, fam));
    ASSERT_TRUE(r.optimal && h.optimal);
    EXPECT_EQ(r.value, (std::uint64_t{1} << n) - h.size);
  }
}

TEST(ExcExactTest, ThreadCountDoesNotChangeValue) {
  const ConfigurationFamily fam{make_f(2)};
  ExcOptions one;
  ExcOptions four;
  four.threads = 4;
  for (int n = 3; n <= 5; ++n) {
    const auto a = exc_exact(n, fam, one);
    const auto b = exc_exact(n, fam, four);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.optimal, b.optimal);
    EXPECT_TRUE(is_family_free(b.witness, fam));
  }
}

TEST(ExcExactTest, SingleThreadRunsAreDeterministic) {
  const auto a = exc_exact(4, {make_f(1)});
  const auto b = exc_exact(4, {make_f(1)});
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.nodes, b.nodes);
}

TEST(ExcExactTest, BudgetExhaustionIsFlagged) {
  ExcOptions tiny;
  tiny.budget.max_nodes = 1;
  const auto r = exc_exact(5, {make_f(2)}, tiny);
  EXPECT_FALSE(r.optimal);
  EXPECT_TRUE(is_family_free(r.witness, {make_f(2)}));
  EXPECT_EQ(r.witness.size(), r.value);
}

TEST(ExcExactTest, EmptyConfigurationIsDegenerate) {
  const auto r = exc_exact(3, {Configuration(2, {})});
  EXPECT_EQ(r.value, 0U);
  EXPECT_TRUE(r.degenerate);
  EXPECT_TRUE(r.optimal);
}

TEST(LocalSearchTest, NeverWorseThanStartingConstruction) {
  for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
    const PointSet a = exc_lower_localsearch(6, {make_g(2)}, seed, 2000);
    EXPECT_GE(a.size(), 42U);
    EXPECT_TRUE(is_family_free(a, {make_g(2)}));
    const PointSet b = exc_lower_localsearch(4, {make_f(1), make_f(2)}, seed, 2000);
    EXPECT_GE(b.size(), 6U);
    EXPECT_TRUE(is_family_free(b, {make_f(1), make_f(2)}));
    EXPECT_GE(exc_lower_localsearch(3, {make_f(3)}, seed, 500).size(), 4U);
  }
}

TEST(LocalSearchTest, SeedReproducible) {
  EXPECT_EQ(exc_lower_localsearch(7, {make_f(2)}, 5, 3000), exc_lower_localsearch(7, {make_f(2)}, 5, 3000));
}

TEST(CanonicalFormTest, InvariantUnderAutomorphisms) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const PointSet s = testing::random_set(n, rng);
    const PointSet c = canonical_form(s);
    EXPECT_EQ(c.size(), s.size());
    EXPECT_EQ(canonical_form(testing::random_automorphism(n, rng).apply(s)), c);
    EXPECT_EQ(canonical_form(c), c);
  }
}

TEST(EnumerateExtremalTest, UniqueClassForSquares) {
  for (int n = 2; n <= 4; ++n) {
    const auto classes = enumerate_extremal(n, {make_g(2)});
    ASSERT_EQ(classes.size(), 1U) << "n=" << n;
    EXPECT_EQ(classes[0], canonical_form(make_construction(Construction::kDeleteLayer0, n)));
  }
}

TEST(EnumerateExtremalTest, AllRepresentativesAreFreeAndMaximum) {
  const ConfigurationFamily fam{make_f(3)};
  const auto classes = enumerate_extremal(3, fam);
  ASSERT_FALSE(classes.empty());
  for (const auto& s : classes) {
    EXPECT_EQ(s.size(), 4U);
    EXPECT_TRUE(is_family_free(s, fam));
  }
}

}  // namespace
}  // namespace hcube
