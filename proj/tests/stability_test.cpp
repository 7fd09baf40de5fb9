#include "hcube/stability.hpp"

#include <gtest/gtest.h>

#include <random>

#include "hcube/configurations.hpp"
#include "test_support.hpp"

namespace hcube {
namespace {

bool in_layers(std::uint64_t layers, int w) { return w >= 0 && ((layers >> w) & 1U); }

// Pair defect of a weight-w vertex of a layer set, by pair type: both
// coordinates inside supp(x), one each side, both outside.
std::uint64_t layer_defect(int n, std::uint64_t layers, int w) {
  const bool down = in_layers(layers, w - 1);
  const bool up = in_layers(layers, w + 1);
  const std::uint64_t inside = binomial(w, 2);
  const std::uint64_t mixed = static_cast<std::uint64_t>(w) * static_cast<std::uint64_t>(n - w);
  const std::uint64_t outside = binomial(n - w, 2);
  std::uint64_t defect = 0;
  if (in_layers(layers, w - 2) == down) defect += inside;
  if (in_layers(layers, w) == (down && up)) defect += mixed;
  if (in_layers(layers, w + 2) == up) defect += outside;
  return defect;
}

TEST(LocalViewTest, Examples) {
  EXPECT_EQ(local_view(PointSet::full(5), Vertex(5, 0b01101), 1).size(), 5U);
  const PointSet s0 = make_construction(Construction::kDeleteLayer0, 6);
  EXPECT_EQ(local_view(s0, Vertex::zero(6), 1),
            (std::vector<std::uint64_t>{1, 2, 4, 8, 16, 32}));
  EXPECT_TRUE(local_view(PointSet(4), Vertex::zero(4), 2).empty());
}

TEST(LocalViewTest, SizesMatchSphereCounts) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const PointSet s = testing::random_set(n, rng);
    s.for_each([&](std::uint64_t x) {
      for (int l = 0; l <= n; ++l) {
        EXPECT_EQ(local_view(s, Vertex(n, x), l).size(), testing::brute_h(s, x, l));
      }
    });
  }
}

TEST(StabilityTest, DeleteLayerZeroHasNoBadA) {
  for (int n = 3; n <= 12; ++n) {
    const PointSet s0 = make_construction(Construction::kDeleteLayer0, n);
    for (const Rational delta : {Rational(0), Rational(1, 5), Rational(1, 2)}) {
      const auto r = stability_report(s0, delta);
      EXPECT_EQ(r.bad_a, 0U);
      EXPECT_EQ(r.bad_c, 0U);
    }
  }
}

TEST(StabilityTest, BadBMatchesLayerFormula) {
  const int n = 12;
  const PointSet s0 = make_construction(Construction::kDeleteLayer0, n);
  const auto r = stability_report(s0, Rational(1, 5));
  std::uint64_t expected = 0;
  for (int w = 0; w <= n; ++w) {
    int h1 = -1;
    if (w % 3 == 1) h1 = n - w;
    if (w % 3 == 2) h1 = w;
    if (h1 < 0) continue;
    // |h1 − 6| > 12/5
    if (5 * std::abs(2 * h1 - n) > 2 * n) expected += binomial(n, w);
  }
  EXPECT_EQ(r.bad_b, expected);
  EXPECT_EQ(r.exceptional_fraction, Rational(static_cast<std::int64_t>(expected), 4096));
}

TEST(StabilityTest, EmptySetAtDeltaOne) {
  const auto r = stability_report(PointSet(6), Rational(1));
  EXPECT_EQ(r.bad_a, 0U);
  EXPECT_EQ(r.bad_b, 0U);
  EXPECT_EQ(r.bad_c, 0U);
  EXPECT_EQ(r.epsilon, Rational(2, 3));
  EXPECT_THROW(stability_report(PointSet(6), Rational(3, 2)), CubeError);
}

TEST(StabilityTest, PairDefectMatchesLayerOracle) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 8);
    std::vector<int> weights;
    std::uint64_t layers = 0;
    for (int w = 0; w <= n; ++w) {
      if (rng() % 2) {
        weights.push_back(w);
        layers |= std::uint64_t{1} << w;
      }
    }
    const PointSet s = layer_set(n, weights);
    std::uint64_t expected_c = 0;
    s.for_each([&](std::uint64_t x) {
      const int w = popcount(x);
      EXPECT_EQ(pair_defect(s, x), layer_defect(n, layers, w));
      expected_c += 10 * layer_defect(n, layers, w) > 3 * binomial(n, 2);
    });
    EXPECT_EQ(stability_report(s, Rational(3, 10)).bad_c, expected_c);
  }
}

TEST(StabilityTest, CountsAreBoundedAndHistogramsAddUp) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 6);
    const PointSet s = testing::random_set(n, rng);
    const auto r = stability_report(s, Rational(1, 4));
    EXPECT_LE(r.bad_a, s.universe() - s.size());
    EXPECT_LE(r.bad_b, s.size());
    EXPECT_LE(r.bad_c, s.size());
    EXPECT_LE(std::max(r.bad_b, r.bad_c), r.bad_bc_union);
    EXPECT_LE(r.bad_bc_union, r.bad_b + r.bad_c);
    std::uint64_t in = 0;
    std::uint64_t out = 0;
    for (auto c : r.h1_hist_in) in += c;
    for (auto c : r.h1_hist_out) out += c;
    EXPECT_EQ(in, s.size());
    EXPECT_EQ(out, s.universe() - s.size());
  }
}

TEST(StabilityProperties, MonotoneInDelta) {
  std::mt19937_64 rng(66);
  const PointSet s = testing::random_set(9, rng);
  StabilityReport prev = stability_report(s, Rational(0));
  for (int k = 1; k <= 20; ++k) {
    const auto r = stability_report(s, Rational(k, 20));
    EXPECT_LE(r.bad_a, prev.bad_a);
    EXPECT_LE(r.bad_b, prev.bad_b);
    EXPECT_LE(r.bad_c, prev.bad_c);
    prev = r;
  }
}

TEST(StabilityProperties, InvariantUnderAutomorphisms) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 6);
    const PointSet s = testing::random_set(n, rng);
    const PointSet gs = testing::random_automorphism(n, rng).apply(s);
    const auto a = stability_report(s, Rational(1, 5));
    const auto b = stability_report(gs, Rational(1, 5));
    EXPECT_EQ(a.bad_a, b.bad_a);
    EXPECT_EQ(a.bad_b, b.bad_b);
    EXPECT_EQ(a.bad_c, b.bad_c);
    EXPECT_EQ(a.h1_hist_in, b.h1_hist_in);
    EXPECT_EQ(a.h1_hist_out, b.h1_hist_out);
  }
}

}  // namespace
}  // namespace hcube
