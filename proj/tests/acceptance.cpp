// Acceptance run: one PASS/FAIL line per criterion. A criterion passes only
// if its checks hold exactly and it finishes inside its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hcube/configurations.hpp"
#include "hcube/cube.hpp"
#include "hcube/density.hpp"
#include "hcube/embeddings.hpp"
#include "hcube/exact_solver.hpp"
#include "hcube/identities.hpp"
#include "hcube/stability.hpp"
#include "test_support.hpp"

namespace {

using namespace hcube;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> body;
};

// ⌈2^{n+1}/3⌉
std::uint64_t kostochka(int n) { return ((std::uint64_t{1} << (n + 1)) + 2) / 3; }

std::uint64_t pow3(int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= 3;
  return r;
}

// Closed form for t_3(d) by residue of d mod 3.
std::uint64_t t3_closed_form(int d) {
  switch (d % 3) {
    case 0: return pow3(d / 3);
    case 1: return 4 * pow3((d - 4) / 3);
    default: return 2 * pow3((d - 2) / 3);
  }
}

Outcome kostochka_values() {
  Outcome out;
  ExcOptions opts;
  opts.threads = 1;
  for (int n = 2; n <= 5; ++n) {
    const auto r = exc_exact(n, {make_g(2)}, opts);
    out.require(r.optimal, "n=" + std::to_string(n) + " not solved to optimality");
    out.require(r.value == kostochka(n), "n=" + std::to_string(n) + ": got " + std::to_string(r.value) +
                                             ", expected " + std::to_string(kostochka(n)));
    out.require(is_family_free(r.witness, {make_g(2)}) && r.witness.size() == r.value,
                "witness check failed at n=" + std::to_string(n));
  }
  return out;
}

Outcome kostochka_uniqueness() {
  Outcome out;
  for (int n = 3; n <= 4; ++n) {
    const auto classes = enumerate_extremal(n, {make_g(2)});
    out.require(classes.size() == 1, "n=" + std::to_string(n) + ": " + std::to_string(classes.size()) + " classes");
    if (classes.size() == 1) {
      out.require(classes[0] == canonical_form(make_construction(Construction::kDeleteLayer0, n)),
                  "n=" + std::to_string(n) + ": class differs from S_0");
    }
  }
  return out;
}

Outcome construction_freeness() {
  Outcome out;
  const int n = 10;
  const PointSet s0 = make_construction(Construction::kDeleteLayer0, n);
  for (int d = 2; d <= 4; ++d) {
    out.require(is_family_free(s0, {make_g(d)}), "S_0 contains G_" + std::to_string(d));
  }
  const PointSet s1 = make_construction(Construction::kEven, n);
  out.require(is_family_free(s1, {make_f(1)}) && is_family_free(s1, {make_f(3)}), "S_1 not F_1/F_3-free");
  out.require(is_family_free(make_construction(Construction::kZeroOneMod4, n), {make_f(2)}), "S_2 not F_2-free");
  out.require(is_family_free(make_construction(Construction::kZeroMod3, n), {make_f(1), make_f(2)}),
              "S_12 not {F_1,F_2}-free");
  out.require(is_family_free(make_construction(Construction::kZeroMod4, n), {make_f(1), make_f(2), make_f(3)}),
              "S_23 not {F_1,F_2,F_3}-free");
  out.require(is_family_free(make_construction(Construction::kNonStable, 12), {make_g(3)}), "nonstab contains G_3");
  return out;
}

Outcome counting_identities() {
  Outcome out;
  std::mt19937_64 rng(20240601);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const PointSet s = testing::random_set(10, rng);
    for (int l = 1; l <= 3; ++l) {
      out.require(verify_identity_one(s, l).match, "identity one failed on random set " + std::to_string(trial));
      out.require(verify_identity_two(s, l).match, "identity two failed on random set " + std::to_string(trial));
      checked += 2;
    }
  }
  const std::pair<const char*, Construction> named[] = {{"S_0", Construction::kDeleteLayer0},
                                                        {"S_12", Construction::kZeroMod3},
                                                        {"S_23", Construction::kZeroMod4}};
  for (const auto& [name, c] : named) {
    const PointSet s = make_construction(c, 12);
    for (int l = 1; l <= 3; ++l) {
      out.require(verify_identity_one(s, l).match, std::string("identity one failed on ") + name);
      out.require(verify_identity_two(s, l).match, std::string("identity two failed on ") + name);
      checked += 2;
    }
  }
  if (out.ok) out.detail = std::to_string(checked) + " identity checks";
  return out;
}

Outcome mantel() {
  Outcome out;
  const int n = 10;
  const PointSet s2 = make_construction(Construction::kZeroOneMod4, n);
  std::uint64_t worst = 0;
  s2.for_each([&](std::uint64_t x) {
    const auto r = mantel_diagnostic(s2, Vertex(n, x));
    out.require(!r.triangle_found, "triangle at x=" + Vertex(n, x).to_string());
    out.require(r.within_mantel_bound, "more than n^2/4 edges at x=" + Vertex(n, x).to_string());
    worst = std::max(worst, r.edge_count);
  });
  if (out.ok) out.detail = "max edges " + std::to_string(worst) + " <= 25";
  return out;
}

Outcome stability() {
  Outcome out;
  const int n = 12;
  const auto r = stability_report(make_construction(Construction::kDeleteLayer0, n), Rational(1, 5));
  std::uint64_t expected_b = 0;
  for (int w = 0; w <= n; ++w) {
    if (w % 3 == 0) continue;
    const int h1 = w % 3 == 1 ? n - w : w;
    // |h1 − n/2| > n/5
    if (5 * std::abs(2 * h1 - n) > 2 * n) expected_b += binomial(n, w);
  }
  out.require(r.bad_a == 0, "bad_a = " + std::to_string(r.bad_a));
  out.require(r.bad_b == expected_b,
              "bad_b = " + std::to_string(r.bad_b) + ", oracle " + std::to_string(expected_b));
  if (out.ok) out.detail = "bad_a 0, bad_b " + std::to_string(r.bad_b);
  return out;
}

Outcome mu_arithmetic() {
  Outcome out;
  const auto m3 = mu_bounds(3);
  const auto m4 = mu_bounds(4);
  out.require(m3.lower == 3 && m3.upper == 3, "mu_bounds(3) wrong");
  out.require(m4.lower == 5 && m4.upper == 6, "mu_bounds(4) wrong");
  for (int d = 3; d <= 9; ++d) {
    const auto k = make_multipartite_config(d, multipartite_parts(d));
    out.require(k.size() == t3_closed_form(d), "K_" + std::to_string(d) + " has " + std::to_string(k.size()) +
                                                   " points, t_3 = " + std::to_string(t3_closed_form(d)));
  }
  return out;
}

Outcome subcube_points() {
  Outcome out;
  for (int d = 2; d <= 4; ++d) {
    const PointSet s = make_construction(Construction::kZeroModDPlus1, 12, d);
    const auto m = max_subcube_points(s, d);
    out.require(m.count <= binomial(d, d / 2), "d=" + std::to_string(d) + ": " + std::to_string(m.count) +
                                                   " points in one subcube");
  }
  return out;
}

Outcome pattern_densities() {
  Outcome out;
  struct Case {
    const char* name;
    ConfigurationFamily fam;
    Rational density;
  };
  const std::vector<Case> cases = {
      {"{G_2}", {make_g(2)}, Rational(2, 3)},
      {"{F_1}", {make_f(1)}, Rational(1, 2)},
      {"{F_2}", {make_f(2)}, Rational(1, 2)},
      {"{F_3}", {make_f(3)}, Rational(1, 2)},
      {"{F_1,F_3}", {make_f(1), make_f(3)}, Rational(1, 2)},
      {"{F_1,F_2}", {make_f(1), make_f(2)}, Rational(1, 3)},
      {"{F_2,F_3}", {make_f(2), make_f(3)}, Rational(1, 4)},
      {"{F_1,F_2,F_3}", {make_f(1), make_f(2), make_f(3)}, Rational(1, 4)},
  };
  for (const auto& c : cases) {
    const auto best = best_periodic_pattern(c.fam, 8);
    std::ostringstream got;
    got << best.density.numerator() << '/' << best.density.denominator();
    out.require(best.density == c.density, std::string(c.name) + ": best density " + got.str());
  }
  return out;
}

Outcome property_suite() {
  Outcome out;
  ExcOptions opts;
  opts.threads = 1;
  const std::vector<std::pair<const char*, ConfigurationFamily>> tables = {
      {"V2", {make_g(2)}}, {"F2", {make_f(2)}}, {"F3", {make_f(3)}}, {"F2,F3", {make_f(2), make_f(3)}}};
  for (const auto& [name, fam] : tables) {
    out.require(ratios_non_increasing(density_table(fam, 6, opts)), std::string("ratio increased for ") + name);
  }

  std::mt19937_64 rng(424242);
  const ConfigurationFamily fam{make_f(1), make_f(3)};
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const PointSet s = testing::random_set(n, rng, 35);
    const PointSet gs = testing::random_automorphism(n, rng).apply(s);
    out.require(is_family_free(s, fam) == is_family_free(gs, fam), "freeness not automorphism invariant");
    const auto a = stability_report(s, Rational(1, 5));
    const auto b = stability_report(gs, Rational(1, 5));
    out.require(a.bad_a == b.bad_a && a.bad_b == b.bad_b && a.bad_c == b.bad_c &&
                    a.h1_hist_in == b.h1_hist_in && a.h1_hist_out == b.h1_hist_out,
                "stability report not automorphism invariant");
  }

  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int d = 1 + static_cast<int>(rng() % std::min(3, n));
    std::vector<std::uint64_t> pts;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << d); ++v) {
      if (rng() % 2) pts.push_back(v);
    }
    if (pts.empty()) pts.push_back(0);
    const Configuration f(d, pts);
    const PointSet s = testing::random_set(n, rng, 30 + static_cast<unsigned>(rng() % 60));
    out.require(find_witness(s, f).has_value() == testing::brute_contains_copy(s, f),
                "find_witness disagrees with brute force on instance " + std::to_string(trial));
  }

  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const PointSet s = testing::random_set(n, rng, static_cast<unsigned>(rng() % 101));
    for (std::uint64_t x = 0; x < s.universe(); ++x) {
      std::uint64_t total = 0;
      for (int l = 0; l <= n; ++l) total += sphere_count(s, Vertex(n, x), l);
      out.require(total == s.size(), "sphere partition failed");
    }
    for (int l = 0; l <= n; ++l) {
      std::uint64_t total = 0;
      for (std::uint64_t x = 0; x < s.universe(); ++x) total += sphere_count(s, Vertex(n, x), l);
      out.require(total == binomial(n, l) * s.size(), "double counting failed");
    }
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "exc(n, V_2) = ceil(2^{n+1}/3) for n = 2..5", 60.0, kostochka_values},
      {2, "unique extremal class for V_2 at n = 3, 4, equal to S_0", 120.0, kostochka_uniqueness},
      {3, "constructions are free of their families", 10.0, construction_freeness},
      {4, "counting identities hold exactly", 30.0, counting_identities},
      {5, "Mantel diagnostic on S_2, n = 10", 10.0, mantel},
      {6, "stability statistics of S_0, n = 12, delta = 1/5", 5.0, stability},
      {7, "mu(d) bounds and t_3 point counts", 1.0, mu_arithmetic},
      {8, "S_{d+1} meets each d-subcube in at most C(d, d/2) points", 30.0, subcube_points},
      {9, "periodic pattern densities", 60.0, pattern_densities},
      {10, "property suite", 120.0, property_suite},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && seconds > c.limit_seconds) {
      out.ok = false;
      out.detail = "exceeded time limit";
    }
    failures += !out.ok;
    std::printf("[%s] criterion %d: %s (%.2f s, limit %.0f s)%s%s\n", out.ok ? "PASS" : "FAIL", c.id,
                c.title.c_str(), seconds, c.limit_seconds, out.detail.empty() ? "" : " - ",
                out.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
