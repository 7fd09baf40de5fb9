#include "hcube/embeddings.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace hcube {

namespace {

std::size_t mask_words(int d) { return std::max<std::size_t>(1, (std::size_t{1} << d) / 64); }

std::vector<std::uint64_t> to_local_mask(int d, const std::vector<std::uint64_t>& points) {
  std::vector<std::uint64_t> mask(mask_words(d), 0);
  for (auto p : points) mask[p >> 6] |= std::uint64_t{1} << (p & 63);
  return mask;
}

bool mask_within(const std::vector<std::uint64_t>& inner, const std::vector<std::uint64_t>& outer) {
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if ((inner[i] & ~outer[i]) != 0) return false;
  }
  return true;
}

// Fills `mask` with S ∩ C in local coordinates and returns the count.
std::uint64_t load_subcube(const PointSet& s, const Subcube& c, std::vector<std::uint64_t>& mask) {
  std::fill(mask.begin(), mask.end(), 0);
  std::uint64_t count = 0;
  std::uint64_t sub = 0;
  std::uint64_t local = 0;
  do {
    if (s.contains(c.fixed | sub)) {
      mask[local >> 6] |= std::uint64_t{1} << (local & 63);
      ++count;
    }
    ++local;
    sub = (sub - c.varying) & c.varying;
  } while (sub != 0);
  return count;
}

void check_orbit_dim(int d) {
  if (d > kMaxOrbitDim) {
    throw CubeError("orbit generation limited to d <= " + std::to_string(kMaxOrbitDim));
  }
}

std::uint64_t swap_bits(std::uint64_t x, int i, int j) {
  const std::uint64_t bi = (x >> i) & 1U;
  const std::uint64_t bj = (x >> j) & 1U;
  if (bi == bj) return x;
  return x ^ ((std::uint64_t{1} << i) | (std::uint64_t{1} << j));
}

}  // namespace

void for_each_subcube(int n, int d, const std::function<bool(const Subcube&)>& fn) {
  if (d < 1 || n < d) throw CubeError("subcube enumeration requires 1 <= d <= n");
  if (n > kMaxSetDim) throw CubeError("subcube enumeration limited to n <= 24");
  bool stop = false;
  for_each_combination(n, d, [&](std::uint64_t varying) {
    if (stop) return;
    const std::uint64_t comp = low_mask(n) & ~varying;
    std::uint64_t fixed = 0;
    do {
      if (!fn(Subcube{n, varying, fixed})) {
        stop = true;
        return;
      }
      fixed = (fixed - comp) & comp;
    } while (fixed != 0);
  });
}

std::vector<Subcube> enumerate_subcubes(int n, int d) {
  std::vector<Subcube> out;
  for_each_subcube(n, d, [&](const Subcube& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

Orbit config_orbit(const Configuration& f) {
  const int d = f.dim();
  check_orbit_dim(d);
  // Adjacent transpositions and one coordinate flip generate Aut(Q_d), so a
  // breadth-first closure under them reaches every image.
  std::set<std::vector<std::uint64_t>> seen{f.points()};
  std::deque<std::vector<std::uint64_t>> queue{f.points()};
  Orbit orbit{d, {}};
  while (!queue.empty()) {
    auto current = std::move(queue.front());
    queue.pop_front();
    orbit.members.emplace_back(d, current);
    const auto visit = [&](auto&& map) {
      std::vector<std::uint64_t> image;
      image.reserve(current.size());
      for (auto p : current) image.push_back(map(p));
      std::sort(image.begin(), image.end());
      if (seen.insert(image).second) queue.push_back(std::move(image));
    };
    for (int i = 0; i + 1 < d; ++i) {
      visit([i](std::uint64_t p) { return swap_bits(p, i, i + 1); });
    }
    visit([](std::uint64_t p) { return p ^ 1U; });
  }
  return orbit;
}

std::optional<Placement> find_witness(const PointSet& s, const Configuration& f) {
  const int n = s.dim();
  const int d = f.dim();
  if (d > n) throw CubeError("configuration dimension exceeds the point set dimension");
  if (f.empty()) return Placement{n, {}};
  const Orbit orbit = config_orbit(f);
  std::vector<std::vector<std::uint64_t>> masks;
  masks.reserve(orbit.members.size());
  for (const auto& m : orbit.members) masks.push_back(to_local_mask(d, m.points()));

  std::vector<std::uint64_t> local(mask_words(d));
  std::optional<Placement> witness;
  for_each_subcube(n, d, [&](const Subcube& c) {
    if (load_subcube(s, c, local) < f.size()) return true;
    for (std::size_t k = 0; k < masks.size(); ++k) {
      if (!mask_within(masks[k], local)) continue;
      Placement p{n, {}};
      for (auto q : orbit.members[k].points()) p.points.push_back(c.embed(q));
      std::sort(p.points.begin(), p.points.end());
      witness = std::move(p);
      return false;
    }
    return true;
  });
  return witness;
}

bool is_family_free(const PointSet& s, const ConfigurationFamily& family) {
  for (const auto& f : family.members()) {
    if (f.dim() > s.dim()) throw CubeError("family member dimension exceeds the point set dimension");
  }
  return std::none_of(family.members().begin(), family.members().end(),
                      [&](const auto& f) { return find_witness(s, f).has_value(); });
}

void for_each_placement(int n, const Configuration& f,
                        const std::function<void(std::span<const std::uint64_t>)>& fn) {
  const int d = f.dim();
  if (d > n) throw CubeError("configuration dimension exceeds n");
  if (n > kMaxPlacementDim) throw CubeError("placements are materialized only for n <= 16");
  if (f.empty()) throw CubeError("the empty configuration has no placements");
  const Orbit orbit = config_orbit(f);
  std::vector<std::uint64_t> table(std::size_t{1} << d);
  std::vector<std::uint64_t> image(f.size());
  for_each_combination(n, d, [&](std::uint64_t varying) {
    std::uint64_t sub = 0;
    std::size_t local = 0;
    do {
      table[local++] = sub;
      sub = (sub - varying) & varying;
    } while (sub != 0);
    const std::uint64_t comp = low_mask(n) & ~varying;
    std::uint64_t fixed = 0;
    do {
      for (const auto& member : orbit.members) {
        // Sorted local points map to sorted images: the table is increasing.
        const auto& pts = member.points();
        for (std::size_t i = 0; i < pts.size(); ++i) image[i] = fixed | table[pts[i]];
        fn(image);
      }
      fixed = (fixed - comp) & comp;
    } while (fixed != 0);
  });
}

std::vector<Placement> all_placements(int n, const ConfigurationFamily& family) {
  struct VecHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
      std::size_t h = v.size();
      for (auto x : v) h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return h;
    }
  };
  std::unordered_set<std::vector<std::uint64_t>, VecHash> seen;
  std::vector<Placement> out;
  for (const auto& f : family.members()) {
    for_each_placement(n, f, [&](std::span<const std::uint64_t> pts) {
      std::vector<std::uint64_t> key(pts.begin(), pts.end());
      if (seen.insert(key).second) out.push_back(Placement{n, std::move(key)});
    });
  }
  return out;
}

CopyDetector::CopyDetector(int n, const ConfigurationFamily& family) : n_(n) {
  if (n > kMaxSetDim) throw CubeError("copy detection limited to n <= 24");
  for (const auto& f : family.members()) {
    if (f.dim() > n) throw CubeError("family member dimension exceeds n");
    Member m{f.dim(), f.size(), {}, {}};
    for (const auto& g : config_orbit(f).members) m.orbit_masks.push_back(to_local_mask(f.dim(), g.points()));
    for_each_combination(n, f.dim(), [&](std::uint64_t varying) { m.varying_sets.push_back(varying); });
    members_.push_back(std::move(m));
  }
}

bool CopyDetector::creates_copy(const PointSet& s, std::uint64_t v) const {
  for (const auto& m : members_) {
    if (m.size == 0) return true;
    std::vector<std::uint64_t> local(mask_words(m.dim));
    for (auto varying : m.varying_sets) {
      const Subcube c{n_, varying, v & ~varying};
      // Local index of v inside this subcube.
      std::uint64_t idx = 0;
      int bit = 0;
      for (std::uint64_t rest = varying; rest != 0; rest &= rest - 1, ++bit) {
        if (v & rest & (~rest + 1)) idx |= std::uint64_t{1} << bit;
      }
      std::uint64_t count = load_subcube(s, c, local);
      if (!((local[idx >> 6] >> (idx & 63)) & 1U)) {
        local[idx >> 6] |= std::uint64_t{1} << (idx & 63);
        ++count;
      }
      if (count < m.size) continue;
      for (const auto& mask : m.orbit_masks) {
        if (((mask[idx >> 6] >> (idx & 63)) & 1U) && mask_within(mask, local)) return true;
      }
    }
  }
  return false;
}

}  // namespace hcube
