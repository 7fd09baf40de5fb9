#include "hcube/configurations.hpp"

#include <algorithm>
#include <numeric>

namespace hcube {

Configuration::Configuration(int dim, std::vector<std::uint64_t> points)
    : dim_(dim), points_(std::move(points)) {
  if (dim < 1 || dim > kMaxStreamDim) throw CubeError("configuration dimension out of range");
  std::sort(points_.begin(), points_.end());
  if (std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
    throw CubeError("configuration contains a duplicate point");
  }
  for (auto p : points_) {
    if ((p & ~low_mask(dim)) != 0) throw CubeError("configuration point outside V_d");
  }
}

std::vector<Vertex> Configuration::vertices() const {
  std::vector<Vertex> out;
  out.reserve(points_.size());
  for (auto p : points_) out.emplace_back(dim_, p);
  return out;
}

ConfigurationFamily::ConfigurationFamily(std::vector<Configuration> members)
    : members_(std::move(members)) {
  if (members_.empty()) throw CubeError("configuration family must be nonempty");
}

int ConfigurationFamily::max_dim() const {
  int d = 0;
  for (const auto& m : members_) d = std::max(d, m.dim());
  return d;
}

bool ConfigurationFamily::has_empty_member() const {
  return std::any_of(members_.begin(), members_.end(), [](const auto& m) { return m.empty(); });
}

namespace {

// Pairs {i, j} with one even and one odd 0-based index. Parity of 1-based
// coordinates is the same relation.
std::vector<std::uint64_t> opposite_parity_pairs(int d) {
  std::vector<std::uint64_t> out;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      if ((i - j) % 2 != 0) out.push_back((std::uint64_t{1} << i) | (std::uint64_t{1} << j));
    }
  }
  return out;
}

}  // namespace

Configuration make_g(int d) {
  if (d < 2) throw CubeError("G_d requires d >= 2");
  std::vector<std::uint64_t> pts{0};
  for (int i = 0; i < d; ++i) pts.push_back(std::uint64_t{1} << i);
  auto pairs = opposite_parity_pairs(d);
  pts.insert(pts.end(), pairs.begin(), pairs.end());
  return Configuration(d, std::move(pts));
}

Configuration make_f(int which) {
  // Coordinate 1 is bit 0: (1,1,0) -> 0b011.
  switch (which) {
    case 1:
      return Configuration(3, {0b000, 0b001, 0b010, 0b100});
    case 2:
      return Configuration(3, {0b000, 0b011, 0b101, 0b110});
    case 3:
      return Configuration(3, {0b000, 0b111});
    default:
      throw CubeError("F configuration index must be 1, 2 or 3");
  }
}

Configuration make_f_general(GeneralKind kind, int d) {
  if (d < 3) throw CubeError("general F configurations require d >= 3");
  std::vector<std::uint64_t> pts{0};
  switch (kind) {
    case GeneralKind::kStar:
      for (int i = 0; i < d; ++i) pts.push_back(std::uint64_t{1} << i);
      break;
    case GeneralKind::kEvenStar: {
      auto pairs = opposite_parity_pairs(d);
      pts.insert(pts.end(), pairs.begin(), pairs.end());
      break;
    }
    case GeneralKind::kAntipodal:
      pts.push_back(low_mask(d));
      break;
  }
  return Configuration(d, std::move(pts));
}

PointSet make_construction(Construction which, int n, int d) {
  PointSet out(n);
  const auto keep_by_weight = [&](auto&& pred) {
    for (std::uint64_t b = 0; b < out.universe(); ++b) {
      if (pred(std::popcount(b))) out.insert(b);
    }
  };
  switch (which) {
    case Construction::kDeleteLayer0:
    case Construction::kDeleteLayer1:
    case Construction::kDeleteLayer2: {
      const int i = static_cast<int>(which) - static_cast<int>(Construction::kDeleteLayer0);
      keep_by_weight([&](int w) { return w % 3 != i; });
      break;
    }
    case Construction::kEven:
      keep_by_weight([](int w) { return w % 2 == 0; });
      break;
    case Construction::kZeroOneMod4:
      keep_by_weight([](int w) { return w % 4 == 0 || w % 4 == 1; });
      break;
    case Construction::kZeroMod3:
      keep_by_weight([](int w) { return w % 3 == 0; });
      break;
    case Construction::kZeroMod4:
      keep_by_weight([](int w) { return w % 4 == 0; });
      break;
    case Construction::kZeroModDPlus1:
      if (d < 1) throw CubeError("S_{d+1} requires d >= 1");
      keep_by_weight([&](int w) { return w % (d + 1) == 0; });
      break;
    case Construction::kNonStable: {
      if (n % 2 != 0) throw CubeError("the non-stable construction requires even n");
      const int half = n / 2;
      const std::uint64_t first_half = low_mask(half);
      for (std::uint64_t b = 0; b < out.universe(); ++b) {
        const int w = std::popcount(b);
        if (w <= half) {
          if (w % 3 != 0) out.insert(b);
        } else if (w >= half + 3) {
          if (std::popcount(b ^ first_half) % 3 != 0) out.insert(b);
        }
      }
      break;
    }
  }
  return out;
}

std::pair<Construction, int> parse_construction(const std::string& name) {
  if (name == "S0") return {Construction::kDeleteLayer0, 0};
  if (name == "S1") return {Construction::kDeleteLayer1, 0};
  if (name == "S2") return {Construction::kDeleteLayer2, 0};
  if (name == "S_1") return {Construction::kEven, 0};
  if (name == "S_2") return {Construction::kZeroOneMod4, 0};
  if (name == "S_12") return {Construction::kZeroMod3, 0};
  if (name == "S_23") return {Construction::kZeroMod4, 0};
  if (name == "nonstab") return {Construction::kNonStable, 0};
  const std::string prefix = "S_d+1:";
  if (name.rfind(prefix, 0) == 0) {
    try {
      const int d = std::stoi(name.substr(prefix.size()));
      if (d >= 1) return {Construction::kZeroModDPlus1, d};
    } catch (const std::exception&) {
    }
  }
  throw CubeError("unknown construction name: " + name);
}

std::vector<int> multipartite_parts(int d) {
  if (d < 2) throw CubeError("multipartite partition requires d >= 2");
  std::vector<int> parts;
  int threes = d / 3;
  int twos = 0;
  switch (d % 3) {
    case 1:
      threes -= 1;
      twos = 2;
      break;
    case 2:
      twos = 1;
      break;
    default:
      break;
  }
  parts.assign(static_cast<std::size_t>(threes), 3);
  parts.insert(parts.end(), static_cast<std::size_t>(twos), 2);
  return parts;
}

Configuration make_multipartite_config(int d, std::span<const int> parts) {
  if (parts.empty()) throw CubeError("multipartite configuration needs at least one part");
  if (std::accumulate(parts.begin(), parts.end(), 0) != d) {
    throw CubeError("multipartite parts must sum to d");
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 2 || parts[i] > 3) throw CubeError("multipartite parts must be 2 or 3");
    if (i > 0 && parts[i] > parts[i - 1]) throw CubeError("multipartite parts must be sorted descending");
  }
  std::vector<std::uint64_t> pts{0};
  int start = 0;
  for (int p : parts) {
    std::vector<std::uint64_t> next;
    for (auto base : pts) {
      for (int j = 0; j < p; ++j) next.push_back(base | (std::uint64_t{1} << (start + j)));
    }
    pts = std::move(next);
    start += p;
  }
  return Configuration(d, std::move(pts));
}

TValues t_values(int d) {
  if (d < 2) throw CubeError("t values require d >= 2");
  const int r = (d + 2) / 3;
  const std::uint64_t t2 = (r % 2 == 1) ? 0 : 1;
  const auto pow3 = [](int e) {
    std::uint64_t v = 1;
    for (int i = 0; i < e; ++i) v *= 3;
    return v;
  };
  std::uint64_t t3 = 0;
  switch (d % 3) {
    case 0:
      t3 = pow3(d / 3);
      break;
    case 1:
      t3 = 4 * pow3((d - 4) / 3);
      break;
    default:
      t3 = 2 * pow3((d - 2) / 3);
      break;
  }
  return {t2, t3};
}

}  // namespace hcube
