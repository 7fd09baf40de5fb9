#include "hcube/cube.hpp"

#include <algorithm>
#include <numeric>

namespace hcube {

Vertex::Vertex(int dim, std::uint64_t bits) : dim_(dim), bits_(bits) {
  if (dim < 1 || dim > kMaxStreamDim) {
    throw CubeError("vertex dimension " + std::to_string(dim) + " outside [1, 63]");
  }
  if ((bits & ~low_mask(dim)) != 0) {
    throw CubeError("vertex has bits set beyond its dimension");
  }
}

Vertex Vertex::parse(const std::string& text) {
  if (text.empty() || static_cast<int>(text.size()) > kMaxStreamDim) {
    throw CubeError("vertex string has invalid length");
  }
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= std::uint64_t{1} << i;
    } else if (text[i] != '0') {
      throw CubeError("vertex string contains a character other than 0/1: " + text);
    }
  }
  return Vertex(static_cast<int>(text.size()), bits);
}

std::string Vertex::to_string() const {
  std::string out(static_cast<std::size_t>(dim_), '0');
  for (int i = 0; i < dim_; ++i) {
    if (coordinate(i)) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

PointSet::PointSet(int dim) : dim_(dim) {
  if (dim < 1 || dim > kMaxSetDim) {
    throw CubeError("point set dimension " + std::to_string(dim) + " outside [1, 24]");
  }
  words_.assign(std::max<std::size_t>(1, (std::size_t{1} << dim) / 64), 0);
}

PointSet PointSet::full(int dim) {
  PointSet s(dim);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.trim();
  return s;
}

PointSet PointSet::from_bits(int dim, std::span<const std::uint64_t> members) {
  PointSet s(dim);
  for (auto b : members) s.insert(b);
  return s;
}

bool PointSet::contains(const Vertex& x) const {
  if (x.dim() != dim_) throw CubeError("vertex and point set dimensions differ");
  return contains(x.bits());
}

void PointSet::insert(std::uint64_t bits) {
  if (bits >= universe()) throw CubeError("vertex outside the point set's cube");
  words_[bits >> 6] |= std::uint64_t{1} << (bits & 63);
}

void PointSet::erase(std::uint64_t bits) {
  if (bits >= universe()) throw CubeError("vertex outside the point set's cube");
  words_[bits >> 6] &= ~(std::uint64_t{1} << (bits & 63));
}

std::uint64_t PointSet::size() const {
  std::uint64_t total = 0;
  for (auto w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

std::vector<std::uint64_t> PointSet::members() const {
  std::vector<std::uint64_t> out;
  out.reserve(size());
  for_each([&](std::uint64_t b) { out.push_back(b); });
  return out;
}

PointSet PointSet::complement() const {
  PointSet out(dim_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  out.trim();
  return out;
}

bool PointSet::is_subset_of(const PointSet& other) const {
  if (other.dim_ != dim_) throw CubeError("point set dimensions differ");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

void PointSet::trim() {
  if (dim_ < 6) words_[0] &= low_mask(1 << dim_);
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n-k+i) is divisible by i at every step.
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    const std::uint64_t g = std::gcd(result, static_cast<std::uint64_t>(i));
    result = (result / g) * (num / (static_cast<std::uint64_t>(i) / g));
  }
  return result;
}

std::uint64_t deposit_bits(std::uint64_t local, std::uint64_t mask) {
  std::uint64_t out = 0;
  while (mask != 0 && local != 0) {
    const std::uint64_t lowest = mask & (~mask + 1);
    if (local & 1U) out |= lowest;
    local >>= 1;
    mask &= mask - 1;
  }
  return out;
}

void for_each_combination(int n, int k, const std::function<void(std::uint64_t)>& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::uint64_t mask = 0;
    for (int i : idx) mask |= std::uint64_t{1} << i;
    fn(mask);
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) return;
    ++idx[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

int weight(const Vertex& x) { return std::popcount(x.bits()); }

int hamming(const Vertex& x, const Vertex& y) {
  if (x.dim() != y.dim()) throw CubeError("hamming: dimension mismatch");
  return std::popcount(x.bits() ^ y.bits());
}

namespace {

void check_radius(int n, int l) {
  if (l < 0 || l > n) {
    throw CubeError("radius " + std::to_string(l) + " outside [0, " + std::to_string(n) + "]");
  }
}

void check_dims(const PointSet& s, const Vertex& x) {
  if (s.dim() != x.dim()) throw CubeError("vertex and point set dimensions differ");
}

}  // namespace

std::vector<Vertex> sphere(const Vertex& x, int l) {
  const int n = x.dim();
  check_radius(n, l);
  std::vector<std::uint64_t> words;
  words.reserve(binomial(n, l));
  for_each_weight_mask(n, l, [&](std::uint64_t m) { words.push_back(x.bits() ^ m); });
  std::sort(words.begin(), words.end());
  std::vector<Vertex> out;
  out.reserve(words.size());
  for (auto w : words) out.emplace_back(n, w);
  return out;
}

std::uint64_t sphere_count(const PointSet& s, const Vertex& x, int l) {
  check_dims(s, x);
  check_radius(s.dim(), l);
  std::uint64_t count = 0;
  const std::uint64_t base = x.bits();
  for_each_weight_mask(s.dim(), l, [&](std::uint64_t m) { count += s.contains(base ^ m); });
  return count;
}

std::uint64_t pair_sphere_count(const PointSet& s, const Vertex& x, const Vertex& z, int l) {
  check_dims(s, x);
  check_dims(s, z);
  const int n = s.dim();
  check_radius(n, l);
  const std::uint64_t diff = x.bits() ^ z.bits();
  const int dist = std::popcount(diff);
  if (dist % 2 != 0 || dist > 2 * l) return 0;
  // y = x ^ m with |m| = l lies at distance l from z iff m meets diff in
  // exactly dist/2 coordinates.
  const int inside = dist / 2;
  const int outside = l - inside;
  const std::uint64_t rest = low_mask(n) & ~diff;
  if (outside > n - dist) return 0;
  std::uint64_t count = 0;
  for_each_weight_mask(dist, inside, [&](std::uint64_t a) {
    const std::uint64_t part_in = deposit_bits(a, diff);
    for_each_weight_mask(n - dist, outside, [&](std::uint64_t b) {
      count += s.contains(x.bits() ^ part_in ^ deposit_bits(b, rest));
    });
  });
  return count;
}

PointSet layer_set(int n, std::span<const int> weights) {
  PointSet out(n);
  std::vector<bool> wanted(static_cast<std::size_t>(n) + 1, false);
  for (int w : weights) {
    if (w < 0 || w > n) throw CubeError("layer weight " + std::to_string(w) + " out of range");
    wanted[static_cast<std::size_t>(w)] = true;
  }
  for (std::uint64_t b = 0; b < out.universe(); ++b) {
    if (wanted[static_cast<std::size_t>(std::popcount(b))]) out.insert(b);
  }
  return out;
}

std::uint64_t CubeAutomorphism::apply(std::uint64_t bits) const {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if ((bits >> i) & 1U) out |= std::uint64_t{1} << perm[i];
  }
  return out ^ flip;
}

PointSet CubeAutomorphism::apply(const PointSet& s) const {
  if (static_cast<int>(perm.size()) != s.dim()) throw CubeError("automorphism dimension mismatch");
  PointSet out(s.dim());
  s.for_each([&](std::uint64_t b) { out.insert(apply(b)); });
  return out;
}

void for_each_automorphism(int n, const std::function<bool(const CubeAutomorphism&)>& fn) {
  if (n < 1 || n > 12) throw CubeError("automorphism enumeration limited to n <= 12");
  CubeAutomorphism g;
  g.perm.resize(static_cast<std::size_t>(n));
  std::iota(g.perm.begin(), g.perm.end(), 0);
  do {
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << n); ++f) {
      g.flip = f;
      if (!fn(g)) return;
    }
  } while (std::next_permutation(g.perm.begin(), g.perm.end()));
}

}  // namespace hcube
