#ifndef HCUBE_CUBE_HPP
#define HCUBE_CUBE_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace hcube {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<std::int64_t>;

/// Thrown for every violated precondition (dimension mismatch, caps, bad names).
class CubeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Largest dimension for operations that only stream vertices.
inline constexpr int kMaxStreamDim = 63;
/// Largest dimension for operations backed by a 2^n membership table.
inline constexpr int kMaxSetDim = 24;

/// A point of V_n. Bit i of `bits` holds coordinate i+1.
class Vertex {
 public:
  Vertex(int dim, std::uint64_t bits);

  static Vertex zero(int dim) { return Vertex(dim, 0); }
  /// Parses a binary string, coordinate 1 leftmost.
  static Vertex parse(const std::string& text);

  int dim() const { return dim_; }
  std::uint64_t bits() const { return bits_; }
  bool coordinate(int i) const { return (bits_ >> i) & 1U; }

  std::string to_string() const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;

 private:
  int dim_;
  std::uint64_t bits_;
};

/// A subset of V_n stored as a 2^n-bit membership table.
class PointSet {
 public:
  explicit PointSet(int dim);

  static PointSet full(int dim);
  static PointSet from_bits(int dim, std::span<const std::uint64_t> members);

  int dim() const { return dim_; }
  std::uint64_t universe() const { return std::uint64_t{1} << dim_; }

  bool contains(std::uint64_t bits) const {
    return (words_[bits >> 6] >> (bits & 63)) & 1U;
  }
  bool contains(const Vertex& x) const;

  void insert(std::uint64_t bits);
  void erase(std::uint64_t bits);

  std::uint64_t size() const;
  bool empty() const { return size() == 0; }

  /// Members in increasing order of their bit words.
  std::vector<std::uint64_t> members() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        const int b = std::countr_zero(word);
        fn((static_cast<std::uint64_t>(w) << 6) | static_cast<std::uint64_t>(b));
        word &= word - 1;
      }
    }
  }

  PointSet complement() const;
  bool is_subset_of(const PointSet& other) const;

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  void trim();

  int dim_;
  std::vector<std::uint64_t> words_;
};

// Combinatorics helpers.

std::uint64_t binomial(int n, int k);

inline int popcount(std::uint64_t bits) { return std::popcount(bits); }

inline std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// Scatters the low bits of `local` into the set positions of `mask`.
std::uint64_t deposit_bits(std::uint64_t local, std::uint64_t mask);

/// Calls fn(mask) for each k-subset of {0..n-1}, in lexicographic order of
/// the sorted index tuples.
void for_each_combination(int n, int k, const std::function<void(std::uint64_t)>& fn);

/// Masks of weight k in increasing numeric order (Gosper's successor).
template <typename Fn>
void for_each_weight_mask(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(std::uint64_t{0});
    return;
  }
  const std::uint64_t limit = low_mask(n);
  std::uint64_t m = low_mask(k);
  while (true) {
    fn(m);
    const std::uint64_t c = m & (~m + 1);
    const std::uint64_t r = m + c;
    if (r == 0 || (r & ~limit) != 0) break;
    m = (((r ^ m) >> 2) / c) | r;
    if ((m & ~limit) != 0) break;
  }
}

// Core operations.

int weight(const Vertex& x);
int hamming(const Vertex& x, const Vertex& y);

/// Γ_l(x), sorted by bit word.
std::vector<Vertex> sphere(const Vertex& x, int l);

/// |S ∩ Γ_l(x)|.
std::uint64_t sphere_count(const PointSet& s, const Vertex& x, int l);

/// |S ∩ Γ_l(x) ∩ Γ_l(z)|.
std::uint64_t pair_sphere_count(const PointSet& s, const Vertex& x, const Vertex& z, int l);

/// Union of the layers whose weights are listed.
PointSet layer_set(int n, std::span<const int> weights);

/// A hypercube automorphism: y_{perm[i]} = x_i, then y ^= flip.
struct CubeAutomorphism {
  std::vector<int> perm;
  std::uint64_t flip = 0;

  std::uint64_t apply(std::uint64_t bits) const;
  PointSet apply(const PointSet& s) const;
};

/// Visits all 2^n·n! automorphisms of Q_n. Stops early when fn returns false.
void for_each_automorphism(int n, const std::function<bool(const CubeAutomorphism&)>& fn);

}  // namespace hcube

#endif  // HCUBE_CUBE_HPP
