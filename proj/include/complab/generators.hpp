#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "complab/digraph.hpp"

namespace complab {

/// SplitMix64 (Steele, Lea, Flood 2014). Used only to expand a 64-bit seed
/// into xoshiro state:
///   z = (x += 0x9e3779b97f4a7c15)
///   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
///   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
///   return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

/// xoshiro256** 1.0 (Blackman, Vigna). State words s[0..3] are four
/// consecutive SplitMix64 outputs of the seed. Output is
/// rotl(s[1] * 5, 7) * 9, followed by the reference state update with
/// t = s[1] << 17 and final rotl(s[3], 45).
class Xoshiro256StarStar {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256StarStar(std::uint64_t seed);

  std::uint64_t next();
  std::uint64_t operator()() { return next(); }

  /// Fair coin: the top bit of next().
  bool coin() { return (next() >> 63) != 0; }

  /// Uniform integer in [0, bound) by rejection on the top of the 64-bit
  /// range (no modulo bias). bound >= 1.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) from the top 53 bits.
  double unit();

  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

 private:
  std::uint64_t s_[4];
};

enum class GenMode { Uniform, Acyclic, Sinkless };

std::string_view to_string(GenMode mode);
/// Throws Error{InvalidArgument} for anything but uniform|acyclic|sinkless.
GenMode parse_gen_mode(std::string_view text);

struct GenSpec {
  std::size_t n1 = 1;
  std::size_t n2 = 1;
  std::uint64_t seed = 0;
  GenMode mode = GenMode::Uniform;
};

/// Bipartite tournament on vertices 0..n1-1 (part 1, labels x1..) and
/// n1..n1+n2-1 (part 2, labels y1..) built from an orientation mask: bit
/// i*n2 + j set means x_{i+1} -> y_{j+1}, clear means y_{j+1} -> x_{i+1}.
BipartiteTournament orientation_from_mask(std::size_t n1, std::size_t n2, std::uint64_t mask);

/// Cross pairs visited in (part1 index, part2 index) order, one coin each.
BipartiteTournament random_bipartite_tournament(const GenSpec& spec);

/// Uniform random total order on all n1 + n2 vertices (Fisher-Yates with
/// `below`), every cross pair oriented from earlier to later.
BipartiteTournament random_acyclic_bipartite_tournament(const GenSpec& spec);

/// Rejection sampling of uniform orientations until no vertex is a sink.
/// Throws Error{InfeasibleParts} when min(n1, n2) < 2, since then one endpoint
/// side always contains a sink, and Error{RetriesExhausted} after
/// `max_retries` rejected draws.
BipartiteTournament random_sinkless_bipartite_tournament(const GenSpec& spec,
                                                         std::size_t max_retries = 10000);

/// Dispatches on spec.mode.
BipartiteTournament generate(const GenSpec& spec);

/// General digraph without loops: each ordered pair (u, v), u != v, in
/// lexicographic order, becomes an arc when unit() < arc_probability.
Digraph random_digraph(std::size_t n, std::uint64_t seed, double arc_probability = 0.5);

inline constexpr std::size_t kMaxEnumerationBits = 20;

/// All 2^{n1 n2} orientations in mask order. Construction throws
/// Error{TooLarge} when n1 * n2 > kMaxEnumerationBits.
class OrientationRange {
 public:
  OrientationRange(std::size_t n1, std::size_t n2);

  class iterator {
   public:
    using value_type = BipartiteTournament;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(std::size_t n1, std::size_t n2, std::uint64_t mask) : n1_(n1), n2_(n2), mask_(mask) {}

    BipartiteTournament operator*() const { return orientation_from_mask(n1_, n2_, mask_); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++mask_;
      return copy;
    }
    std::uint64_t mask() const { return mask_; }
    bool operator==(const iterator& o) const { return mask_ == o.mask_; }

   private:
    std::size_t n1_ = 0;
    std::size_t n2_ = 0;
    std::uint64_t mask_ = 0;
  };

  iterator begin() const { return {n1_, n2_, 0}; }
  iterator end() const { return {n1_, n2_, size()}; }
  std::uint64_t size() const { return std::uint64_t{1} << (n1_ * n2_); }

 private:
  std::size_t n1_;
  std::size_t n2_;
};

OrientationRange enumerate_all(std::size_t n1, std::size_t n2);

/// fig1_D, fig1_Dprime and fig2_D.
std::map<std::string, BipartiteTournament> fixtures();

/// Throws Error{UnknownFixture}.
BipartiteTournament fixture(std::string_view name);

}  // namespace complab
