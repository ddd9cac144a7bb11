#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace edgeham {

/// SplitMix64. Used everywhere randomness is needed so that seeded runs are
/// reproducible across standard libraries (std distributions are not).
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = 0) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound). Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound) noexcept {
    if (bound <= 1) return 0;
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t x = 0;
    do {
      x = (*this)();
    } while (x >= limit);
    return x % bound;
  }

  int below(int bound) noexcept { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

  /// Uniform double in [0, 1).
  double unit() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::vector<T>& v) noexcept {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(static_cast<std::uint64_t>(i))]);
    }
  }

 private:
  std::uint64_t state_;
};

/// Derives an independent stream seed, e.g. mix_seed(master, round).
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) noexcept {
  SplitMix64 a(master ^ (index * 0xd1b54a32d192ed03ULL));
  a();
  return a() ^ index;
}

}  // namespace edgeham
