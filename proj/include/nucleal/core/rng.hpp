#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace nucleal::core {

/// 64-bit linear congruential generator (modulus 2^64). The constants are
/// fixed so that a seed reproduces the same cases on every platform; the
/// std distributions are not portable, so the mappings below are ours.
class Lcg {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;
  using Engine = std::linear_congruential_engine<std::uint64_t, kMultiplier, kIncrement, 0>;

  explicit Lcg(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, n). Uses the high bits, which are the well-mixed
  /// ones for a power-of-two modulus.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  bool coin(std::uint64_t num = 1, std::uint64_t den = 2) { return below(den) < num; }

  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  Engine engine_;
};

constexpr std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

/// Independent stream for a named sub-run, so adding a law does not shift the
/// cases drawn for the others.
inline Lcg substream(std::uint64_t seed, std::string_view tag) { return Lcg(seed ^ fnv1a(tag)); }

}  // namespace nucleal::core
