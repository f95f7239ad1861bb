#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace gridsynth {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace detail

/// Deterministic random stream with named, prefix-stable substreams.
///
/// A stream is identified by a 64-bit key. `substream(name, index)` derives a
/// child key from the parent *key* (not the engine state), so consuming draws
/// from one stream never perturbs any other. This is what makes generated
/// corpora extend cleanly: growing `count` from k to k+1 reuses the exact
/// per-graph streams for the first k graphs.
class RngStream {
 public:
  explicit RngStream(std::uint64_t key)
      : key_(key), engine_(detail::splitmix64(key ^ 0xa02bdbf7bb3c0a7ULL)) {}

  std::uint64_t key() const { return key_; }

  RngStream substream(std::string_view name, std::uint64_t index = 0) const {
    std::uint64_t k = detail::splitmix64(key_ ^ detail::fnv1a(name));
    return RngStream(detail::splitmix64(k + index));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 bits of precision.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; two uniforms per draw, no caching,
  /// so the draw count per call is fixed.
  double normal() {
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  /// Unbiased integer in [0, range).
  std::uint64_t bounded(std::uint64_t range) {
    if (range == 0) return 0;
    std::uint64_t rem = (UINT64_MAX % range + 1) % range;
    std::uint64_t x = engine_();
    if (rem != 0) {
      while (x > UINT64_MAX - rem) x = engine_();
    }
    return x % range;
  }

  /// Uniform integer in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    bounded(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(bounded(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t key_;
  std::mt19937_64 engine_;
};

}  // namespace gridsynth
