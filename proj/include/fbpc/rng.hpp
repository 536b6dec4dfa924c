#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <utility>

namespace fbpc {

namespace detail {
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace detail

// Seeded random stream. Every stochastic operation owns one; sub-streams are
// derived by hashing a tag so results do not depend on call order elsewhere.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // uniform in [0, 1)
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // standard normal via Box-Muller (no cached spare, keeps replay trivial)
  double normal() {
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  // uniform integer in [0, n)
  int64_t uniform_int(int64_t n) {
    const uint64_t un = static_cast<uint64_t>(n);
    const uint64_t limit = UINT64_MAX - UINT64_MAX % un;
    uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return static_cast<int64_t>(r % un);
  }

  template <class RandomIt>
  void shuffle(RandomIt first, RandomIt last) {
    const int64_t n = last - first;
    for (int64_t i = n - 1; i > 0; --i) {
      std::swap(first[i], first[uniform_int(i + 1)]);
    }
  }

  // Deterministic sub-seed from a master seed plus a tag and indices.
  static uint64_t derive(uint64_t seed, std::string_view tag, uint64_t a = 0, uint64_t b = 0) {
    uint64_t h = detail::splitmix64(seed);
    for (char c : tag) h = detail::splitmix64(h ^ static_cast<uint64_t>(static_cast<unsigned char>(c)));
    h = detail::splitmix64(h ^ a);
    h = detail::splitmix64(h ^ b);
    return h;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fbpc
