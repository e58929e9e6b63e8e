#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>

namespace shield {

// Seeded generator with hand-rolled value mappings. std::mt19937_64 output is
// pinned by the standard, the std distributions are not; mapping the raw words
// ourselves keeps every draw bit-identical across standard libraries, which
// the byte-identical-output contracts depend on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // [0,1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // [0,n); n == 0 returns 0
  std::uint64_t uniform_int(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Box-Muller without the cached spare so the draw count per call is fixed.
  double gaussian(double mean, double sd) {
    double u1 = 1.0 - uniform();  // (0,1], keeps log finite
    double u2 = uniform();
    return mean + sd * std::sqrt(-2.0 * std::log(u1)) *
                      std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 eng_;
};

inline std::uint64_t fnv1a_bytes(const void* data, std::size_t n,
                                 std::uint64_t h = 14695981039346656037ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

// Independent per-entity stream derived from one master seed. Streams are
// keyed by a tag plus up to two ids, so adding an entity never perturbs the
// draws of another.
inline Rng stream_rng(std::uint64_t seed, std::string_view tag,
                      std::uint64_t a = 0, std::uint64_t b = 0) {
  std::uint64_t h = fnv1a_bytes(tag.data(), tag.size());
  h = fnv1a_bytes(&seed, sizeof(seed), h);
  h = fnv1a_bytes(&a, sizeof(a), h);
  h = fnv1a_bytes(&b, sizeof(b), h);
  return Rng(h);
}

}  // namespace shield
