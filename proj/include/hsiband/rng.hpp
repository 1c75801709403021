#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>
#include <vector>

namespace hsiband {

// Deterministic splitmix64 generator. The state advances by the Weyl constant
// 0x9e3779b97f4a7c15 and the output is finalized with the multipliers
// 0xbf58476d1ce4e5b9 and 0x94d049bb133111eb, so a (seed, tag) pair produces
// the same stream on every platform. Tagged streams let independent pipeline
// stages (split, sample order, synthesis) share one user-facing seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  Rng(std::uint64_t seed, std::string_view tag) : state_(seed ^ fnv1a(tag)) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound). The modulo bias is irrelevant next to determinism.
  std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

  bool next_bool() { return (next_u64() & 1u) != 0; }

  // Standard normal via Box-Muller; caches the second deviate.
  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = next_double();
    double u2 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {  // Fisher-Yates
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  static std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  std::uint64_t state_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace hsiband
