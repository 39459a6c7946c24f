#pragma once
// Counter-based splittable pseudorandom generator. Every draw is a hash of
// (key, counter), so streams can be split hierarchically and replayed exactly
// from a seed regardless of evaluation order elsewhere.

#include <cmath>
#include <cstdint>
#include <limits>

#include "semihilbert/types.hpp"

namespace semihilbert {

class SplitRng {
 public:
  using result_type = std::uint64_t;

  explicit SplitRng(std::uint64_t seed) : key_(mix(seed + kGolden)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~std::uint64_t{0}; }

  result_type operator()() { return mix(key_ + (++counter_) * kGolden); }

  // child stream independent of this stream's position
  SplitRng split(std::uint64_t stream) const {
    SplitRng child(0);
    child.key_ = mix(key_ ^ mix(kGolden * (2 * stream + 1)));
    child.counter_ = 0;
    return child;
  }

  double uniform() {  // [0, 1)
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  double normal() {  // N(0, 1) via Box-Muller, one value per pair of uniforms
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const auto [z0, z1] = gauss_pair();
    spare_ = z1;
    have_spare_ = true;
    return z0;
  }

  // standard complex normal, E|z|^2 = 1
  std::complex<double> cnormal() {
    const auto [z0, z1] = gauss_pair();
    return {z0 * kInvSqrt2, z1 * kInvSqrt2};
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
  static constexpr double kInvSqrt2 = 0.7071067811865475244;

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  std::pair<double, double> gauss_pair() {
    const double u1 = (static_cast<double>((*this)() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * 3.14159265358979323846 * u2;
    return {r * std::cos(t), r * std::sin(t)};
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0;
  bool have_spare_ = false;
};

}  // namespace semihilbert
