#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "auvform/angles.hpp"

namespace auvform {

/// splitmix64 step; used to derive independent stream seeds from a master
/// seed so that agent/environment streams never alias.
inline std::uint64_t split_seed(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic random stream. All stochastic behavior in the project goes
/// through this type; the gaussian is a cache-free Box-Muller so the whole
/// stream state is exactly the engine state.
class Rng {
public:
  Rng() : engine_(0) {}
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1).
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal via Box-Muller on (0,1] x [0,1).
  double gaussian() {
    double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

  /// Uniform integer on [0, n).
  std::uint64_t below(std::uint64_t n) {
    // Multiply-shift rejection-free mapping; bias is < 2^-64 per draw.
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(engine_()) * n) >> 64);
  }

  /// Derives a child stream; advances this stream by one draw.
  Rng fork() { return Rng(engine_()); }

private:
  std::mt19937_64 engine_;
};

}  // namespace auvform
