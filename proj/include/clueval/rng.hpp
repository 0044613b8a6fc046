// Copyright 2026 The clueval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#pragma once

#include <cstdint>

namespace clueval {

// Counter-based randomness: every sampling decision is a pure function of
// (seed, phase, cluster, point). Any execution order -- sequential loop or
// concurrent pipeline workers -- therefore reproduces the same draws.

/// SplitMix64 finalizer; the core bit mixer for keyed draws.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace phase {
inline constexpr std::uint64_t initial = 0x1000;     // initial reference sample
inline constexpr std::uint64_t final_draw = 0x2000;  // final Poisson sample
inline constexpr std::uint64_t force_pick = 0x3000;  // fallback member pick

/// Phase word for the r-th redraw of the initial sample (r = 0 is the
/// first attempt).
inline constexpr std::uint64_t initial_retry(std::uint32_t r) {
  return initial + (static_cast<std::uint64_t>(r) << 32);
}
}  // namespace phase

inline std::uint64_t derive_key(std::uint64_t seed, std::uint64_t phase_word,
                                std::uint64_t cluster, std::uint64_t point) {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ phase_word);
  h = mix64(h ^ cluster);
  h = mix64(h ^ point);
  return h;
}

/// Maps 64 random bits to [0, 1).
inline double bits_to_unit(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Uniform draw in [0, 1) keyed by (seed, phase, cluster, point).
inline double keyed_uniform(std::uint64_t seed, std::uint64_t phase_word,
                            std::uint64_t cluster, std::uint64_t point) {
  return bits_to_unit(derive_key(seed, phase_word, cluster, point));
}

/// Sequential splitmix64 stream for generator-style randomness (synthetic
/// data, medoid seeding). Output mapping is explicit, so streams are stable
/// across platforms and standard-library versions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double next_unit() { return bits_to_unit(next()); }

  /// Uniform in [-1, 1).
  double next_symmetric() { return 2.0 * next_unit() - 1.0; }

  /// Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (~0ULL / bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace clueval
