/*
 * Copyright 2026 The xailab authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef XAILAB_RNG_HPP_
#define XAILAB_RNG_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace xailab {

std::uint64_t splitmix64(std::uint64_t x);

// FNV-1a over raw bytes; used for seed derivation and row-content hashing.
std::uint64_t fnv1a64(const void* data, std::size_t len);

// Deterministic PRNG. std::mt19937_64 has a standard-specified output
// sequence, and all real-valued draws below are derived from raw 64-bit
// outputs by fixed arithmetic, so streams are reproducible across
// platforms and standard libraries. The distribution adaptors from
// <random> are deliberately not used: their output is not pinned by the
// standard.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random mantissa bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Standard normal via Box-Muller. No caching of the second value: each
  // call consumes exactly two engine draws, which keeps draw positions
  // independent of call history.
  double normal();

  // Unbiased integer in [0, n) by rejection.
  std::uint64_t uniform_below(std::uint64_t n);

  // Child seed from a parent seed and a purpose tag. Distinct tags give
  // statistically independent streams from one master seed.
  static std::uint64_t derive(std::uint64_t seed, std::string_view tag);

 private:
  std::mt19937_64 engine_;
};

}  // namespace xailab

#endif  // XAILAB_RNG_HPP_
