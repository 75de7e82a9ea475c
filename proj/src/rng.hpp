// Copyright 2026 The qswnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSWNET_SRC_RNG_HPP_
#define QSWNET_SRC_RNG_HPP_

#include <cstdint>

namespace qsw {

// SplitMix64 (Steele, Lea, Flood 2014). Tiny, fast, and identical on every
// platform, which is what the reproducibility contract needs.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool next_bernoulli(double p) { return next_unit() < p; }

  /// Uniform integer in [0, bound), bound > 0.
  std::uint32_t next_below(std::uint32_t bound) {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

// Counter-mode stream derivation: trial `index` of a run gets its own
// generator, so trials stay independent of evaluation order.
inline std::uint64_t derive_stream_seed(std::uint64_t run_seed,
                                        std::uint64_t index) {
  return SplitMix64(run_seed ^ (0xA0761D6478BD642Full * (index + 1))).next();
}

}  // namespace qsw

#endif  // QSWNET_SRC_RNG_HPP_
