// Copyright 2026 The Complearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COMPLEARN_RNG_HPP_
#define COMPLEARN_RNG_HPP_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "complearn/vec.hpp"

namespace complearn {

// SplitMix64: a small splittable counter-based generator, specified by the
// seed alone. Integer arithmetic plus a power-of-two scaling, so streams are
// bit-reproducible across runs and platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53 bits of mantissa.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double low, double high) {
    if (!(low < high)) {
      throw std::invalid_argument("uniform: requires low < high");
    }
    return low + (high - low) * next_double();
  }

  // Derives an independent child stream; advances this stream by one draw.
  SplitMix64 split() { return SplitMix64(next_u64() ^ 0x5851F42D4C957F2Dull); }

 private:
  std::uint64_t state_;
};

inline Vec sample_vec(SplitMix64& rng, std::size_t dim, double low = -1.0,
                      double high = 1.0) {
  std::vector<double> out(dim);
  for (std::size_t i = 0; i < dim; ++i) out[i] = rng.uniform(low, high);
  return Vec(std::move(out));
}

}  // namespace complearn

#endif  // COMPLEARN_RNG_HPP_
