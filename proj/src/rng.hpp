// Copyright 2026 The mpinli Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MPINLI_RNG_HPP_
#define MPINLI_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <random>

namespace mpinli {

// Counted draw stream over a seeded mt19937_64. Uniform and normal variates
// are derived from the raw 64-bit output by hand (no std distributions, whose
// sequences vary across standard libraries), so identical seed + draw
// sequence gives identical values everywhere.
class RngStream {
 public:
  explicit RngStream(uint64_t seed) : seed_(seed), engine_(seed) {}

  uint64_t seed() const { return seed_; }
  uint64_t counter() const { return counter_; }

  uint64_t next_u64() {
    ++counter_;
    return engine_();
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Integer in [0, n). Modulo bias is irrelevant at the sizes used here.
  int uniform_int(int n) { return static_cast<int>(next_u64() % static_cast<uint64_t>(n)); }

  // Box-Muller; two raw draws per variate, no cached spare.
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  uint64_t seed_;
  uint64_t counter_ = 0;
  std::mt19937_64 engine_;
};

}  // namespace mpinli

#endif  // MPINLI_RNG_HPP_
