// Copyright 2026 The fpeval Authors
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

// Portable seeded randomness. std::mt19937_64 is specified bit-exactly by
// the standard, but the std distributions are not, so bounded integers and
// reals are derived here by hand.

#ifndef FPEVAL_RANDOM_H_
#define FPEVAL_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace fpeval {

// SplitMix64 finalizer applied to seed and stream index; used to give every
// iteration of a parallel loop its own independent generator.
uint64_t DeriveSeed(uint64_t seed, uint64_t stream);

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }
  // Uniform in [0, n). n must be > 0.
  uint64_t Uniform(uint64_t n);
  // Uniform in [0, 1) with 53 random bits.
  double UniformReal();
  // Index drawn with probability proportional to weights[i].
  size_t Categorical(std::span<const double> weights);
  bool Bernoulli(double p) { return UniformReal() < p; }

 private:
  std::mt19937_64 engine_;
};

// `k` distinct indices from [0, n) in draw order (partial Fisher-Yates).
std::vector<size_t> SampleWithoutReplacement(size_t n, size_t k, Rng& rng);

}  // namespace fpeval

#endif  // FPEVAL_RANDOM_H_
