//
// Copyright 2026 The edgeldp Authors
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
//

#ifndef EDGELDP_RNG_H_
#define EDGELDP_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace edgeldp {

// SplitMix64-chained hash of a word sequence.
std::uint64_t Hash64(std::initializer_list<std::uint64_t> words);

// mt19937_64 with portable conversions. The standard library distributions
// are implementation-defined, so everything drawn from an Rng goes through
// the members below to stay bit-exact across toolchains.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform on the open interval (0, 1), 53-bit resolution.
  double NextUniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound), bound > 0. Rejection keeps it unbiased.
  std::uint64_t NextBelow(std::uint64_t bound);

  bool NextBernoulli(double p) { return NextUniform() < p; }

 private:
  std::mt19937_64 engine_;
};

// Tags the query a draw belongs to, so each user's three queries use
// unrelated substreams.
enum class Stream : std::uint64_t {
  kDegreeNoise = 1,
  kRandomizedResponse = 2,
  kCountNoise = 3,
  kGenerator = 4,
  kBaseline = 5,
};

// Per-user substreams for one Monte-Carlo trial. The substream seed is
// Hash64(master, trial, user, stream), so user work can run in any order or
// on any thread and reproduce the same draws.
class TrialStreams {
 public:
  TrialStreams(std::uint64_t master_seed, std::uint64_t trial)
      : master_seed_(master_seed), trial_(trial) {}

  Rng ForUser(std::uint64_t user, Stream stream) const {
    return Rng(Hash64({master_seed_, trial_, user, static_cast<std::uint64_t>(stream)}));
  }

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t trial() const { return trial_; }

 private:
  std::uint64_t master_seed_;
  std::uint64_t trial_;
};

}  // namespace edgeldp

#endif  // EDGELDP_RNG_H_
