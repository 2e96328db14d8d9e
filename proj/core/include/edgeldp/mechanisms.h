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

// Edge-LDP primitives: Laplace noise, randomized response, the unbiased
// correction of randomized-response bits, the degree-cap projection and
// budget accounting.
//
// Passing eps = +infinity to any mechanism selects the no-noise limit: the
// Laplace query returns its input, randomized response keeps every bit and
// Unbias becomes the identity. This is a test-harness mode, not a privacy
// setting.

#ifndef EDGELDP_MECHANISMS_H_
#define EDGELDP_MECHANISMS_H_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "edgeldp/graph.h"
#include "edgeldp/rng.h"

namespace edgeldp {

inline constexpr double kNoNoiseEpsilon = std::numeric_limits<double>::infinity();

// Budget split across the three user queries plus the clipping failure
// probability zeta.
struct PrivacyBudget {
  double eps0 = 0.5;  // noisy degree publication
  double eps1 = 1.0;  // randomized response
  double eps2 = 1.0;  // restricted-sensitivity Laplace on the local count
  double zeta = 0.05;

  // Validates eps0, eps1, eps2 > 0 and zeta in (0, 1].
  static absl::StatusOr<PrivacyBudget> Create(double eps0, double eps1,
                                              double eps2, double zeta);

  // Sequential composition of the three queries.
  double total() const { return eps0 + eps1 + eps2; }

  friend bool operator==(const PrivacyBudget&, const PrivacyBudget&) = default;
};

// Absolute slack absorbing decimal parsing of flag values.
inline constexpr double kBudgetSlack = 1e-12;

// OK iff eps0 + eps1 + eps2 <= eps_total + kBudgetSlack.
absl::Status CheckBudget(const PrivacyBudget& budget, double eps_total);

// Inverse CDF of the centered Laplace distribution with scale b, for u in
// (0, 1). Maps u = 0.5 to exactly 0.
double LaplaceQuantile(double u, double scale);

// One draw from Lap(scale) by inversion of a 53-bit uniform.
absl::StatusOr<double> SampleLaplace(double scale, Rng& rng);

// value + Lap(sensitivity / eps). eps = +inf returns value unchanged.
absl::StatusOr<double> LaplaceQuery(double value, double sensitivity, double eps,
                                    Rng& rng);

// e^eps / (1 + e^eps), computed stably; 1 at eps = +inf.
double KeepProbability(double eps);

// (e^eps + 1) / (e^eps - 1): the spread between the two values an unbiased
// randomized-response entry can take. 1 at eps = +inf.
double UnbiasedSpread(double eps);

// Randomized response over a bit vector: each bit is kept with probability
// KeepProbability(eps1) and flipped otherwise, independently.
std::vector<std::uint8_t> RandomizeResponseRow(std::span<const std::uint8_t> bits,
                                               double eps1, Rng& rng);

// (e^eps + 1)/(e^eps - 1) * bit - 1/(e^eps - 1). E[Unbias(RR(a))] = a.
double Unbias(std::uint8_t bit, double eps1);

// Var[Unbias(RR(a))] = e^eps / (e^eps - 1)^2.
double UnbiasedVariance(double eps1);

// Symmetric randomized-response matrix assembled by the server from the
// users' lower-triangle reports. Entry (i, j) is the bit reported by
// max(i, j) about min(i, j); the diagonal is zero.
class ObfuscatedGraph {
 public:
  ObfuscatedGraph() = default;

  std::size_t num_nodes() const { return n_; }
  double eps1() const { return eps1_; }

  std::uint8_t bit(NodeId i, NodeId j) const { return bits_[i * n_ + j]; }

  // Unbiased entry a-hat(i, j). The diagonal is defined as zero.
  double unbiased(NodeId i, NodeId j) const {
    if (i == j) return 0.0;
    return bits_[i * n_ + j] ? one_value_ : zero_value_;
  }
  double one_value() const { return one_value_; }
  double zero_value() const { return zero_value_; }

  // Dense row-major matrix of unbiased entries with zero diagonal.
  std::vector<double> UnbiasedMatrix() const;

 private:
  friend absl::StatusOr<ObfuscatedGraph> AssembleObfuscated(
      std::span<const std::vector<std::uint8_t>> rows, double eps1);

  std::size_t n_ = 0;
  double eps1_ = 0.0;
  double one_value_ = 1.0;
  double zero_value_ = 0.0;
  std::vector<std::uint8_t> bits_;
};

// rows[i] holds user i's reported bits for j < i (so rows[i].size() == i).
absl::StatusOr<ObfuscatedGraph> AssembleObfuscated(
    std::span<const std::vector<std::uint8_t>> rows, double eps1);

// mu_d: keeps the first min(|neighbors|, d) entries of a sorted neighbor list.
std::vector<NodeId> ProjectMu(std::span<const NodeId> neighbors, std::size_t d);

}  // namespace edgeldp

#endif  // EDGELDP_MECHANISMS_H_
