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

#include "edgeldp/mechanisms.h"

#include <algorithm>

#include "absl/strings/str_format.h"

namespace edgeldp {

absl::StatusOr<PrivacyBudget> PrivacyBudget::Create(double eps0, double eps1,
                                                    double eps2, double zeta) {
  for (auto [name, value] : {std::pair{"eps0", eps0}, std::pair{"eps1", eps1},
                             std::pair{"eps2", eps2}}) {
    if (!(value > 0.0)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("%s must be positive, got %g", name, value));
    }
  }
  if (!(zeta > 0.0 && zeta <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("zeta must lie in (0, 1], got %g", zeta));
  }
  return PrivacyBudget{eps0, eps1, eps2, zeta};
}

absl::Status CheckBudget(const PrivacyBudget& budget, double eps_total) {
  if (budget.total() <= eps_total + kBudgetSlack) return absl::OkStatus();
  return absl::InvalidArgumentError(absl::StrFormat(
      "privacy budget violated: eps0 + eps1 + eps2 = %.17g exceeds eps = %.17g",
      budget.total(), eps_total));
}

double LaplaceQuantile(double u, double scale) {
  const double centered = u - 0.5;
  if (centered == 0.0) return 0.0;
  const double tail = std::log1p(-2.0 * std::abs(centered));
  return centered < 0.0 ? scale * tail : -scale * tail;
}

absl::StatusOr<double> SampleLaplace(double scale, Rng& rng) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("Laplace scale must be positive and finite, got %g", scale));
  }
  return LaplaceQuantile(rng.NextUniform(), scale);
}

absl::StatusOr<double> LaplaceQuery(double value, double sensitivity, double eps,
                                    Rng& rng) {
  if (!(sensitivity > 0.0) || !(eps > 0.0)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "Laplace query needs positive sensitivity and eps, got %g and %g",
        sensitivity, eps));
  }
  if (std::isinf(eps)) return value;
  auto noise = SampleLaplace(sensitivity / eps, rng);
  if (!noise.ok()) return noise.status();
  return value + *noise;
}

double KeepProbability(double eps) { return 1.0 / (1.0 + std::exp(-eps)); }

double UnbiasedSpread(double eps) { return 1.0 + 2.0 / std::expm1(eps); }

std::vector<std::uint8_t> RandomizeResponseRow(std::span<const std::uint8_t> bits,
                                               double eps1, Rng& rng) {
  std::vector<std::uint8_t> out(bits.begin(), bits.end());
  if (std::isinf(eps1)) return out;
  const double keep = KeepProbability(eps1);
  for (auto& bit : out) {
    if (!rng.NextBernoulli(keep)) bit ^= 1;
  }
  return out;
}

double Unbias(std::uint8_t bit, double eps1) {
  const double denom = std::expm1(eps1);
  return bit ? 1.0 + 1.0 / denom : -1.0 / denom;
}

double UnbiasedVariance(double eps1) {
  const double denom = std::expm1(eps1);
  return (denom + 1.0) / (denom * denom);
}

std::vector<double> ObfuscatedGraph::UnbiasedMatrix() const {
  std::vector<double> matrix(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      matrix[i * n_ + j] =
          unbiased(static_cast<NodeId>(i), static_cast<NodeId>(j));
    }
  }
  return matrix;
}

absl::StatusOr<ObfuscatedGraph> AssembleObfuscated(
    std::span<const std::vector<std::uint8_t>> rows, double eps1) {
  if (!(eps1 > 0.0)) {
    return absl::InvalidArgumentError("eps1 must be positive");
  }
  const std::size_t n = rows.size();
  ObfuscatedGraph obf;
  obf.n_ = n;
  obf.eps1_ = eps1;
  obf.one_value_ = Unbias(1, eps1);
  obf.zero_value_ = Unbias(0, eps1);
  obf.bits_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != i) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "user %d reported %d bits, expected %d", i, rows[i].size(), i));
    }
    for (std::size_t j = 0; j < i; ++j) {
      const std::uint8_t bit = rows[i][j];
      if (bit > 1) {
        return absl::InvalidArgumentError(
            absl::StrFormat("user %d reported a non-binary value", i));
      }
      obf.bits_[i * n + j] = bit;
      obf.bits_[j * n + i] = bit;
    }
  }
  return obf;
}

std::vector<NodeId> ProjectMu(std::span<const NodeId> neighbors, std::size_t d) {
  const std::size_t keep = std::min(neighbors.size(), d);
  return {neighbors.begin(), neighbors.begin() + keep};
}

}  // namespace edgeldp
