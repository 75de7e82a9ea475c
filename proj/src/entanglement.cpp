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

#include "entanglement.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qsw {

namespace {

constexpr double kClampSlack = 1e-9;
constexpr double kSeriesCutoff = 1e-18;

std::uint32_t series_limit(std::uint32_t links, ChainConvention conv) {
  return conv == ChainConvention::kVerbatim ? links / 2 : (links - 1) / 2;
}

}  // namespace

SchmidtCoefficient::SchmidtCoefficient(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 0.5)) {
    throw std::domain_error("SchmidtCoefficient must lie in [0, 0.5], got " +
                            std::to_string(value));
  }
}

double clamp_probability(double value, const char* what) {
  if (!(value > -kClampSlack && value < 1.0 + kClampSlack)) {
    throw std::logic_error(std::string(what) +
                           ": probability escaped [0,1] by more than 1e-9: " +
                           std::to_string(value));
  }
  if (value < 0.0) return 0.0;
  if (value > 1.0) return 1.0;
  return value;
}

SwapOutcome swap_identical(SchmidtCoefficient phi) {
  const double f = phi.value();
  const double success = 2.0 * f * (1.0 - f);
  const double residual_prob = f * f + (1.0 - f) * (1.0 - f);
  // residual_prob >= 0.5 for every valid phi, so the division is safe; the
  // smaller coefficient of the failure branch is phi^2 / (phi^2 + (1-phi)^2).
  const double residual = f * f / residual_prob;
  return SwapOutcome{success, SchmidtCoefficient(residual), residual_prob};
}

double distill_prob(SchmidtCoefficient phi) {
  return std::min(1.0, 2.0 * phi.value());
}

double scp_chain(std::uint32_t links, SchmidtCoefficient phi,
                 ChainConvention conv) {
  if (links < 1) throw std::domain_error("scp_chain: links must be >= 1");
  const double f = phi.value();
  const std::uint32_t limit = series_limit(links, conv);
  // K = 0 collapses the series to 1 - (1 - 2 phi), i.e. the single-pair
  // conversion probability; returning it directly keeps the identity exact.
  if (limit == 0) return 2.0 * f;
  const double head = 1.0 - 2.0 * f;
  if (head == 0.0) return 1.0;
  const double x = f * (1.0 - f);
  double term = 1.0;
  double sum = 1.0;
  for (std::uint32_t k = 0; k < limit; ++k) {
    term *= x * static_cast<double>(2 * k + 1) * static_cast<double>(2 * k + 2) /
            (static_cast<double>(k + 1) * static_cast<double>(k + 1));
    sum += term;
    if (term < kSeriesCutoff * sum) break;
  }
  return clamp_probability(1.0 - head * sum, "scp_chain");
}

double scp_bound(std::uint32_t links, SchmidtCoefficient phi) {
  if (links < 1) throw std::domain_error("scp_bound: links must be >= 1");
  const double base = 4.0 * phi.value() * (1.0 - phi.value());
  if (base == 0.0) return 0.0;
  return std::exp(0.5 * static_cast<double>(links) * std::log(base));
}

std::vector<double> chain_scp_table(std::uint32_t links_max,
                                    SchmidtCoefficient phi,
                                    ChainConvention conv) {
  if (links_max < 1) {
    throw std::domain_error("chain_scp_table: links_max must be >= 1");
  }
  const double f = phi.value();
  const double head = 1.0 - 2.0 * f;
  std::vector<double> out(links_max);
  if (head == 0.0) {
    for (auto& v : out) v = 1.0;
    return out;
  }
  const std::uint32_t k_max = series_limit(links_max, conv);
  std::vector<double> prefix(k_max + 1);
  prefix[0] = 1.0;
  const double x = f * (1.0 - f);
  double term = 1.0;
  double sum = 1.0;
  bool converged = false;
  for (std::uint32_t k = 0; k < k_max; ++k) {
    if (!converged) {
      term *= x * static_cast<double>(2 * k + 1) *
              static_cast<double>(2 * k + 2) /
              (static_cast<double>(k + 1) * static_cast<double>(k + 1));
      sum += term;
      converged = term < kSeriesCutoff * sum;
    }
    prefix[k + 1] = sum;
  }
  for (std::uint32_t l = 1; l <= links_max; ++l) {
    const std::uint32_t limit = series_limit(l, conv);
    out[l - 1] = limit == 0
                     ? 2.0 * f
                     : clamp_probability(1.0 - head * prefix[limit],
                                         "chain_scp_table");
  }
  return out;
}

}  // namespace qsw
