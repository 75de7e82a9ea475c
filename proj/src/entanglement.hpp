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

#ifndef QSWNET_SRC_ENTANGLEMENT_HPP_
#define QSWNET_SRC_ENTANGLEMENT_HPP_

#include <cstdint>
#include <vector>

namespace qsw {

// Smaller squared Schmidt coefficient of the two-qubit pure state
// sqrt(phi)|00> + sqrt(1-phi)|11>. 0.5 is a maximally entangled pair, 0 a
// product state.
class SchmidtCoefficient {
 public:
  // Throws std::domain_error outside [0, 0.5] (NaN included).
  explicit SchmidtCoefficient(double value);

  double value() const { return value_; }

 private:
  double value_;
};

// Series indexing for the chain singlet conversion probability. The two
// variants disagree on whether the truncation limit counts links or
// repeaters; only the calibrated one reduces to 2*phi for a 2-link chain.
enum class ChainConvention {
  kVerbatim,    // limit floor(links/2), the series as commonly written
  kCalibrated,  // limit floor((links-1)/2); matches the swap protocol
};

// Result of a Bell measurement merging two pairs that share the same
// coefficient phi: with success_prob the long pair comes out maximally
// entangled, otherwise it carries residual_coeff.
struct SwapOutcome {
  double success_prob;
  SchmidtCoefficient residual_coeff;
  double residual_prob;
};

SwapOutcome swap_identical(SchmidtCoefficient phi);

/// Procrustean conversion probability of a single pair: min(1, 2*phi).
double distill_prob(SchmidtCoefficient phi);

// Singlet conversion probability across a chain of `links` identical pairs,
//   1 - (1 - 2 phi) * sum_{k=0}^{K} (phi (1-phi))^k C(2k, k),
// with K picked by the convention. Central binomial terms are accumulated
// with the ratio recurrence so nothing overflows; the series truncates once a
// term drops below 1e-18 of the partial sum.
double scp_chain(std::uint32_t links, SchmidtCoefficient phi,
                 ChainConvention conv);

/// Exponential upper envelope (4 phi (1-phi))^(links/2), evaluated in log
/// space so large chains do not underflow prematurely.
double scp_bound(std::uint32_t links, SchmidtCoefficient phi);

// scp_chain for every length in [1, links_max] from one series pass. Entry
// [l-1] is bit-identical to scp_chain(l, phi, conv).
std::vector<double> chain_scp_table(std::uint32_t links_max,
                                    SchmidtCoefficient phi,
                                    ChainConvention conv);

// Clamps a computed probability to [0, 1]. Deviations beyond 1e-9 mean a
// formula went wrong rather than floating noise and raise std::logic_error.
double clamp_probability(double value, const char* what);

}  // namespace qsw

#endif  // QSWNET_SRC_ENTANGLEMENT_HPP_
