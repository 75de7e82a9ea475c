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

#ifndef QSWNET_SRC_SMALLWORLD_HPP_
#define QSWNET_SRC_SMALLWORLD_HPP_

#include <cstdint>
#include <vector>

namespace qsw {

// Ring of n nodes around one central hub; every ring node holds a shortcut
// to the hub independently with probability p. Ring links may be directed,
// hub shortcuts never are.
class NetworkParams {
 public:
  // Throws std::domain_error for n < 3 or p outside [0, 1].
  NetworkParams(std::uint32_t n, double p, bool directed);

  std::uint32_t n() const { return n_; }
  double p() const { return p_; }
  bool directed() const { return directed_; }

  /// Mean shortcut count m = n * p.
  double mean_shortcut_count() const { return static_cast<double>(n_) * p_; }

 private:
  std::uint32_t n_;
  double p_;
  bool directed_;
};

// Distribution of the actual distance l in {1..r} between two nodes whose
// ring-only (regular) distance is r. Hub transits cost two half-length
// shortcuts, so actual distances are always integers.
//
// probs[l-1] = P(l | r) after the tail repair. normalization_deficit keeps
// the diagnostic from before the repair: for the directed closed form it is
// the gap 1 - (interior + verbatim tail); for the undirected complement form
// it is the overshoot of the interior mass past 1 (zero in exact arithmetic,
// the interior series sums to 1 only at r = infinity).
struct PathLengthDistribution {
  std::uint32_t r = 0;
  std::vector<double> probs;
  double normalization_deficit = 0.0;

  double prob(std::uint32_t ell) const;  // 1-based actual distance
  double mean() const;
};

// Directed-ring closed form: P(l|r) = l p^2 (1-p)^(l-1) for l < r, with the
// tail repaired to the complement of the interior mass (the verbatim tail
// (1-p)^(r+1) does not normalize; its gap lands in normalization_deficit).
PathLengthDistribution path_dist_directed(std::uint32_t r, double p);

// Undirected closed form: P(1|r) = p^2,
// P(l|r) = p^2 (1-p)^(2l-4) (2-p) ((2-p) l - 2) for 1 < l < r, tail by
// complement. If roundoff pushes the interior past 1 the entries are
// renormalized, the tail clamps to 0, and the overshoot is recorded.
PathLengthDistribution path_dist_undirected(std::uint32_t r, double p);

/// Mean of the repaired actual-distance distribution.
double mean_actual_distance(std::uint32_t r, double p, bool directed);

// Network-wide mean actual distance: averages mean_actual_distance over the
// regular distances realized by node pairs, r in {1..n-1} for directed rings
// and {1..floor(n/2)} for undirected ones.
double mean_network_distance(const NetworkParams& params);

/// Clustering coefficient of the hub-ring model, p^2.
double clustering_coefficient(double p);

}  // namespace qsw

#endif  // QSWNET_SRC_SMALLWORLD_HPP_
