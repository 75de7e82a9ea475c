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

#ifndef QSWNET_SRC_MONTE_CARLO_HPP_
#define QSWNET_SRC_MONTE_CARLO_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "entanglement.hpp"
#include "smallworld.hpp"

namespace qsw {

// Sampled network instance. Ring adjacency is implicit; hub_links[i] says
// whether node i holds a shortcut to the central node. In doubled-integer
// weights a ring edge costs 2 and a shortcut costs 1; a hub transit always
// uses exactly two shortcuts, so node-to-node distances are even and halve
// to integers.
struct HubRingGraph {
  std::uint32_t n = 0;
  bool directed = false;
  std::vector<std::uint8_t> hub_links;

  static constexpr int kRingEdgeWeight = 2;
  static constexpr int kHubEdgeWeight = 1;

  std::uint32_t hub_link_count() const;
};

// A reproducible experiment: identical SeededRun inputs give bit-identical
// outputs. Trial i draws its stream from derive_stream_seed(seed, i), so the
// aggregate does not depend on evaluation order.
struct SeededRun {
  NetworkParams params;
  std::uint64_t trials;
  std::uint64_t seed;
};

struct EmpiricalDistribution {
  std::vector<std::uint64_t> counts;  // counts[l-1] for actual distance l
  std::uint64_t trials = 0;

  double frequency(std::uint32_t ell) const;
  /// Half the L1 distance between the frequencies and `probs` (same length).
  double total_variation(std::span<const double> probs) const;
};

// Bell measurement merging a held pair with smaller coefficient `lambda` and
// a fresh pair with smaller coefficient `phi`. The four outcomes group into
// two classes with equal residual states: the |00>/|11> outcomes and the
// |01>/|10> outcomes. For lambda == phi the cross class is the maximal
// "success" branch of swap_identical.
struct SwapBranches {
  double prob_same;
  double coeff_same;
  double prob_cross;
  double coeff_cross;
};
SwapBranches swap_general(double lambda, double phi);

/// Ring edges deterministic, hub links i.i.d. Bernoulli(p) from the seed.
HubRingGraph sample_graph(const NetworkParams& params, std::uint64_t seed);

// Exact actual distance between distinct nodes, in time linear in their ring
// distance: the best single hub transit (nearest shortcut on each side, plus
// the two half-length hops) against the ring-only path. Equals Dijkstra on
// the doubled-weight graph; a directed ring is still a cycle, so every pair
// stays reachable.
std::uint32_t shortest_path_len(const HubRingGraph& g, std::uint32_t a,
                                std::uint32_t b);

// Histogram of shortest_path_len over independently sampled graphs for a
// fixed node pair at regular distance r.
EmpiricalDistribution empirical_path_dist(const SeededRun& run,
                                          std::uint32_t r);

struct ChainScpEstimate {
  double estimate;
  double std_error;  // binomial standard error
  std::uint64_t successes;
  std::uint64_t trials;
};

// Samples the sequential protocol: swap the held pair with a fresh phi-pair
// at each repeater, then distill once at the end with probability
// min(1, 2 lambda).
ChainScpEstimate simulate_chain_scp(std::uint32_t links,
                                    SchmidtCoefficient phi,
                                    std::uint64_t trials, std::uint64_t seed);

// Exact expectation of the same protocol via full enumeration of the
// 2^(links-1) branch outcomes. links <= 24 (throws std::length_error above).
double exact_chain_scp(std::uint32_t links, SchmidtCoefficient phi);

// Fraction of node samples whose two ring neighbors are both hub-linked
// (the event connecting them through the center). One fresh graph and one
// uniform node per trial, so the estimator is exactly binomial.
double empirical_clustering(const SeededRun& run);

/// Mean shortest path over uniformly random ordered node pairs.
double empirical_mean_distance(const SeededRun& run);

}  // namespace qsw

#endif  // QSWNET_SRC_MONTE_CARLO_HPP_
