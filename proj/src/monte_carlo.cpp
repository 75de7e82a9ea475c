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

#include "monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rng.hpp"

namespace qsw {

namespace {

constexpr std::uint32_t kExactChainCap = 24;

void sample_hub_links(SplitMix64& rng, double p,
                      std::vector<std::uint8_t>& out) {
  for (auto& b : out) b = rng.next_bernoulli(p) ? 1 : 0;
}

// Ring steps from x to the nearest hub-linked node, looking both ways
// (undirected) or the given way only. Returns `cap` when nothing closer
// exists; a transit through such a node could never beat the ring path.
std::uint32_t nearest_hub_both_ways(const HubRingGraph& g, std::uint32_t x,
                                    std::uint32_t cap) {
  for (std::uint32_t k = 0; k < cap; ++k) {
    if (g.hub_links[(x + k) % g.n] || g.hub_links[(x + g.n - k) % g.n]) {
      return k;
    }
  }
  return cap;
}

std::uint32_t nearest_hub_forward(const HubRingGraph& g, std::uint32_t x,
                                  std::uint32_t cap) {
  for (std::uint32_t k = 0; k < cap; ++k) {
    if (g.hub_links[(x + k) % g.n]) return k;
  }
  return cap;
}

std::uint32_t nearest_hub_backward(const HubRingGraph& g, std::uint32_t x,
                                   std::uint32_t cap) {
  for (std::uint32_t k = 0; k < cap; ++k) {
    if (g.hub_links[(x + g.n - k) % g.n]) return k;
  }
  return cap;
}

void check_trials(std::uint64_t trials, const char* what) {
  if (trials < 1) {
    throw std::domain_error(std::string(what) + ": trials must be >= 1");
  }
}

}  // namespace

std::uint32_t HubRingGraph::hub_link_count() const {
  return static_cast<std::uint32_t>(
      std::accumulate(hub_links.begin(), hub_links.end(), std::uint32_t{0}));
}

double EmpiricalDistribution::frequency(std::uint32_t ell) const {
  if (ell < 1 || ell > counts.size()) {
    throw std::domain_error("EmpiricalDistribution: distance outside support");
  }
  return static_cast<double>(counts[ell - 1]) / static_cast<double>(trials);
}

double EmpiricalDistribution::total_variation(
    std::span<const double> probs) const {
  if (probs.size() != counts.size()) {
    throw std::domain_error("total_variation: length mismatch");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    acc += std::abs(probs[i] - static_cast<double>(counts[i]) /
                                   static_cast<double>(trials));
  }
  return 0.5 * acc;
}

SwapBranches swap_general(double lambda, double phi) {
  if (!(lambda >= 0.0 && lambda <= 0.5) || !(phi >= 0.0 && phi <= 0.5)) {
    throw std::domain_error("swap_general: coefficients must lie in [0, 0.5]");
  }
  SwapBranches br;
  br.prob_same = lambda * phi + (1.0 - lambda) * (1.0 - phi);
  br.prob_cross = 1.0 - br.prob_same;
  // prob_same >= (1-lambda)(1-phi) >= 1/4, so only the cross class can
  // degenerate (e.g. phi = 0). The ratios are <= 1/2 mathematically; the
  // clamp absorbs the one-ulp overshoot the division can produce, which
  // matters because these values feed back in as the next lambda.
  br.coeff_same = std::min(
      0.5, std::min(lambda * phi, (1.0 - lambda) * (1.0 - phi)) / br.prob_same);
  br.coeff_cross =
      br.prob_cross > 0.0
          ? std::min(0.5, std::min(lambda * (1.0 - phi), (1.0 - lambda) * phi) /
                              br.prob_cross)
          : 0.0;
  return br;
}

HubRingGraph sample_graph(const NetworkParams& params, std::uint64_t seed) {
  HubRingGraph g;
  g.n = params.n();
  g.directed = params.directed();
  g.hub_links.resize(g.n);
  SplitMix64 rng(seed);
  sample_hub_links(rng, params.p(), g.hub_links);
  return g;
}

std::uint32_t shortest_path_len(const HubRingGraph& g, std::uint32_t a,
                                std::uint32_t b) {
  if (g.n < 3 || a >= g.n || b >= g.n) {
    throw std::domain_error("shortest_path_len: node index outside graph");
  }
  if (a == b) {
    throw std::domain_error("shortest_path_len: endpoints must differ");
  }
  std::uint32_t ring;
  std::uint32_t na;
  std::uint32_t nb;
  if (g.directed) {
    ring = (b + g.n - a) % g.n;
    na = nearest_hub_forward(g, a, ring);
    nb = nearest_hub_backward(g, b, ring);
  } else {
    const std::uint32_t d = (b + g.n - a) % g.n;
    ring = std::min(d, g.n - d);
    na = nearest_hub_both_ways(g, a, ring);
    nb = nearest_hub_both_ways(g, b, ring);
  }
  const std::uint64_t via_hub =
      static_cast<std::uint64_t>(na) + static_cast<std::uint64_t>(nb) + 1;
  return via_hub < ring ? static_cast<std::uint32_t>(via_hub) : ring;
}

EmpiricalDistribution empirical_path_dist(const SeededRun& run,
                                          std::uint32_t r) {
  check_trials(run.trials, "empirical_path_dist");
  const NetworkParams& prm = run.params;
  const std::uint32_t r_max = prm.directed() ? prm.n() - 1 : prm.n() / 2;
  if (r < 1 || r > r_max) {
    throw std::domain_error("empirical_path_dist: r outside topology range");
  }
  HubRingGraph g;
  g.n = prm.n();
  g.directed = prm.directed();
  g.hub_links.resize(g.n);
  EmpiricalDistribution emp;
  emp.counts.assign(r, 0);
  emp.trials = run.trials;
  for (std::uint64_t t = 0; t < run.trials; ++t) {
    SplitMix64 rng(derive_stream_seed(run.seed, t));
    sample_hub_links(rng, prm.p(), g.hub_links);
    const std::uint32_t l = shortest_path_len(g, 0, r);
    ++emp.counts[l - 1];
  }
  return emp;
}

ChainScpEstimate simulate_chain_scp(std::uint32_t links,
                                    SchmidtCoefficient phi,
                                    std::uint64_t trials, std::uint64_t seed) {
  if (links < 1) throw std::domain_error("simulate_chain_scp: links >= 1");
  check_trials(trials, "simulate_chain_scp");
  const double f = phi.value();
  std::uint64_t successes = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    SplitMix64 rng(derive_stream_seed(seed, t));
    double lambda = f;
    for (std::uint32_t j = 1; j < links; ++j) {
      const SwapBranches br = swap_general(lambda, f);
      lambda = rng.next_unit() < br.prob_same ? br.coeff_same : br.coeff_cross;
    }
    if (rng.next_unit() < std::min(1.0, 2.0 * lambda)) ++successes;
  }
  const double estimate =
      static_cast<double>(successes) / static_cast<double>(trials);
  const double std_error =
      std::sqrt(estimate * (1.0 - estimate) / static_cast<double>(trials));
  return ChainScpEstimate{estimate, std_error, successes, trials};
}

namespace {

double chain_expectation(double lambda, double phi, std::uint32_t swaps_left) {
  if (swaps_left == 0) return std::min(1.0, 2.0 * lambda);
  const SwapBranches br = swap_general(lambda, phi);
  double v = 0.0;
  if (br.prob_same > 0.0) {
    v += br.prob_same * chain_expectation(br.coeff_same, phi, swaps_left - 1);
  }
  if (br.prob_cross > 0.0) {
    v += br.prob_cross * chain_expectation(br.coeff_cross, phi, swaps_left - 1);
  }
  return v;
}

}  // namespace

double exact_chain_scp(std::uint32_t links, SchmidtCoefficient phi) {
  if (links < 1) throw std::domain_error("exact_chain_scp: links >= 1");
  if (links > kExactChainCap) {
    throw std::length_error("exact_chain_scp: links cap is 24");
  }
  return chain_expectation(phi.value(), phi.value(), links - 1);
}

double empirical_clustering(const SeededRun& run) {
  check_trials(run.trials, "empirical_clustering");
  const NetworkParams& prm = run.params;
  HubRingGraph g;
  g.n = prm.n();
  g.hub_links.resize(g.n);
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < run.trials; ++t) {
    SplitMix64 rng(derive_stream_seed(run.seed, t));
    sample_hub_links(rng, prm.p(), g.hub_links);
    const std::uint32_t u = rng.next_below(g.n);
    if (g.hub_links[(u + 1) % g.n] && g.hub_links[(u + g.n - 1) % g.n]) {
      ++hits;
    }
  }
  return static_cast<double>(hits) / static_cast<double>(run.trials);
}

double empirical_mean_distance(const SeededRun& run) {
  check_trials(run.trials, "empirical_mean_distance");
  const NetworkParams& prm = run.params;
  HubRingGraph g;
  g.n = prm.n();
  g.directed = prm.directed();
  g.hub_links.resize(g.n);
  double total = 0.0;
  for (std::uint64_t t = 0; t < run.trials; ++t) {
    SplitMix64 rng(derive_stream_seed(run.seed, t));
    sample_hub_links(rng, prm.p(), g.hub_links);
    const std::uint32_t a = rng.next_below(g.n);
    const std::uint32_t b = (a + 1 + rng.next_below(g.n - 1)) % g.n;
    total += static_cast<double>(shortest_path_len(g, a, b));
  }
  return total / static_cast<double>(run.trials);
}

}  // namespace qsw
