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

// Test-only reference computations, kept independent of the library code
// paths they validate.

#ifndef QSWNET_TESTS_ORACLES_HPP_
#define QSWNET_TESTS_ORACLES_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "monte_carlo.hpp"

namespace qsw_test {

struct BellOutcome {
  double prob;           // measurement probability of this Bell outcome
  double smaller_coeff;  // smaller squared Schmidt coefficient of the result
};

// Explicit four-qubit computation of one entanglement swap: builds the
// product state (sqrt(lambda)|00> + sqrt(1-lambda)|11>) (x)
// (sqrt(phi)|00> + sqrt(1-phi)|11>), projects the middle qubits onto the four
// Bell states, and reads the resulting AB state's Schmidt data from the
// singular values of its 2x2 amplitude matrix.
// Outcome order: Phi+, Phi-, Psi+, Psi-.
inline std::array<BellOutcome, 4> bell_swap_oracle(double lambda, double phi) {
  const double amp_a[2] = {std::sqrt(lambda), std::sqrt(1.0 - lambda)};
  const double amp_b[2] = {std::sqrt(phi), std::sqrt(1.0 - phi)};
  // psi[i][r1][r2][j], qubit order A R1 R2 B
  double psi[2][2][2][2] = {};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      psi[i][i][j][j] = amp_a[i] * amp_b[j];
    }
  }
  const double s = 1.0 / std::sqrt(2.0);
  // bell[k][r1][r2]
  const double bell[4][2][2] = {
      {{s, 0.0}, {0.0, s}},    // Phi+
      {{s, 0.0}, {0.0, -s}},   // Phi-
      {{0.0, s}, {s, 0.0}},    // Psi+
      {{0.0, s}, {-s, 0.0}},   // Psi-
  };
  std::array<BellOutcome, 4> out{};
  for (int k = 0; k < 4; ++k) {
    double m[2][2] = {};  // unnormalized AB amplitudes
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int r1 = 0; r1 < 2; ++r1) {
          for (int r2 = 0; r2 < 2; ++r2) {
            m[i][j] += bell[k][r1][r2] * psi[i][r1][r2][j];
          }
        }
      }
    }
    const double frob = m[0][0] * m[0][0] + m[0][1] * m[0][1] +
                        m[1][0] * m[1][0] + m[1][1] * m[1][1];
    out[k].prob = frob;
    if (frob > 0.0) {
      const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
      const double disc =
          std::sqrt(std::max(0.0, frob * frob - 4.0 * det * det));
      out[k].smaller_coeff = 0.5 * (frob - disc) / frob;
    } else {
      out[k].smaller_coeff = 0.0;
    }
  }
  return out;
}

// Plain Dijkstra over the doubled-weight graph (ring edge 2, hub shortcut 1,
// hub = node n). Returns the doubled distance from a to b.
inline std::uint32_t dijkstra_doubled(const qsw::HubRingGraph& g,
                                      std::uint32_t a, std::uint32_t b) {
  const std::uint32_t n = g.n;
  const std::uint32_t hub = n;
  constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj(n + 1);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t next = (i + 1) % n;
    adj[i].push_back({next, 2});
    if (!g.directed) adj[next].push_back({i, 2});
    if (g.hub_links[i]) {
      adj[i].push_back({hub, 1});
      adj[hub].push_back({i, 1});
    }
  }
  std::vector<std::uint32_t> dist(n + 1, kInf);
  using Item = std::pair<std::uint32_t, std::uint32_t>;  // (dist, node)
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  dist[a] = 0;
  heap.push({0, a});
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d != dist[u]) continue;
    if (u == b) break;
    for (const auto& [v, w] : adj[u]) {
      if (d + w < dist[v]) {
        dist[v] = d + w;
        heap.push({dist[v], v});
      }
    }
  }
  return dist[b];
}

}  // namespace qsw_test

#endif  // QSWNET_TESTS_ORACLES_HPP_
