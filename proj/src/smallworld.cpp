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

#include "smallworld.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qsw {

namespace {

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error(std::string(what) + ": probability outside [0,1]: " +
                            std::to_string(p));
  }
}

void check_distance(std::uint32_t r, const char* what) {
  if (r < 1) {
    throw std::domain_error(std::string(what) + ": regular distance must be >= 1");
  }
}

}  // namespace

NetworkParams::NetworkParams(std::uint32_t n, double p, bool directed)
    : n_(n), p_(p), directed_(directed) {
  if (n < 3) throw std::domain_error("NetworkParams: ring size must be >= 3");
  check_probability(p, "NetworkParams");
}

double PathLengthDistribution::prob(std::uint32_t ell) const {
  if (ell < 1 || ell > r) {
    throw std::domain_error("PathLengthDistribution: distance outside support");
  }
  return probs[ell - 1];
}

double PathLengthDistribution::mean() const {
  double acc = 0.0;
  for (std::uint32_t l = 1; l <= r; ++l) {
    acc += static_cast<double>(l) * probs[l - 1];
  }
  return acc;
}

PathLengthDistribution path_dist_directed(std::uint32_t r, double p) {
  check_distance(r, "path_dist_directed");
  check_probability(p, "path_dist_directed");
  PathLengthDistribution d;
  d.r = r;
  d.probs.assign(r, 0.0);
  if (r == 1) {
    // The direct ring link always exists.
    d.probs[0] = 1.0;
    return d;
  }
  const double q = 1.0 - p;
  double qpow = 1.0;  // q^(l-1), with 0^0 := 1 so p = 1 works
  double interior = 0.0;
  for (std::uint32_t l = 1; l < r; ++l) {
    d.probs[l - 1] = static_cast<double>(l) * p * p * qpow;
    interior += d.probs[l - 1];
    qpow *= q;
  }
  const double verbatim_tail = std::pow(q, static_cast<double>(r) + 1.0);
  d.normalization_deficit = 1.0 - (interior + verbatim_tail);
  d.probs[r - 1] = std::max(0.0, 1.0 - interior);
  return d;
}

PathLengthDistribution path_dist_undirected(std::uint32_t r, double p) {
  check_distance(r, "path_dist_undirected");
  check_probability(p, "path_dist_undirected");
  PathLengthDistribution d;
  d.r = r;
  d.probs.assign(r, 0.0);
  if (r == 1) {
    d.probs[0] = 1.0;
    return d;
  }
  d.probs[0] = p * p;
  const double q2 = (1.0 - p) * (1.0 - p);
  const double a = 2.0 - p;
  double qpow = 1.0;  // (1-p)^(2l-4), again 0^0 := 1
  double interior = d.probs[0];
  for (std::uint32_t l = 2; l < r; ++l) {
    d.probs[l - 1] = p * p * qpow * a * (a * static_cast<double>(l) - 2.0);
    interior += d.probs[l - 1];
    qpow *= q2;
  }
  if (interior > 1.0) {
    d.normalization_deficit = interior - 1.0;
    for (std::uint32_t l = 1; l < r; ++l) d.probs[l - 1] /= interior;
    d.probs[r - 1] = 0.0;
  } else {
    d.probs[r - 1] = 1.0 - interior;
  }
  return d;
}

double mean_actual_distance(std::uint32_t r, double p, bool directed) {
  return (directed ? path_dist_directed(r, p) : path_dist_undirected(r, p))
      .mean();
}

double mean_network_distance(const NetworkParams& params) {
  const std::uint32_t r_max =
      params.directed() ? params.n() - 1 : params.n() / 2;
  double acc = 0.0;
  for (std::uint32_t r = 1; r <= r_max; ++r) {
    acc += mean_actual_distance(r, params.p(), params.directed());
  }
  return acc / static_cast<double>(r_max);
}

double clustering_coefficient(double p) {
  check_probability(p, "clustering_coefficient");
  return p * p;
}

}  // namespace qsw
