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

#include "scp_average.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "smallworld.hpp"

namespace qsw {

namespace {

void check_query_geometry(std::uint32_t r, std::uint32_t n, const char* what) {
  if (n < 3) throw std::domain_error(std::string(what) + ": n must be >= 3");
  if (r < 1 || r > n / 2) {
    throw std::domain_error(std::string(what) +
                            ": r must lie in [1, floor(n/2)]");
  }
}

void check_target(double target, const char* what) {
  if (!(target > 0.0 && target <= 1.0)) {
    throw std::domain_error(std::string(what) + ": target must be in (0, 1]");
  }
}

double hub_link_probability(double m, std::uint32_t n, const char* what) {
  if (!(m >= 0.0) || !std::isfinite(m)) {
    throw std::domain_error(std::string(what) +
                            ": mean shortcut count must be finite and >= 0");
  }
  return std::min(1.0, m / static_cast<double>(n));
}

template <typename T>
void check_axis(const std::vector<T>& axis, const char* what) {
  if (axis.empty()) {
    throw std::domain_error(std::string(what) + ": axis must be non-empty");
  }
  for (std::size_t i = 1; i < axis.size(); ++i) {
    if (axis[i] < axis[i - 1]) {
      throw std::domain_error(std::string(what) + ": axis must be sorted");
    }
  }
}

double dot_dist(const PathLengthDistribution& dist,
                const std::vector<double>& table, std::uint32_t r) {
  double acc = 0.0;
  for (std::uint32_t l = 1; l <= r; ++l) {
    acc += table[l - 1] * dist.probs[l - 1];
  }
  return std::clamp(acc, 0.0, 1.0);
}

}  // namespace

double avg_scp(const AvgScpQuery& query) {
  check_query_geometry(query.r, query.n, "avg_scp");
  const double p = hub_link_probability(query.m, query.n, "avg_scp");
  const auto dist = path_dist_undirected(query.r, p);
  const auto table = chain_scp_table(query.r, query.phi, query.conv);
  return dot_dist(dist, table, query.r);
}

ScpGrid scp_heatmap(std::uint32_t r, std::uint32_t n,
                    const std::vector<double>& phi_samples,
                    const std::vector<double>& m_samples,
                    ChainConvention conv) {
  check_query_geometry(r, n, "scp_heatmap");
  check_axis(phi_samples, "scp_heatmap phi");
  check_axis(m_samples, "scp_heatmap m");
  // The distribution only depends on m, the chain table only on phi, so each
  // is computed once per axis entry.
  std::vector<PathLengthDistribution> dists;
  dists.reserve(m_samples.size());
  for (double m : m_samples) {
    dists.push_back(
        path_dist_undirected(r, hub_link_probability(m, n, "scp_heatmap")));
  }
  ScpGrid grid;
  grid.phi_axis = phi_samples;
  grid.m_axis = m_samples;
  grid.r = r;
  grid.n = n;
  grid.conv = conv;
  grid.values.assign(phi_samples.size() * m_samples.size(), 0.0);
  for (std::size_t ix = 0; ix < phi_samples.size(); ++ix) {
    const auto table = chain_scp_table(r, SchmidtCoefficient(phi_samples[ix]), conv);
    for (std::size_t iy = 0; iy < m_samples.size(); ++iy) {
      grid.values[iy * phi_samples.size() + ix] = dot_dist(dists[iy], table, r);
    }
  }
  return grid;
}

std::optional<double> threshold_shortcuts(std::uint32_t r,
                                          SchmidtCoefficient phi,
                                          std::uint32_t n, double target,
                                          double m_max, double m_step,
                                          ChainConvention conv) {
  check_query_geometry(r, n, "threshold_shortcuts");
  check_target(target, "threshold_shortcuts");
  if (!(m_max >= 0.0) || !(m_step > 0.0) || !std::isfinite(m_max) ||
      !std::isfinite(m_step)) {
    throw std::domain_error("threshold_shortcuts: need m_max >= 0, m_step > 0");
  }
  const auto table = chain_scp_table(r, phi, conv);
  for (std::uint64_t i = 0;; ++i) {
    const double m = static_cast<double>(i) * m_step;
    if (m > m_max) break;
    const auto dist = path_dist_undirected(
        r, hub_link_probability(m, n, "threshold_shortcuts"));
    if (dot_dist(dist, table, r) >= target) return m;
  }
  return std::nullopt;
}

std::uint32_t threshold_distance(SchmidtCoefficient phi, double target,
                                 std::uint32_t n, ChainConvention conv) {
  if (n < 3) throw std::domain_error("threshold_distance: n must be >= 3");
  check_target(target, "threshold_distance");
  const std::uint32_t r_max = n / 2;
  if (scp_chain(1, phi, conv) < target) return 0;
  if (scp_chain(r_max, phi, conv) >= target) return r_max;
  std::uint32_t lo = 1;  // scp_chain(lo) >= target throughout
  std::uint32_t hi = r_max;
  while (hi - lo > 1) {
    const std::uint32_t mid = lo + (hi - lo) / 2;
    (scp_chain(mid, phi, conv) >= target ? lo : hi) = mid;
  }
  return lo;
}

ThresholdRegion threshold_region(SchmidtCoefficient phi, double target,
                                 std::uint32_t n,
                                 const std::vector<std::uint32_t>& r_samples,
                                 const std::vector<double>& m_samples,
                                 ChainConvention conv) {
  check_target(target, "threshold_region");
  check_axis(r_samples, "threshold_region r");
  check_axis(m_samples, "threshold_region m");
  for (std::uint32_t r : r_samples) check_query_geometry(r, n, "threshold_region");
  ThresholdRegion region;
  region.r_axis = r_samples;
  region.m_axis = m_samples;
  region.phi = phi.value();
  region.target = target;
  region.n = n;
  region.conv = conv;
  region.reached.assign(r_samples.size() * m_samples.size(), 0);
  const auto table = chain_scp_table(r_samples.back(), phi, conv);
  for (std::size_t ix = 0; ix < r_samples.size(); ++ix) {
    const std::uint32_t r = r_samples[ix];
    for (std::size_t iy = 0; iy < m_samples.size(); ++iy) {
      const auto dist = path_dist_undirected(
          r, hub_link_probability(m_samples[iy], n, "threshold_region"));
      region.reached[iy * r_samples.size() + ix] =
          dot_dist(dist, table, r) >= target ? 1 : 0;
    }
  }
  return region;
}

}  // namespace qsw
