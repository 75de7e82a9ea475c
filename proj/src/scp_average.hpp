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

#ifndef QSWNET_SRC_SCP_AVERAGE_HPP_
#define QSWNET_SRC_SCP_AVERAGE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "entanglement.hpp"

namespace qsw {

// Shortcut-averaged SCP between two nodes at regular distance r on an
// undirected hub ring of n nodes with mean shortcut count m (p = m/n,
// clamped to [0, 1]).
struct AvgScpQuery {
  std::uint32_t r;
  SchmidtCoefficient phi;
  double m;
  std::uint32_t n;
  ChainConvention conv;
};

// sum over l of scp_chain(l, phi, conv) * P(l | r) for the repaired
// undirected distribution. Requires r <= floor(n/2).
double avg_scp(const AvgScpQuery& query);

// Dense field of avg_scp values over a (phi, m) grid at fixed r, ready for
// plotting. Rows follow m_axis, columns follow phi_axis.
struct ScpGrid {
  std::vector<double> phi_axis;
  std::vector<double> m_axis;
  std::vector<double> values;  // values[iy * phi_axis.size() + ix]
  std::uint32_t r = 0;
  std::uint32_t n = 0;
  ChainConvention conv = ChainConvention::kVerbatim;

  double value(std::size_t iy, std::size_t ix) const {
    return values[iy * phi_axis.size() + ix];
  }
};

// Axes must be non-empty and ascending. Output order matches the axes and is
// identical to a cell-by-cell sequential fill.
ScpGrid scp_heatmap(std::uint32_t r, std::uint32_t n,
                    const std::vector<double>& phi_samples,
                    const std::vector<double>& m_samples,
                    ChainConvention conv);

// Smallest m on the scan grid {0, m_step, 2 m_step, ...} <= m_max with
// avg_scp >= target, or nullopt when the target is never reached. A linear
// scan by design: the repaired distributions carry no monotonicity proof
// in m.
std::optional<double> threshold_shortcuts(std::uint32_t r,
                                          SchmidtCoefficient phi,
                                          std::uint32_t n, double target,
                                          double m_max, double m_step,
                                          ChainConvention conv);

// Largest regular distance r <= floor(n/2) whose shortcut-free chain SCP
// still reaches the target; 0 when even r = 1 falls short. Binary search is
// sound here because scp_chain is non-increasing in r.
std::uint32_t threshold_distance(SchmidtCoefficient phi, double target,
                                 std::uint32_t n, ChainConvention conv);

// Boolean field over (r, m): cell true iff avg_scp(r, phi, m) >= target.
// Columns follow r_axis, rows follow m_axis.
struct ThresholdRegion {
  std::vector<std::uint32_t> r_axis;
  std::vector<double> m_axis;
  std::vector<std::uint8_t> reached;  // reached[iy * r_axis.size() + ix]
  double phi = 0.0;
  double target = 0.0;
  std::uint32_t n = 0;
  ChainConvention conv = ChainConvention::kVerbatim;

  bool cell(std::size_t iy, std::size_t ix) const {
    return reached[iy * r_axis.size() + ix] != 0;
  }
};

ThresholdRegion threshold_region(SchmidtCoefficient phi, double target,
                                 std::uint32_t n,
                                 const std::vector<std::uint32_t>& r_samples,
                                 const std::vector<double>& m_samples,
                                 ChainConvention conv);

}  // namespace qsw

#endif  // QSWNET_SRC_SCP_AVERAGE_HPP_
