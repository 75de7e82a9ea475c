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

#include "qsw/qsw.h"

#include <limits>
#include <memory>
#include <stdexcept>
#include <vector>

#include "entanglement.hpp"
#include "monte_carlo.hpp"
#include "scp_average.hpp"
#include "smallworld.hpp"

struct qsw_grid {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> values;  // row-major, values[iy * x.size() + ix]
};

struct qsw_graph {
  qsw::HubRingGraph impl;
};

namespace {

template <typename Fn>
qsw_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return QSW_OK;
  } catch (const std::domain_error&) {
    return QSW_ERROR_DOMAIN;
  } catch (const std::invalid_argument&) {
    return QSW_ERROR_DOMAIN;
  } catch (const std::length_error&) {
    return QSW_ERROR_LIMIT;
  } catch (...) {
    return QSW_ERROR_INTERNAL;
  }
}

qsw::ChainConvention to_convention(qsw_convention conv) {
  switch (conv) {
    case QSW_CONVENTION_VERBATIM:
      return qsw::ChainConvention::kVerbatim;
    case QSW_CONVENTION_CALIBRATED:
      return qsw::ChainConvention::kCalibrated;
  }
  throw std::domain_error("unknown chain convention");
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

extern "C" {

const char* qsw_version(void) { return QSW_VERSION_STRING; }

const char* qsw_status_name(qsw_status status) {
  switch (status) {
    case QSW_OK:
      return "ok";
    case QSW_ERROR_DOMAIN:
      return "domain error";
    case QSW_ERROR_LIMIT:
      return "size limit exceeded";
    case QSW_ERROR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

qsw_status qsw_swap_identical(double phi, double* success_prob,
                              double* residual_coeff, double* residual_prob) {
  if (!success_prob || !residual_coeff || !residual_prob) {
    return QSW_ERROR_DOMAIN;
  }
  return guarded([&] {
    const qsw::SwapOutcome out =
        qsw::swap_identical(qsw::SchmidtCoefficient(phi));
    *success_prob = out.success_prob;
    *residual_coeff = out.residual_coeff.value();
    *residual_prob = out.residual_prob;
  });
}

qsw_status qsw_distill_prob(double phi, double* prob) {
  if (!prob) return QSW_ERROR_DOMAIN;
  return guarded(
      [&] { *prob = qsw::distill_prob(qsw::SchmidtCoefficient(phi)); });
}

qsw_status qsw_scp_chain(uint32_t links, double phi, qsw_convention conv,
                         double* scp) {
  if (!scp) return QSW_ERROR_DOMAIN;
  return guarded([&] {
    *scp = qsw::scp_chain(links, qsw::SchmidtCoefficient(phi),
                          to_convention(conv));
  });
}

qsw_status qsw_scp_bound(uint32_t links, double phi, double* bound) {
  if (!bound) return QSW_ERROR_DOMAIN;
  return guarded([&] {
    *bound = qsw::scp_bound(links, qsw::SchmidtCoefficient(phi));
  });
}

qsw_status qsw_path_dist(uint32_t r, double p, int directed, double* probs,
                         double* normalization_deficit) {
  if (!probs) return QSW_ERROR_DOMAIN;
  return guarded([&] {
    const qsw::PathLengthDistribution dist =
        directed ? qsw::path_dist_directed(r, p)
                 : qsw::path_dist_undirected(r, p);
    for (uint32_t i = 0; i < r; ++i) probs[i] = dist.probs[i];
    if (normalization_deficit) {
      *normalization_deficit = dist.normalization_deficit;
    }
  });
}

qsw_status qsw_mean_actual_distance(uint32_t r, double p, int directed,
                                    double* mean) {
  if (!mean) return QSW_ERROR_DOMAIN;
  return guarded(
      [&] { *mean = qsw::mean_actual_distance(r, p, directed != 0); });
}

qsw_status qsw_mean_network_distance(uint32_t n, double p, int directed,
                                     double* mean) {
  if (!mean) return QSW_ERROR_DOMAIN;
  return guarded([&] {
    *mean =
        qsw::mean_network_distance(qsw::NetworkParams(n, p, directed != 0));
  });
}

qsw_status qsw_clustering_coefficient(double p, double* coefficient) {
  if (!coefficient) return QSW_ERROR_DOMAIN;
  return guarded([&] { *coefficient = qsw::clustering_coefficient(p); });
}

qsw_status qsw_avg_scp(uint32_t r, double phi, double m, uint32_t n,
                       qsw_convention conv, double* scp) {
  if (!scp) return QSW_ERROR_DOMAIN;
  return guarded([&] {
    *scp = qsw::avg_scp(qsw::AvgScpQuery{r, qsw::SchmidtCoefficient(phi), m, n,
                                         to_convention(conv)});
  });
}

qsw_status qsw_threshold_shortcuts(uint32_t r, double phi, uint32_t n,
                                   double target, double m_max, double m_step,
                                   qsw_convention conv, int* found,
                                   double* m_threshold) {
  if (!found || !m_threshold) return QSW_ERROR_DOMAIN;
  return guarded([&] {
    const auto m = qsw::threshold_shortcuts(r, qsw::SchmidtCoefficient(phi), n,
                                            target, m_max, m_step,
                                            to_convention(conv));
    *found = m.has_value() ? 1 : 0;
    if (m.has_value()) *m_threshold = *m;
  });
}

qsw_status qsw_threshold_distance(double phi, double target, uint32_t n,
                                  qsw_convention conv, uint32_t* r_threshold) {
  if (!r_threshold) return QSW_ERROR_DOMAIN;
  return guarded([&] {
    *r_threshold = qsw::threshold_distance(qsw::SchmidtCoefficient(phi),
                                           target, n, to_convention(conv));
  });
}

qsw_status qsw_scp_heatmap(uint32_t r, uint32_t n, const double* phi_samples,
                           size_t phi_count, const double* m_samples,
                           size_t m_count, qsw_convention conv,
                           qsw_grid** grid) {
  if (!grid || !phi_samples || !m_samples) return QSW_ERROR_DOMAIN;
  return guarded([&] {
    qsw::ScpGrid computed = qsw::scp_heatmap(
        r, n, std::vector<double>(phi_samples, phi_samples + phi_count),
        std::vector<double>(m_samples, m_samples + m_count),
        to_convention(conv));
    auto out = std::make_unique<qsw_grid>();
    out->x = std::move(computed.phi_axis);
    out->y = std::move(computed.m_axis);
    out->values = std::move(computed.values);
    *grid = out.release();
  });
}

qsw_status qsw_threshold_region(double phi, double target, uint32_t n,
                                const uint32_t* r_samples, size_t r_count,
                                const double* m_samples, size_t m_count,
                                qsw_convention conv, qsw_grid** grid) {
  if (!grid || !r_samples || !m_samples) return QSW_ERROR_DOMAIN;
  return guarded([&] {
    const qsw::ThresholdRegion region = qsw::threshold_region(
        qsw::SchmidtCoefficient(phi), target, n,
        std::vector<uint32_t>(r_samples, r_samples + r_count),
        std::vector<double>(m_samples, m_samples + m_count),
        to_convention(conv));
    auto out = std::make_unique<qsw_grid>();
    out->x.assign(region.r_axis.begin(), region.r_axis.end());
    out->y = region.m_axis;
    out->values.reserve(region.reached.size());
    for (uint8_t cell : region.reached) {
      out->values.push_back(cell ? 1.0 : 0.0);
    }
    *grid = out.release();
  });
}

size_t qsw_grid_x_count(const qsw_grid* grid) {
  return grid ? grid->x.size() : 0;
}

size_t qsw_grid_y_count(const qsw_grid* grid) {
  return grid ? grid->y.size() : 0;
}

double qsw_grid_x(const qsw_grid* grid, size_t ix) {
  return grid && ix < grid->x.size() ? grid->x[ix] : kNaN;
}

double qsw_grid_y(const qsw_grid* grid, size_t iy) {
  return grid && iy < grid->y.size() ? grid->y[iy] : kNaN;
}

double qsw_grid_value(const qsw_grid* grid, size_t iy, size_t ix) {
  if (!grid || ix >= grid->x.size() || iy >= grid->y.size()) return kNaN;
  return grid->values[iy * grid->x.size() + ix];
}

void qsw_grid_free(qsw_grid* grid) { delete grid; }

qsw_status qsw_graph_sample(uint32_t n, double p, int directed, uint64_t seed,
                            qsw_graph** graph) {
  if (!graph) return QSW_ERROR_DOMAIN;
  return guarded([&] {
    auto out = std::make_unique<qsw_graph>();
    out->impl =
        qsw::sample_graph(qsw::NetworkParams(n, p, directed != 0), seed);
    *graph = out.release();
  });
}

uint32_t qsw_graph_node_count(const qsw_graph* graph) {
  return graph ? graph->impl.n : 0;
}

uint32_t qsw_graph_hub_link_count(const qsw_graph* graph) {
  return graph ? graph->impl.hub_link_count() : 0;
}

int qsw_graph_has_hub_link(const qsw_graph* graph, uint32_t node) {
  if (!graph || node >= graph->impl.n) return 0;
  return graph->impl.hub_links[node] ? 1 : 0;
}

qsw_status qsw_graph_shortest_path(const qsw_graph* graph, uint32_t a,
                                   uint32_t b, uint32_t* length) {
  if (!graph || !length) return QSW_ERROR_DOMAIN;
  return guarded([&] { *length = qsw::shortest_path_len(graph->impl, a, b); });
}

void qsw_graph_free(qsw_graph* graph) { delete graph; }

qsw_status qsw_mc_path_dist(uint32_t n, double p, int directed, uint32_t r,
                            uint64_t trials, uint64_t seed, uint64_t* counts) {
  if (!counts) return QSW_ERROR_DOMAIN;
  return guarded([&] {
    const qsw::EmpiricalDistribution emp = qsw::empirical_path_dist(
        qsw::SeededRun{qsw::NetworkParams(n, p, directed != 0), trials, seed},
        r);
    for (uint32_t i = 0; i < r; ++i) counts[i] = emp.counts[i];
  });
}

qsw_status qsw_mc_chain_scp(uint32_t links, double phi, uint64_t trials,
                            uint64_t seed, double* estimate,
                            double* std_error) {
  if (!estimate) return QSW_ERROR_DOMAIN;
  return guarded([&] {
    const qsw::ChainScpEstimate est = qsw::simulate_chain_scp(
        links, qsw::SchmidtCoefficient(phi), trials, seed);
    *estimate = est.estimate;
    if (std_error) *std_error = est.std_error;
  });
}

qsw_status qsw_exact_chain_scp(uint32_t links, double phi, double* scp) {
  if (!scp) return QSW_ERROR_DOMAIN;
  return guarded([&] {
    *scp = qsw::exact_chain_scp(links, qsw::SchmidtCoefficient(phi));
  });
}

qsw_status qsw_mc_clustering(uint32_t n, double p, uint64_t trials,
                             uint64_t seed, double* estimate) {
  if (!estimate) return QSW_ERROR_DOMAIN;
  return guarded([&] {
    *estimate = qsw::empirical_clustering(
        qsw::SeededRun{qsw::NetworkParams(n, p, false), trials, seed});
  });
}

qsw_status qsw_mc_mean_distance(uint32_t n, double p, int directed,
                                uint64_t trials, uint64_t seed, double* mean) {
  if (!mean) return QSW_ERROR_DOMAIN;
  return guarded([&] {
    *mean = qsw::empirical_mean_distance(
        qsw::SeededRun{qsw::NetworkParams(n, p, directed != 0), trials, seed});
  });
}

}  // extern "C"
