/* Copyright 2026 The qswnet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Public C interface of libqswnet: singlet conversion probabilities on
 * hub-centered small-world rings, their closed-form path-length statistics,
 * and the Monte Carlo routines that validate them.
 *
 * Every function is a pure computation: no global state, safe to call from
 * any number of threads. Functions report qsw_status and write results
 * through out-pointers; opaque handles (qsw_grid, qsw_graph) are released
 * with their matching _free call.
 */

#ifndef QSWNET_INCLUDE_QSW_QSW_H_
#define QSWNET_INCLUDE_QSW_QSW_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define QSW_VERSION_STRING "0.1.0"

typedef enum qsw_status {
  QSW_OK = 0,
  QSW_ERROR_DOMAIN = 1,   /* argument outside its documented domain */
  QSW_ERROR_LIMIT = 2,    /* size cap exceeded (see qsw_exact_chain_scp) */
  QSW_ERROR_INTERNAL = 3, /* invariant violation inside the library */
} qsw_status;

typedef enum qsw_convention {
  /* Chain series truncation at floor(links/2), as commonly written. */
  QSW_CONVENTION_VERBATIM = 0,
  /* Series limit floor((links-1)/2); a 2-link chain yields exactly 2*phi. */
  QSW_CONVENTION_CALIBRATED = 1,
} qsw_convention;

const char* qsw_version(void);
const char* qsw_status_name(qsw_status status);

/* ---- entanglement algebra ------------------------------------------- */

/* Bell measurement on two identical pairs with smaller Schmidt coefficient
 * phi in [0, 0.5]. success_prob = 2 phi (1-phi); the failure branch keeps
 * residual_coeff = phi^2 / (phi^2 + (1-phi)^2) with weight residual_prob. */
qsw_status qsw_swap_identical(double phi, double* success_prob,
                              double* residual_coeff, double* residual_prob);

/* Procrustean conversion probability min(1, 2 phi). */
qsw_status qsw_distill_prob(double phi, double* prob);

/* Singlet conversion probability of a chain of `links` identical pairs. */
qsw_status qsw_scp_chain(uint32_t links, double phi, qsw_convention conv,
                         double* scp);

/* Exponential upper envelope (4 phi (1-phi))^(links/2). */
qsw_status qsw_scp_bound(uint32_t links, double phi, double* bound);

/* ---- hub-ring path statistics --------------------------------------- */

/* Actual-distance distribution P(l|r), l = 1..r, written to probs[0..r-1].
 * normalization_deficit may be NULL. */
qsw_status qsw_path_dist(uint32_t r, double p, int directed, double* probs,
                         double* normalization_deficit);

qsw_status qsw_mean_actual_distance(uint32_t r, double p, int directed,
                                    double* mean);

/* Average of the mean actual distance over the regular distances realized by
 * node pairs: r in {1..n-1} (directed) or {1..floor(n/2)} (undirected). */
qsw_status qsw_mean_network_distance(uint32_t n, double p, int directed,
                                     double* mean);

/* Clustering coefficient of the model, p^2. */
qsw_status qsw_clustering_coefficient(double p, double* coefficient);

/* ---- shortcut-averaged SCP and thresholds --------------------------- */

/* sum over l of scp_chain(l) * P(l|r), undirected distribution, p = m/n.
 * Requires r <= floor(n/2). */
qsw_status qsw_avg_scp(uint32_t r, double phi, double m, uint32_t n,
                       qsw_convention conv, double* scp);

/* Smallest m on the grid {0, m_step, ...} <= m_max with avg SCP >= target.
 * *found is 0 when the target is never reached (then *m_threshold is
 * untouched). */
qsw_status qsw_threshold_shortcuts(uint32_t r, double phi, uint32_t n,
                                   double target, double m_max, double m_step,
                                   qsw_convention conv, int* found,
                                   double* m_threshold);

/* Largest r <= floor(n/2) with chain SCP >= target at m = 0; 0 when even
 * r = 1 falls short. */
qsw_status qsw_threshold_distance(double phi, double target, uint32_t n,
                                  qsw_convention conv, uint32_t* r_threshold);

/* ---- dense grids (opaque handle) ------------------------------------ */

typedef struct qsw_grid qsw_grid;

/* avg SCP over (phi, m) at fixed r: x axis = phi, y axis = m. Axes must be
 * non-empty and ascending. */
qsw_status qsw_scp_heatmap(uint32_t r, uint32_t n, const double* phi_samples,
                           size_t phi_count, const double* m_samples,
                           size_t m_count, qsw_convention conv,
                           qsw_grid** grid);

/* Indicator grid over (r, m): 1.0 where avg SCP >= target, else 0.0.
 * x axis = r, y axis = m. */
qsw_status qsw_threshold_region(double phi, double target, uint32_t n,
                                const uint32_t* r_samples, size_t r_count,
                                const double* m_samples, size_t m_count,
                                qsw_convention conv, qsw_grid** grid);

size_t qsw_grid_x_count(const qsw_grid* grid);
size_t qsw_grid_y_count(const qsw_grid* grid);
double qsw_grid_x(const qsw_grid* grid, size_t ix);
double qsw_grid_y(const qsw_grid* grid, size_t iy);
double qsw_grid_value(const qsw_grid* grid, size_t iy, size_t ix);
void qsw_grid_free(qsw_grid* grid);

/* ---- sampled graphs (opaque handle) ---------------------------------- */

typedef struct qsw_graph qsw_graph;

/* Ring of n nodes; node i hub-linked i.i.d. with probability p under the
 * seed. Directed rings orient every ring edge the same way; hub shortcuts
 * stay bidirectional. */
qsw_status qsw_graph_sample(uint32_t n, double p, int directed, uint64_t seed,
                            qsw_graph** graph);

uint32_t qsw_graph_node_count(const qsw_graph* graph);
uint32_t qsw_graph_hub_link_count(const qsw_graph* graph);
/* 1 if `node` holds a hub shortcut, 0 otherwise (also 0 out of range). */
int qsw_graph_has_hub_link(const qsw_graph* graph, uint32_t node);

/* Actual distance between distinct nodes; every hub transit counts as two
 * half-length shortcuts, so the result is an integer. */
qsw_status qsw_graph_shortest_path(const qsw_graph* graph, uint32_t a,
                                   uint32_t b, uint32_t* length);
void qsw_graph_free(qsw_graph* graph);

/* ---- Monte Carlo validation ------------------------------------------ */

/* Histogram of actual distances over `trials` independently sampled graphs
 * for a fixed node pair at regular distance r. counts[0..r-1] receives the
 * tally per distance; identical seeds give identical counts. */
qsw_status qsw_mc_path_dist(uint32_t n, double p, int directed, uint32_t r,
                            uint64_t trials, uint64_t seed, uint64_t* counts);

/* Sequential swap-then-distill protocol estimate with binomial std error. */
qsw_status qsw_mc_chain_scp(uint32_t links, double phi, uint64_t trials,
                            uint64_t seed, double* estimate,
                            double* std_error);

/* Exact protocol expectation by full branch enumeration; links <= 24,
 * QSW_ERROR_LIMIT above. */
qsw_status qsw_exact_chain_scp(uint32_t links, double phi, double* scp);

/* Fraction of sampled nodes whose two ring neighbors are both hub-linked
 * (one fresh graph and one uniform node per trial). */
qsw_status qsw_mc_clustering(uint32_t n, double p, uint64_t trials,
                             uint64_t seed, double* estimate);

/* Mean shortest path over uniformly random ordered node pairs. */
qsw_status qsw_mc_mean_distance(uint32_t n, double p, int directed,
                                uint64_t trials, uint64_t seed, double* mean);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QSWNET_INCLUDE_QSW_QSW_H_ */
