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

#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"

using qsw::AvgScpQuery;
using qsw::ChainConvention;
using qsw::SchmidtCoefficient;

namespace {
constexpr auto kVerbatim = ChainConvention::kVerbatim;

double avg(std::uint32_t r, double phi, double m, std::uint32_t n = 1000,
           ChainConvention conv = kVerbatim) {
  return qsw::avg_scp(AvgScpQuery{r, SchmidtCoefficient(phi), m, n, conv});
}
}  // namespace

TEST_CASE("avg_scp with no shortcuts reduces to the chain SCP") {
  for (std::uint32_t r : {1u, 5u, 20u, 100u}) {
    for (double phi : {0.1, 0.3, 0.45}) {
      const double expected = qsw::scp_chain(r, SchmidtCoefficient(phi), kVerbatim);
      CHECK(std::abs(avg(r, phi, 0.0) - expected) < 1e-12);
    }
  }
}

TEST_CASE("avg_scp is 1 at maximal entanglement") {
  for (std::uint32_t r : {1u, 20u, 500u}) {
    for (double m : {0.0, 50.0, 300.0}) {
      CHECK(avg(r, 0.5, m) == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("avg_scp frozen regression point in the threshold regime") {
  // r=20, phi=0.45, m=50, n=1000 clears the 2/3 target.
  const double v = avg(20, 0.45, 50.0);
  CHECK(v >= 2.0 / 3.0);
  CHECK(v == doctest::Approx(0.6933735801962877).epsilon(1e-9));
}

TEST_CASE("avg_scp stays in [0,1] and grows with phi") {
  for (std::uint32_t r : {2u, 20u, 80u}) {
    for (double m : {0.0, 10.0, 120.0}) {
      double prev = -1.0;
      for (int i = 0; i <= 40; ++i) {
        const double phi = 0.5 * i / 40.0;
        const double v = avg(r, phi, m);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
        CHECK(v >= prev - 1e-12);
        prev = v;
      }
    }
  }
}

TEST_CASE("avg_scp validates its query") {
  CHECK_THROWS_AS(avg(501, 0.4, 0.0), std::domain_error);   // r > n/2
  CHECK_THROWS_AS(avg(0, 0.4, 0.0), std::domain_error);
  CHECK_THROWS_AS(avg(10, 0.4, -1.0), std::domain_error);
  CHECK_THROWS_AS(avg(10, 0.7, 0.0), std::domain_error);
  // m above n clamps p to 1 instead of failing.
  CHECK(avg(10, 0.45, 5000.0) == doctest::Approx(0.9).epsilon(1e-12));
}

TEST_CASE("scp_heatmap layout and degenerate grid") {
  const auto one = qsw::scp_heatmap(20, 1000, {0.5}, {0.0}, kVerbatim);
  REQUIRE(one.values.size() == 1);
  CHECK(one.value(0, 0) == 1.0);

  const std::vector<double> phis{0.3, 0.45, 0.5};
  const std::vector<double> ms{0.0, 50.0, 100.0, 200.0};
  const auto grid = qsw::scp_heatmap(20, 1000, phis, ms, kVerbatim);
  CHECK(grid.r == 20);
  REQUIRE(grid.values.size() == phis.size() * ms.size());
  for (std::size_t iy = 0; iy < ms.size(); ++iy) {
    for (std::size_t ix = 0; ix < phis.size(); ++ix) {
      CHECK(grid.value(iy, ix) ==
            doctest::Approx(avg(20, phis[ix], ms[iy])).epsilon(1e-15));
    }
    // phi = 0.5 column is all ones.
    CHECK(grid.value(iy, 2) == doctest::Approx(1.0).epsilon(1e-9));
  }
  // Large SCP is reachable at small m for short distances.
  CHECK(grid.value(1, 1) > 2.0 / 3.0);  // phi=0.45, m=50 at r=20

  CHECK_THROWS_AS(qsw::scp_heatmap(20, 1000, {}, ms, kVerbatim),
                  std::domain_error);
  CHECK_THROWS_AS(qsw::scp_heatmap(20, 1000, {0.4, 0.3}, ms, kVerbatim),
                  std::domain_error);
}

TEST_CASE("threshold_shortcuts fixtures") {
  const auto zero = qsw::threshold_shortcuts(20, SchmidtCoefficient(0.5), 1000,
                                             1.0, 300.0, 1.0, kVerbatim);
  REQUIRE(zero.has_value());
  CHECK(*zero == 0.0);

  // Short distances need no shortcuts at all.
  const auto ring_only = qsw::threshold_shortcuts(
      10, SchmidtCoefficient(0.45), 1000, 2.0 / 3.0, 300.0, 1.0, kVerbatim);
  REQUIRE(ring_only.has_value());
  CHECK(*ring_only == 0.0);

  const auto mid = qsw::threshold_shortcuts(80, SchmidtCoefficient(0.45), 1000,
                                            2.0 / 3.0, 300.0, 1.0, kVerbatim);
  REQUIRE(mid.has_value());
  CHECK(*mid == 52.0);

  const auto never = qsw::threshold_shortcuts(
      500, SchmidtCoefficient(0.3), 1000, 0.99, 300.0, 1.0, kVerbatim);
  CHECK(!never.has_value());

  CHECK_THROWS_AS(qsw::threshold_shortcuts(10, SchmidtCoefficient(0.4), 1000,
                                           0.0, 300.0, 1.0, kVerbatim),
                  std::domain_error);
  CHECK_THROWS_AS(qsw::threshold_shortcuts(10, SchmidtCoefficient(0.4), 1000,
                                           0.5, 300.0, 0.0, kVerbatim),
                  std::domain_error);
}

TEST_CASE("per-distance threshold plateaus for far nodes") {
  // The required m saturates: identical value (within one grid step) from
  // r = 200 out to r = 500.
  std::vector<double> thresholds;
  for (std::uint32_t r = 200; r <= 500; r += 50) {
    const auto m = qsw::threshold_shortcuts(r, SchmidtCoefficient(0.45), 1000,
                                            2.0 / 3.0, 300.0, 1.0, kVerbatim);
    REQUIRE(m.has_value());
    thresholds.push_back(*m);
  }
  for (double m : thresholds) {
    CHECK(std::abs(m - thresholds.front()) <= 1.0);
  }
}

TEST_CASE("threshold_distance fixtures") {
  CHECK(qsw::threshold_distance(SchmidtCoefficient(0.45), 2.0 / 3.0, 1000,
                                kVerbatim) == 17);
  CHECK(qsw::threshold_distance(SchmidtCoefficient(0.45), 2.0 / 3.0, 1000,
                                ChainConvention::kCalibrated) == 18);
  CHECK(qsw::threshold_distance(SchmidtCoefficient(0.45), 3.0 / 4.0, 1000,
                                kVerbatim) == 9);
  CHECK(qsw::threshold_distance(SchmidtCoefficient(0.45), 3.0 / 4.0, 1000,
                                ChainConvention::kCalibrated) == 10);
  // Maximal entanglement never fails, even at the farthest distance.
  CHECK(qsw::threshold_distance(SchmidtCoefficient(0.5), 1.0, 1000,
                                kVerbatim) == 500);
  // Weak entanglement cannot reach an ambitious target even at r = 1.
  CHECK(qsw::threshold_distance(SchmidtCoefficient(0.1), 0.99, 1000,
                                kVerbatim) == 0);
}

TEST_CASE("threshold_region nesting and maximal-entanglement fill") {
  std::vector<std::uint32_t> rs{10, 20, 50, 100, 200};
  std::vector<double> ms;
  for (int i = 0; i <= 30; ++i) ms.push_back(10.0 * i);

  const auto full = qsw::threshold_region(SchmidtCoefficient(0.5), 2.0 / 3.0,
                                          1000, rs, ms, kVerbatim);
  for (std::size_t iy = 0; iy < ms.size(); ++iy) {
    for (std::size_t ix = 0; ix < rs.size(); ++ix) {
      CHECK(full.cell(iy, ix));
    }
  }

  const auto loose = qsw::threshold_region(SchmidtCoefficient(0.45), 2.0 / 3.0,
                                           1000, rs, ms, kVerbatim);
  const auto tight = qsw::threshold_region(SchmidtCoefficient(0.45), 3.0 / 4.0,
                                           1000, rs, ms, kVerbatim);
  for (std::size_t iy = 0; iy < ms.size(); ++iy) {
    for (std::size_t ix = 0; ix < rs.size(); ++ix) {
      if (tight.cell(iy, ix)) CHECK(loose.cell(iy, ix));
    }
  }

  CHECK_THROWS_AS(qsw::threshold_region(SchmidtCoefficient(0.45), 2.0 / 3.0,
                                        1000, {600}, ms, kVerbatim),
                  std::domain_error);
}
