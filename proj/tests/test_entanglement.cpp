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

#include "entanglement.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"

using qsw::ChainConvention;
using qsw::SchmidtCoefficient;

namespace {
constexpr auto kVerbatim = ChainConvention::kVerbatim;
constexpr auto kCalibrated = ChainConvention::kCalibrated;
}  // namespace

TEST_CASE("SchmidtCoefficient validates its range") {
  CHECK(SchmidtCoefficient(0.0).value() == 0.0);
  CHECK(SchmidtCoefficient(0.5).value() == 0.5);
  CHECK_THROWS_AS(SchmidtCoefficient(-0.01), std::domain_error);
  CHECK_THROWS_AS(SchmidtCoefficient(0.51), std::domain_error);
  CHECK_THROWS_AS(SchmidtCoefficient(std::nan("")), std::domain_error);
}

TEST_CASE("swap_identical closed forms") {
  const auto maximal = qsw::swap_identical(SchmidtCoefficient(0.5));
  CHECK(maximal.success_prob == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(maximal.residual_coeff.value() == doctest::Approx(0.5).epsilon(1e-15));

  const auto product = qsw::swap_identical(SchmidtCoefficient(0.0));
  CHECK(product.success_prob == 0.0);
  CHECK(product.residual_coeff.value() == 0.0);
  CHECK(product.residual_prob == 1.0);

  const auto mid = qsw::swap_identical(SchmidtCoefficient(0.3));
  CHECK(mid.success_prob == doctest::Approx(0.42).epsilon(1e-14));
  CHECK(mid.residual_coeff.value() ==
        doctest::Approx(0.09 / 0.58).epsilon(1e-14));
  CHECK(mid.residual_prob == doctest::Approx(0.58).epsilon(1e-14));
}

TEST_CASE("swap_identical matches the four-qubit Bell projection") {
  for (double phi : {0.05, 0.1, 0.2, 0.3, 0.4, 0.45, 0.5}) {
    const auto outcome = qsw::swap_identical(SchmidtCoefficient(phi));
    const auto oracle = qsw_test::bell_swap_oracle(phi, phi);
    // Psi outcomes carry the maximal pair, Phi outcomes the failure branch.
    CHECK(outcome.success_prob ==
          doctest::Approx(oracle[2].prob + oracle[3].prob).epsilon(1e-12));
    CHECK(outcome.residual_prob ==
          doctest::Approx(oracle[0].prob + oracle[1].prob).epsilon(1e-12));
    CHECK(outcome.residual_coeff.value() ==
          doctest::Approx(oracle[0].smaller_coeff).epsilon(1e-12));
    if (outcome.success_prob > 0.0) {
      CHECK(oracle[2].smaller_coeff == doctest::Approx(0.5).epsilon(1e-12));
    }
    CHECK(outcome.success_prob + outcome.residual_prob ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("distill_prob") {
  CHECK(qsw::distill_prob(SchmidtCoefficient(0.5)) == 1.0);
  CHECK(qsw::distill_prob(SchmidtCoefficient(0.25)) == 0.5);
  const double residual = 0.09 / 0.58;
  CHECK(qsw::distill_prob(SchmidtCoefficient(residual)) ==
        doctest::Approx(2.0 * residual).epsilon(1e-15));
}

TEST_CASE("swap then distill composes to 2*phi") {
  for (int i = 0; i <= 199; ++i) {
    const double phi = 0.5 * i / 199.0;
    const auto outcome = qsw::swap_identical(SchmidtCoefficient(phi));
    const double total =
        outcome.success_prob * 1.0 +
        outcome.residual_prob * qsw::distill_prob(outcome.residual_coeff);
    CHECK(std::abs(total - 2.0 * phi) < 1e-12);
  }
}

TEST_CASE("scp_chain single link and short chains") {
  for (auto conv : {kVerbatim, kCalibrated}) {
    CHECK(qsw::scp_chain(1, SchmidtCoefficient(0.3), conv) == 0.6);
  }
  CHECK(qsw::scp_chain(2, SchmidtCoefficient(0.3), kCalibrated) == 0.6);
  CHECK(qsw::scp_chain(2, SchmidtCoefficient(0.3), kVerbatim) ==
        doctest::Approx(0.432).epsilon(1e-14));
  CHECK_THROWS_AS(qsw::scp_chain(0, SchmidtCoefficient(0.3), kVerbatim),
                  std::domain_error);
}

TEST_CASE("scp_chain is exactly 1 at maximal entanglement") {
  for (std::uint32_t links : {1u, 2u, 7u, 100u, 9999u, 10000u}) {
    CHECK(qsw::scp_chain(links, SchmidtCoefficient(0.5), kVerbatim) == 1.0);
    CHECK(qsw::scp_chain(links, SchmidtCoefficient(0.5), kCalibrated) == 1.0);
  }
}

TEST_CASE("calibrated convention pins 1- and 2-link chains to 2*phi") {
  for (int i = 0; i <= 100; ++i) {
    const double phi = 0.5 * i / 100.0;
    CHECK(qsw::scp_chain(1, SchmidtCoefficient(phi), kCalibrated) ==
          2.0 * phi);
    CHECK(qsw::scp_chain(2, SchmidtCoefficient(phi), kCalibrated) ==
          2.0 * phi);
  }
}

TEST_CASE("scp_chain monotone in phi and in links") {
  for (auto conv : {kVerbatim, kCalibrated}) {
    for (std::uint32_t links = 1; links <= 20; ++links) {
      double prev = -1.0;
      for (int i = 0; i < 100; ++i) {
        const double phi = 0.5 * i / 99.0;
        const double v = qsw::scp_chain(links, SchmidtCoefficient(phi), conv);
        CHECK(v >= prev - 1e-12);
        prev = v;
      }
    }
    for (double phi : {0.1, 0.3, 0.45, 0.49}) {
      double prev = 2.0;
      for (std::uint32_t links = 1; links <= 40; ++links) {
        const double v = qsw::scp_chain(links, SchmidtCoefficient(phi), conv);
        CHECK(v <= prev + 1e-12);
        prev = v;
      }
    }
  }
}

TEST_CASE("scp_bound closed forms and log-space evaluation") {
  for (std::uint32_t links : {1u, 2u, 7u, 501u}) {
    CHECK(qsw::scp_bound(links, SchmidtCoefficient(0.5)) == 1.0);
  }
  CHECK(qsw::scp_bound(2, SchmidtCoefficient(0.3)) ==
        doctest::Approx(0.84).epsilon(1e-14));
  CHECK(qsw::scp_bound(100, SchmidtCoefficient(0.4)) ==
        doctest::Approx(0.12988579352203838).epsilon(1e-12));
  CHECK(qsw::scp_bound(3, SchmidtCoefficient(0.0)) == 0.0);

  // Cross-check the exp/log route against direct power evaluation.
  for (double phi : {0.1, 0.25, 0.4, 0.45}) {
    const double base = 4.0 * phi * (1.0 - phi);
    for (std::uint32_t links = 1; links <= 64; ++links) {
      const double direct = std::pow(base, 0.5 * links);
      CHECK(qsw::scp_bound(links, SchmidtCoefficient(phi)) ==
            doctest::Approx(direct).epsilon(1e-12));
    }
  }
}

TEST_CASE("chain SCP respects the exponential envelope for long chains") {
  for (double phi : {0.3, 0.4, 0.45}) {
    for (std::uint32_t links = 20; links <= 200; ++links) {
      const double scp =
          qsw::scp_chain(links, SchmidtCoefficient(phi), kVerbatim);
      const double bound = qsw::scp_bound(links, SchmidtCoefficient(phi));
      CHECK(scp <= 1.05 * bound);
    }
  }
}

TEST_CASE("chain_scp_table matches per-length evaluation bit for bit") {
  for (auto conv : {kVerbatim, kCalibrated}) {
    for (double phi : {0.0, 0.2, 0.45, 0.5}) {
      const auto table = qsw::chain_scp_table(64, SchmidtCoefficient(phi), conv);
      REQUIRE(table.size() == 64);
      for (std::uint32_t l = 1; l <= 64; ++l) {
        CHECK(table[l - 1] == qsw::scp_chain(l, SchmidtCoefficient(phi), conv));
      }
    }
  }
}
