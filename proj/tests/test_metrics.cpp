#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "aoicoex/metrics.hpp"
#include "aoicoex/stage_game.hpp"

using namespace aoicoex;

namespace {

const SlotLengths kDefault = SlotLengths::from_beta(0.01, 1.0);

}  // namespace

TEST_CASE("throughput pmf and expectation") {
  SUBCASE("lone certain transmitter") {
    const SlotProbabilities probs = slot_probabilities({1.0});
    const ThroughputPmf pmf = throughput_pmf(0, probs, kDefault);
    CHECK(pmf.success_bits == doctest::Approx(1.01));
    CHECK(pmf.p_success == doctest::Approx(1.0));
    CHECK(node_expected_throughput(0, probs, kDefault) ==
          doctest::Approx(1.01));
  }
  SUBCASE("silent node earns nothing") {
    const SlotProbabilities probs = slot_probabilities({0.0, 0.9});
    CHECK(node_expected_throughput(0, probs, kDefault) ==
          doctest::Approx(0.0).epsilon(1e-15));
  }
  SUBCASE("ten nodes at tau 0.2") {
    const SlotProbabilities probs = slot_probabilities(AccessVector(10, 0.2));
    // 0.2 * 0.8^9 * 1.01
    CHECK(node_expected_throughput(3, probs, kDefault) ==
          doctest::Approx(0.0271).epsilon(2e-3));
  }
  SUBCASE("index out of range") {
    const SlotProbabilities probs = slot_probabilities({0.5});
    CHECK_THROWS_AS(throughput_pmf(1, probs, kDefault), std::out_of_range);
    CHECK_THROWS_AS(node_expected_throughput(2, probs, kDefault),
                    std::out_of_range);
  }
}

TEST_CASE("network throughput") {
  SUBCASE("symmetric nodes equal any single node") {
    const SlotProbabilities probs = slot_probabilities(AccessVector(4, 0.25));
    const double single = node_expected_throughput(0, probs, kDefault);
    CHECK(network_expected_throughput(probs, kDefault, {0, 1, 2, 3}) ==
          doctest::Approx(single).epsilon(1e-12));
  }
  SUBCASE("published spot values") {
    // Two TON nodes at 1/2 against two AON nodes at the equilibrium for age
    // 3.01, and against ten AON nodes at the equilibrium for age 11.01.
    {
      const double tau_a = aon_aon_msne(2, 3.01, kDefault);
      const SlotProbabilities probs =
          slot_probabilities({tau_a, tau_a, 0.5, 0.5});
      CHECK(std::abs(network_expected_throughput(probs, kDefault, {2, 3}) -
                     0.1416) < 5e-4);
    }
    {
      const double tau_a = aon_aon_msne(10, 11.01, kDefault);
      AccessVector taus(12, tau_a);
      taus[10] = taus[11] = 0.5;
      const SlotProbabilities probs = slot_probabilities(taus);
      CHECK(std::abs(network_expected_throughput(probs, kDefault, {10, 11}) -
                     0.2281) < 5e-4);
    }
  }
  SUBCASE("empty node set rejected") {
    const SlotProbabilities probs = slot_probabilities({0.5});
    CHECK_THROWS_AS(network_expected_throughput(probs, kDefault, {}),
                    std::domain_error);
  }
}

TEST_CASE("age pmf structure") {
  const SlotProbabilities probs = slot_probabilities({0.3, 0.2, 0.5});
  const double prior = 4.2;
  const AgePmf pmf = age_pmf(prior, 1, probs, kDefault);
  CHECK(pmf.age_prior == doctest::Approx(prior));
  // idle, collision, busy, own success
  CHECK(pmf.outcomes[0].value == doctest::Approx(prior + 0.01));
  CHECK(pmf.outcomes[1].value == doctest::Approx(prior + 1.01));
  CHECK(pmf.outcomes[2].value == doctest::Approx(prior + 1.01));
  CHECK(pmf.outcomes[3].value == doctest::Approx(1.01));
  double mass = 0.0;
  for (const AgeOutcome& outcome : pmf.outcomes) mass += outcome.probability;
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pmf.outcomes[3].probability ==
        doctest::Approx(probs.p_succ_node[1]).epsilon(1e-12));
  CHECK(pmf.outcomes[2].probability ==
        doctest::Approx(probs.p_busy_seen_by[1]).epsilon(1e-12));
}

TEST_CASE("age expectation basics") {
  SUBCASE("certain reset") {
    const SlotProbabilities probs = slot_probabilities({1.0});
    CHECK(node_expected_age(9.0, 0, probs, kDefault) ==
          doctest::Approx(1.01).epsilon(1e-12));
  }
  SUBCASE("certain idle slot") {
    const SlotProbabilities probs = slot_probabilities({0.0, 0.0});
    CHECK(node_expected_age(3.5, 0, probs, kDefault) ==
          doctest::Approx(3.51).epsilon(1e-12));
  }
  SUBCASE("negative prior rejected") {
    const SlotProbabilities probs = slot_probabilities({0.5});
    CHECK_THROWS_AS(node_expected_age(-0.1, 0, probs, kDefault),
                    std::domain_error);
  }
}

TEST_CASE("age expectation equals brute-force profile enumeration") {
  // Node 0 of four (two AON-like at tau_a, two at 0.5); expectation over all
  // 2^4 pure profiles computed directly.
  const double tau_a = aon_aon_msne(2, 3.01, kDefault);
  const AccessVector taus{tau_a, tau_a, 0.5, 0.5};
  const SlotProbabilities probs = slot_probabilities(taus);
  const double prior = 3.01;

  double expect = 0.0;
  for (int mask = 0; mask < 16; ++mask) {
    double p = 1.0;
    int tx = 0;
    for (int i = 0; i < 4; ++i) {
      const bool on = mask & (1 << i);
      p *= on ? taus[i] : 1.0 - taus[i];
      tx += on ? 1 : 0;
    }
    double value;
    if (tx == 0) {
      value = prior + kDefault.sigma_idle;
    } else if (tx == 1) {
      value = (mask & 1) ? kDefault.sigma_succ : prior + kDefault.sigma_succ;
    } else {
      value = prior + kDefault.sigma_col;
    }
    expect += p * value;
  }
  CHECK(node_expected_age(prior, 0, probs, kDefault) ==
        doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("age expectation is affine in the prior") {
  const SlotProbabilities probs = slot_probabilities({0.25, 0.5, 0.1});
  const double a0 = node_expected_age(2.0, 0, probs, kDefault);
  const double a1 = node_expected_age(7.0, 0, probs, kDefault);
  const double slope = (a1 - a0) / 5.0;
  CHECK(slope == doctest::Approx(1.0 - probs.p_succ_node[0]).epsilon(1e-12));
  const double a2 = node_expected_age(11.0, 0, probs, kDefault);
  CHECK(a2 == doctest::Approx(a0 + slope * 9.0).epsilon(1e-12));
}

TEST_CASE("pmf mean equals conditional expectation for random draws") {
  std::mt19937_64 gen(12345);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 5);
    AccessVector taus(n);
    for (double& tau : taus) tau = unif(gen);
    const double beta = 0.01 + 0.98 * unif(gen);
    const SlotLengths lengths = SlotLengths::from_beta(beta, 1.0);
    const SlotProbabilities probs = slot_probabilities(taus);
    const double prior = 20.0 * unif(gen);
    const std::size_t i = gen() % n;
    const AgePmf pmf = age_pmf(prior, i, probs, lengths);
    const double direct = node_expected_age(prior, i, probs, lengths);
    CHECK(age_pmf_mean(pmf) == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("network age averages per-node expectations") {
  const SlotProbabilities probs = slot_probabilities({0.2, 0.3, 0.4});
  SUBCASE("identical priors match the single-node value for symmetric taus") {
    const SlotProbabilities sym = slot_probabilities({0.3, 0.3});
    const double single = node_expected_age(5.0, 0, sym, kDefault);
    CHECK(network_expected_age({5.0, 5.0}, sym, kDefault, {0, 1}) ==
          doctest::Approx(single).epsilon(1e-12));
  }
  SUBCASE("mixed priors") {
    const double manual = (node_expected_age(1.5, 0, probs, kDefault) +
                           node_expected_age(6.0, 2, probs, kDefault)) /
                          2.0;
    CHECK(network_expected_age({1.5, 6.0}, probs, kDefault, {0, 2}) ==
          doctest::Approx(manual).epsilon(1e-12));
  }
  SUBCASE("size mismatch rejected") {
    CHECK_THROWS_AS(network_expected_age({1.0}, probs, kDefault, {0, 1}),
                    std::domain_error);
    CHECK_THROWS_AS(network_expected_age({}, probs, kDefault, {}),
                    std::domain_error);
  }
}

TEST_CASE("symmetric network age equals expanded stage-game expression") {
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n_aon = 1 + static_cast<int>(gen() % 4);
    const int n_ton = 1 + static_cast<int>(gen() % 4);
    const double tau_a = unif(gen);
    const double tau_w = unif(gen);
    const double age = 20.0 * unif(gen);
    AccessVector taus(n_aon + n_ton, tau_a);
    for (int i = n_aon; i < n_aon + n_ton; ++i) taus[i] = tau_w;
    const SlotProbabilities probs = slot_probabilities(taus);
    std::vector<std::size_t> aon_set(n_aon);
    for (int i = 0; i < n_aon; ++i) aon_set[i] = i;
    const double via_metrics = network_expected_age(
        std::vector<double>(n_aon, age), probs, kDefault, aon_set);
    const double via_expansion =
        expanded_average_age(StageGameParams{n_aon, n_ton, kDefault, age},
                             StrategyProfile{tau_a, tau_w});
    CHECK(via_metrics == doctest::Approx(via_expansion).epsilon(1e-12));
  }
}
