#pragma once

#include <string>
#include <variant>

#include "aoicoex/repeated_sim.hpp"

// Builders for the three coexistence scenarios and the parameter sweeps
// behind the report tables: access-probability curves, stage payoffs at
// equilibrium, discounted-payoff-versus-alpha curves, and the tau_aon = 0
// occupancy sweep.

namespace aoicoex {

enum class Pairing { aon_ton, aon_aon, ton_ton };

std::string pairing_name(Pairing pairing);      // "aon-ton" etc.
Pairing pairing_from_name(const std::string&);  // throws std::invalid_argument

struct ScenarioSpec {
  Pairing pairing = Pairing::aon_ton;
  int n_first = 5;
  int n_second = 5;
  double beta = 0.01;
  double rate = 1.0;
  std::vector<double> alphas;  // empty selects the default alpha grid
  long long runs = 2000;
  int stages = 1000;
  std::uint64_t master_seed = 1;
  AgeReset age_reset = AgeReset::network;

  void validate() const;  // throws std::domain_error
};

// 50-point discount-factor grid 0.01, 0.03, ..., 0.99.
std::vector<double> default_alpha_grid();

// Node-count grid used by the sweeps.
const std::vector<int>& node_count_grid();  // {1, 2, 5, 10, 50}

// Wires the pairing into a simulation config (network order: first, second).
MonteCarloConfig build(const ScenarioSpec& spec, int threads = 1,
                       int trace_runs = 0);

// Small tabular result: column names plus rows of cells.
using Cell = std::variant<double, std::string>;
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// Equilibrium access probability against age, per n_aon in the node grid,
// at the two ages threshold+sigma_idle and threshold+sigma_succ.
Table sweep_access_probability(double beta);

// Stage payoffs at equilibrium over the (n_ton, n_aon) grid with the age
// state pinned to threshold+sigma_succ.
Table sweep_stage_payoffs(double beta);

// Discounted payoffs against alpha for all three pairings (node counts,
// runs, seed and stages from the template spec).
Table sweep_discounted_payoffs(const ScenarioSpec& tmpl, int threads = 1);

// Frequency of tau_aon = 0 against n_aon (AON-TON pairing, n_ton from the
// template, alpha fixed at 0.99).
Table sweep_tau_zero_frequency(const ScenarioSpec& tmpl, int threads = 1);

// Empirical frequency table over the three pairings at the template's node
// counts and seed.
Table frequencies_table(const ScenarioSpec& tmpl, int threads = 1);

// One-scenario frequency row (shared by frequencies_table and cmd_simulate).
std::vector<Cell> frequencies_row(const ScenarioSpec& spec,
                                  const RunAggregate& agg);

// Per-stage trace table of run 0 for a scenario.
Table trace_table(const RunAggregate& agg);

// Discounted payoff table (one row per alpha) for a single scenario run.
Table aggregate_table(const ScenarioSpec& spec, const RunAggregate& agg);

}  // namespace aoicoex
