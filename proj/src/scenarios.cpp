#include "aoicoex/scenarios.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "aoicoex/stage_game.hpp"

namespace aoicoex {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string slot_type_name(SlotType type) {
  switch (type) {
    case SlotType::idle:
      return "idle";
    case SlotType::success:
      return "success";
    case SlotType::collision:
      return "collision";
  }
  return "unknown";
}

int first_index(const std::vector<NetworkConfig>& nets, NetworkKind kind) {
  for (std::size_t k = 0; k < nets.size(); ++k) {
    if (nets[k].kind == kind) return static_cast<int>(k);
  }
  return -1;
}

}  // namespace

std::string pairing_name(Pairing pairing) {
  switch (pairing) {
    case Pairing::aon_ton:
      return "aon-ton";
    case Pairing::aon_aon:
      return "aon-aon";
    case Pairing::ton_ton:
      return "ton-ton";
  }
  throw std::invalid_argument("unknown pairing");
}

Pairing pairing_from_name(const std::string& name) {
  std::string key;
  key.reserve(name.size());
  for (char c : name) {
    key.push_back(c == '_' ? '-' : static_cast<char>(std::tolower(
                                       static_cast<unsigned char>(c))));
  }
  if (key == "aon-ton") return Pairing::aon_ton;
  if (key == "aon-aon") return Pairing::aon_aon;
  if (key == "ton-ton") return Pairing::ton_ton;
  throw std::invalid_argument("unknown scenario '" + name +
                              "' (expected aon-ton, aon-aon or ton-ton)");
}

void ScenarioSpec::validate() const {
  if (n_first < 1 || n_second < 1) {
    throw std::domain_error("node counts must be >= 1");
  }
  if (!(beta > 0.0 && beta < 1.0)) {
    throw std::domain_error("beta must lie in (0,1)");
  }
  if (!(rate > 0.0)) throw std::domain_error("rate must be positive");
  for (double alpha : alphas) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
      throw std::domain_error("discount factors must lie in (0,1)");
    }
  }
  if (runs < 1) throw std::domain_error("runs must be >= 1");
  if (stages < 1) throw std::domain_error("stages must be >= 1");
}

std::vector<double> default_alpha_grid() {
  std::vector<double> grid(50);
  for (int k = 0; k < 50; ++k) grid[k] = (2 * k + 1) / 100.0;
  return grid;
}

const std::vector<int>& node_count_grid() {
  static const std::vector<int> grid{1, 2, 5, 10, 50};
  return grid;
}

MonteCarloConfig build(const ScenarioSpec& spec, int threads, int trace_runs) {
  spec.validate();
  MonteCarloConfig config;
  NetworkKind first = NetworkKind::aon;
  NetworkKind second = NetworkKind::ton;
  if (spec.pairing == Pairing::aon_aon) second = NetworkKind::aon;
  if (spec.pairing == Pairing::ton_ton) first = NetworkKind::ton;
  config.run.networks = {NetworkConfig{first, spec.n_first},
                         NetworkConfig{second, spec.n_second}};
  config.run.lengths = SlotLengths::from_beta(spec.beta, spec.rate);
  config.run.stages = spec.stages;
  config.run.alphas = spec.alphas.empty() ? default_alpha_grid() : spec.alphas;
  config.run.age_reset = spec.age_reset;
  config.runs = spec.runs;
  config.master_seed = spec.master_seed;
  config.threads = threads;
  config.trace_runs = trace_runs;
  config.validate();
  return config;
}

Table sweep_access_probability(double beta) {
  const SlotLengths lengths = SlotLengths::from_beta(beta, 1.0);
  Table table;
  table.columns = {"n_nodes", "tau_ton_star", "age_state", "tau_aon_star"};
  for (int n : node_count_grid()) {
    const double threshold =
        n * (lengths.sigma_succ - lengths.sigma_idle);
    for (double age : {threshold + lengths.sigma_idle,
                       threshold + lengths.sigma_succ}) {
      table.rows.push_back({static_cast<double>(n), ton_ton_msne(n), age,
                            aon_aon_msne(n, age, lengths)});
    }
  }
  return table;
}

Table sweep_stage_payoffs(double beta) {
  const SlotLengths lengths = SlotLengths::from_beta(beta, 1.0);
  Table table;
  table.columns = {"n_ton",        "n_aon", "age_state", "tau_aon_star",
                   "tau_ton_star", "u_ton", "u_aon"};
  for (int n_ton : node_count_grid()) {
    for (int n_aon : node_count_grid()) {
      const double age =
          n_aon * (lengths.sigma_succ - lengths.sigma_idle) +
          lengths.sigma_succ;
      StageGameParams params{n_aon, n_ton, lengths, age};
      const EquilibriumResult eq = msne(params);
      StrategyProfile profile{eq.tau_aon_star.value_or(0.0),
                              eq.tau_ton_star.value_or(0.0)};
      const StagePayoffs payoffs = stage_payoffs(params, profile);
      table.rows.push_back({static_cast<double>(n_ton),
                            static_cast<double>(n_aon), age,
                            profile.tau_aon, profile.tau_ton, payoffs.u_ton,
                            payoffs.u_aon});
    }
  }
  return table;
}

Table sweep_discounted_payoffs(const ScenarioSpec& tmpl, int threads) {
  Table table;
  table.columns = {"scenario",  "alpha",     "U_ton_mean", "U_ton_se",
                   "U_aon_mean", "U_aon_se"};
  for (Pairing pairing :
       {Pairing::aon_ton, Pairing::aon_aon, Pairing::ton_ton}) {
    ScenarioSpec spec = tmpl;
    spec.pairing = pairing;
    const MonteCarloConfig config = build(spec, threads, 0);
    const RunAggregate agg = monte_carlo(config);
    const int ton = first_index(config.run.networks, NetworkKind::ton);
    const int aon = first_index(config.run.networks, NetworkKind::aon);
    for (std::size_t a = 0; a < agg.alphas.size(); ++a) {
      table.rows.push_back(
          {pairing_name(pairing), agg.alphas[a],
           ton < 0 ? kNan : agg.payoff[ton][a].mean,
           ton < 0 ? kNan : agg.payoff[ton][a].se,
           aon < 0 ? kNan : agg.payoff[aon][a].mean,
           aon < 0 ? kNan : agg.payoff[aon][a].se});
    }
  }
  return table;
}

Table sweep_tau_zero_frequency(const ScenarioSpec& tmpl, int threads) {
  Table table;
  table.columns = {"n_aon", "n_ton", "alpha", "freq_tau_zero", "U_ton_mean",
                   "U_ton_se"};
  for (int n_aon : node_count_grid()) {
    ScenarioSpec spec = tmpl;
    spec.pairing = Pairing::aon_ton;
    spec.n_first = n_aon;
    spec.alphas = {0.99};
    const MonteCarloConfig config = build(spec, threads, 0);
    const RunAggregate agg = monte_carlo(config);
    const int ton = first_index(config.run.networks, NetworkKind::ton);
    table.rows.push_back({static_cast<double>(n_aon),
                          static_cast<double>(spec.n_second), 0.99,
                          agg.freq_tau_zero[0], agg.payoff[ton][0].mean,
                          agg.payoff[ton][0].se});
  }
  return table;
}

std::vector<Cell> frequencies_row(const ScenarioSpec& spec,
                                  const RunAggregate& agg) {
  return {pairing_name(spec.pairing), agg.freq_success_per_node[0],
          agg.freq_success_per_node[1], agg.freq_collision,
          agg.freq_tau_zero[0],         agg.freq_tau_zero[1]};
}

Table frequencies_table(const ScenarioSpec& tmpl, int threads) {
  Table table;
  table.columns = {"scenario",
                   "freq_success_net1_per_node",
                   "freq_success_net2_per_node",
                   "freq_collision",
                   "freq_tau_zero_net1",
                   "freq_tau_zero_net2"};
  for (Pairing pairing :
       {Pairing::aon_aon, Pairing::aon_ton, Pairing::ton_ton}) {
    ScenarioSpec spec = tmpl;
    spec.pairing = pairing;
    if (spec.alphas.empty()) spec.alphas = {0.99};
    const RunAggregate agg = monte_carlo(build(spec, threads, 0));
    table.rows.push_back(frequencies_row(spec, agg));
  }
  return table;
}

Table trace_table(const RunAggregate& agg) {
  Table table;
  table.columns = {"stage", "tau_net1", "tau_net2", "slot_type",
                   "u_ton", "u_aon",    "avg_age"};
  if (agg.traces.empty()) return table;
  for (const StageRecord& rec : agg.traces.front()) {
    table.rows.push_back({static_cast<double>(rec.stage_index),
                          rec.tau_by_network[0], rec.tau_by_network[1],
                          slot_type_name(rec.slot_type), rec.stage_u_ton,
                          rec.stage_u_aon, rec.avg_age_end});
  }
  return table;
}

Table aggregate_table(const ScenarioSpec& spec, const RunAggregate& agg) {
  const MonteCarloConfig config = build(spec, 1, 0);
  const int ton = first_index(config.run.networks, NetworkKind::ton);
  const int aon = first_index(config.run.networks, NetworkKind::aon);
  Table table;
  table.columns = {"alpha", "U_ton_mean", "U_ton_se", "U_aon_mean",
                   "U_aon_se"};
  for (std::size_t a = 0; a < agg.alphas.size(); ++a) {
    table.rows.push_back({agg.alphas[a],
                          ton < 0 ? kNan : agg.payoff[ton][a].mean,
                          ton < 0 ? kNan : agg.payoff[ton][a].se,
                          aon < 0 ? kNan : agg.payoff[aon][a].mean,
                          aon < 0 ? kNan : agg.payoff[aon][a].se});
  }
  return table;
}

}  // namespace aoicoex
