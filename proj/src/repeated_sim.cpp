#include "aoicoex/repeated_sim.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "aoicoex/stage_game.hpp"

namespace aoicoex {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

int first_of_kind(const std::vector<NetworkState>& states, NetworkKind kind) {
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (states[k].kind == kind) return static_cast<int>(k);
  }
  return -1;
}

}  // namespace

void RunConfig::validate() const {
  lengths.validate();
  if (networks.empty()) {
    throw std::domain_error("at least one network required");
  }
  for (const NetworkConfig& net : networks) {
    if (net.n_nodes < 1) {
      throw std::domain_error("every network needs at least one node");
    }
  }
  if (stages < 1) throw std::domain_error("stages must be >= 1");
  for (double alpha : alphas) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
      throw std::domain_error("discount factors must lie in (0,1)");
    }
  }
}

void MonteCarloConfig::validate() const {
  run.validate();
  if (runs < 1) throw std::domain_error("runs must be >= 1");
  if (threads < 0) throw std::domain_error("threads must be >= 0");
  if (trace_runs < 0 || trace_runs > runs) {
    throw std::domain_error("trace_runs must lie in [0, runs]");
  }
}

double NetworkState::average_age() const {
  double sum = 0.0;
  for (double age : node_ages) sum += age;
  return sum / static_cast<double>(node_ages.size());
}

StageRecord simulate_stage(std::vector<NetworkState>& states,
                           const SlotLengths& lengths, Rng& rng,
                           AgeReset age_reset, int stage_index) {
  StageRecord record;
  record.stage_index = stage_index;
  record.tau_by_network.reserve(states.size());

  // Equilibrium play for the current state.
  for (const NetworkState& state : states) {
    double tau;
    if (state.kind == NetworkKind::aon) {
      tau = aon_aon_msne(state.n_nodes, state.average_age(), lengths);
    } else {
      tau = ton_ton_msne(state.n_nodes);
    }
    record.tau_by_network.push_back(tau);
  }

  // One draw per node, network-then-node order, regardless of tau.
  int transmitters = 0;
  int tx_net = -1;
  int tx_node = -1;
  for (std::size_t k = 0; k < states.size(); ++k) {
    const double tau = record.tau_by_network[k];
    for (int j = 0; j < states[k].n_nodes; ++j) {
      if (rng.u01() < tau) {
        ++transmitters;
        tx_net = static_cast<int>(k);
        tx_node = j;
      }
    }
  }

  double slot_len;
  if (transmitters == 0) {
    record.slot_type = SlotType::idle;
    slot_len = lengths.sigma_idle;
  } else if (transmitters == 1) {
    record.slot_type = SlotType::success;
    record.successful_node = {tx_net, tx_node};
    slot_len = lengths.sigma_succ;
  } else {
    record.slot_type = SlotType::collision;
    slot_len = lengths.sigma_col;
  }

  // Age updates.
  for (std::size_t k = 0; k < states.size(); ++k) {
    NetworkState& state = states[k];
    if (state.kind != NetworkKind::aon) continue;
    const bool own_success = record.slot_type == SlotType::success &&
                             tx_net == static_cast<int>(k);
    if (own_success && age_reset == AgeReset::network) {
      for (double& age : state.node_ages) age = lengths.sigma_succ;
    } else {
      for (int j = 0; j < state.n_nodes; ++j) {
        if (own_success && j == tx_node) {
          state.node_ages[j] = lengths.sigma_succ;
        } else {
          state.node_ages[j] += slot_len;
        }
      }
    }
  }

  // Realized payoffs and trace fields for the first network of each kind.
  const int ton = first_of_kind(states, NetworkKind::ton);
  const int aon = first_of_kind(states, NetworkKind::aon);
  record.stage_u_ton = ton < 0 ? kNan : 0.0;
  if (ton >= 0 && record.slot_type == SlotType::success && tx_net == ton) {
    record.stage_u_ton =
        lengths.sigma_succ * lengths.rate / states[ton].n_nodes;
  }
  if (aon >= 0) {
    record.avg_age_end = states[aon].average_age();
    record.stage_u_aon = -record.avg_age_end;
  } else {
    record.avg_age_end = kNan;
    record.stage_u_aon = kNan;
  }
  return record;
}

std::vector<StageRecord> simulate_run(const RunConfig& config,
                                      std::uint64_t seed) {
  config.validate();
  std::vector<NetworkState> states;
  states.reserve(config.networks.size());
  for (const NetworkConfig& net : config.networks) {
    NetworkState state;
    state.kind = net.kind;
    state.n_nodes = net.n_nodes;
    if (net.kind == NetworkKind::aon) {
      state.node_ages.assign(static_cast<std::size_t>(net.n_nodes),
                             config.lengths.sigma_succ);
    }
    states.push_back(std::move(state));
  }

  Rng rng(seed);
  std::vector<StageRecord> records;
  records.reserve(static_cast<std::size_t>(config.stages));
  for (int n = 1; n <= config.stages; ++n) {
    records.push_back(
        simulate_stage(states, config.lengths, rng, config.age_reset, n));
  }
  return records;
}

double discounted_payoff(const std::vector<double>& stage_payoffs,
                         double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error("alpha must lie in (0,1)");
  }
  // Horner evaluation of sum alpha^(n-1) u_n, backwards for stability.
  double sum = 0.0;
  for (auto it = stage_payoffs.rbegin(); it != stage_payoffs.rend(); ++it) {
    sum = *it + alpha * sum;
  }
  return (1.0 - alpha) * sum;
}

namespace {

// Everything one run contributes to the aggregate, independent of all other
// runs so workers can fill these in any order.
struct RunSummary {
  std::vector<double> discounted;  // [network * n_alphas]
  std::vector<long long> successes;  // per network
  std::vector<long long> tau_zero_stages;  // per network
  long long collisions = 0;
};

RunSummary summarize_run(const MonteCarloConfig& config, std::uint64_t seed,
                         std::vector<StageRecord>* trace_out) {
  const std::size_t n_nets = config.run.networks.size();
  const std::size_t n_alphas = config.run.alphas.size();
  std::vector<StageRecord> records = simulate_run(config.run, seed);

  RunSummary summary;
  summary.successes.assign(n_nets, 0);
  summary.tau_zero_stages.assign(n_nets, 0);

  // Realized per-stage payoffs per network.
  std::vector<std::vector<double>> stage_u(
      n_nets, std::vector<double>(records.size(), 0.0));
  for (std::size_t n = 0; n < records.size(); ++n) {
    const StageRecord& rec = records[n];
    if (rec.slot_type == SlotType::collision) ++summary.collisions;
    if (rec.successful_node) ++summary.successes[rec.successful_node->first];
    for (std::size_t k = 0; k < n_nets; ++k) {
      if (config.run.networks[k].kind == NetworkKind::aon) {
        if (rec.tau_by_network[k] == 0.0) ++summary.tau_zero_stages[k];
      }
    }
  }
  {
    // Second pass for payoffs: TON earns sigma_succ*rate/n on own success,
    // AON pays its end-of-stage average age. Recomputed from the records so
    // the trace and the aggregate cannot drift apart.
    std::vector<NetworkState> states;  // only ages needed for AON payoffs
    for (const NetworkConfig& net : config.run.networks) {
      NetworkState st;
      st.kind = net.kind;
      st.n_nodes = net.n_nodes;
      if (net.kind == NetworkKind::aon) {
        st.node_ages.assign(static_cast<std::size_t>(net.n_nodes),
                            config.run.lengths.sigma_succ);
      }
      states.push_back(std::move(st));
    }
    const SlotLengths& L = config.run.lengths;
    for (std::size_t n = 0; n < records.size(); ++n) {
      const StageRecord& rec = records[n];
      double slot_len = L.sigma_idle;
      if (rec.slot_type == SlotType::success) slot_len = L.sigma_succ;
      if (rec.slot_type == SlotType::collision) slot_len = L.sigma_col;
      for (std::size_t k = 0; k < n_nets; ++k) {
        NetworkState& st = states[k];
        if (st.kind == NetworkKind::ton) {
          if (rec.successful_node &&
              rec.successful_node->first == static_cast<int>(k)) {
            stage_u[k][n] = L.sigma_succ * L.rate / st.n_nodes;
          }
          continue;
        }
        const bool own_success =
            rec.successful_node &&
            rec.successful_node->first == static_cast<int>(k);
        if (own_success && config.run.age_reset == AgeReset::network) {
          for (double& age : st.node_ages) age = L.sigma_succ;
        } else {
          for (int j = 0; j < st.n_nodes; ++j) {
            if (own_success && j == rec.successful_node->second) {
              st.node_ages[j] = L.sigma_succ;
            } else {
              st.node_ages[j] += slot_len;
            }
          }
        }
        stage_u[k][n] = -st.average_age();
      }
    }
  }

  summary.discounted.resize(n_nets * n_alphas);
  for (std::size_t k = 0; k < n_nets; ++k) {
    for (std::size_t a = 0; a < n_alphas; ++a) {
      summary.discounted[k * n_alphas + a] =
          discounted_payoff(stage_u[k], config.run.alphas[a]);
    }
  }
  if (trace_out) *trace_out = std::move(records);
  return summary;
}

}  // namespace

RunAggregate monte_carlo(const MonteCarloConfig& config) {
  config.validate();
  const std::size_t n_nets = config.run.networks.size();
  const std::size_t n_alphas = config.run.alphas.size();
  const long long runs = config.runs;

  std::vector<RunSummary> summaries(static_cast<std::size_t>(runs));
  std::vector<std::vector<StageRecord>> traces(
      static_cast<std::size_t>(config.trace_runs));

  int threads = config.threads;
  if (threads == 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
  }
  threads = static_cast<int>(
      std::min<long long>(threads, runs));

  std::atomic<long long> next{0};
  auto worker = [&] {
    for (;;) {
      const long long i = next.fetch_add(1);
      if (i >= runs) return;
      const std::uint64_t seed =
          run_seed(config.master_seed, static_cast<std::uint64_t>(i));
      std::vector<StageRecord>* trace =
          i < config.trace_runs ? &traces[static_cast<std::size_t>(i)]
                                : nullptr;
      summaries[static_cast<std::size_t>(i)] =
          summarize_run(config, seed, trace);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  // Deterministic reduction: everything folds in run-index order, so the
  // result is bit-identical for any thread count.
  RunAggregate agg;
  agg.alphas = config.run.alphas;
  agg.runs = runs;
  agg.stages = config.run.stages;
  agg.traces = std::move(traces);

  const double total_stages =
      static_cast<double>(runs) * static_cast<double>(config.run.stages);
  std::vector<long long> successes(n_nets, 0);
  std::vector<long long> tau_zero(n_nets, 0);
  long long collisions = 0;
  for (const RunSummary& s : summaries) {
    collisions += s.collisions;
    for (std::size_t k = 0; k < n_nets; ++k) {
      successes[k] += s.successes[k];
      tau_zero[k] += s.tau_zero_stages[k];
    }
  }
  agg.freq_collision = static_cast<double>(collisions) / total_stages;
  agg.freq_success_per_node.resize(n_nets);
  agg.freq_tau_zero.resize(n_nets);
  for (std::size_t k = 0; k < n_nets; ++k) {
    agg.freq_success_per_node[k] =
        static_cast<double>(successes[k]) /
        (total_stages * config.run.networks[k].n_nodes);
    agg.freq_tau_zero[k] =
        config.run.networks[k].kind == NetworkKind::aon
            ? static_cast<double>(tau_zero[k]) / total_stages
            : kNan;
  }

  agg.payoff.assign(n_nets, std::vector<PayoffStat>(n_alphas));
  for (std::size_t k = 0; k < n_nets; ++k) {
    for (std::size_t a = 0; a < n_alphas; ++a) {
      const std::size_t idx = k * n_alphas + a;
      double mean = 0.0;
      for (const RunSummary& s : summaries) mean += s.discounted[idx];
      mean /= static_cast<double>(runs);
      double var = 0.0;
      for (const RunSummary& s : summaries) {
        const double d = s.discounted[idx] - mean;
        var += d * d;
      }
      double se = 0.0;
      if (runs > 1) {
        var /= static_cast<double>(runs - 1);
        se = std::sqrt(var / static_cast<double>(runs));
      }
      agg.payoff[k][a] = PayoffStat{mean, se};
    }
  }
  return agg;
}

}  // namespace aoicoex
