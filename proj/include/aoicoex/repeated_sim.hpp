#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "aoicoex/rng.hpp"
#include "aoicoex/slot_model.hpp"

// Slot-by-slot Monte Carlo simulation of the repeated game: every stage each
// network plays its equilibrium rule for the current state, all nodes draw
// transmit/idle independently, the slot is classified, ages and payoffs are
// updated. Runs are independent and may execute on any number of threads;
// aggregation is performed in run-index order so results are bit-identical
// regardless of parallelism.

namespace aoicoex {

enum class NetworkKind { aon, ton };

// State-update convention for AON ages after a successful transmission by
// the network:
//   network — every node age resets to sigma_succ (the network's monitor saw
//             a fresh update; node ages stay synchronized),
//   node    — only the transmitting node resets; the others keep aging.
// The stage-game expectations (metrics/stage_game) always use the per-node
// convention; this switch affects only the simulated state trajectory.
enum class AgeReset { network, node };

struct NetworkConfig {
  NetworkKind kind = NetworkKind::ton;
  int n_nodes = 0;
};

struct RunConfig {
  std::vector<NetworkConfig> networks;
  SlotLengths lengths;
  int stages = 1000;
  std::vector<double> alphas;  // discount factors, each in (0,1)
  AgeReset age_reset = AgeReset::network;

  void validate() const;  // throws std::domain_error
};

enum class SlotType { idle, success, collision };

struct StageRecord {
  int stage_index = 0;  // 1-based
  std::vector<double> tau_by_network;
  SlotType slot_type = SlotType::idle;
  // (network index, node index) of the unique transmitter, if any.
  std::optional<std::pair<int, int>> successful_node;
  double stage_u_ton = 0.0;  // first TON network's realized payoff (nan if none)
  double stage_u_aon = 0.0;  // first AON network's realized payoff (nan if none)
  double avg_age_end = 0.0;  // first AON network's average age (nan if none)
};

struct NetworkState {
  NetworkKind kind = NetworkKind::ton;
  int n_nodes = 0;
  std::vector<double> node_ages;  // AON only; empty for TON

  double average_age() const;
};

// Plays one stage: computes each network's tau (AON: thresholded equilibrium
// rule on its own average age; TON: 1/n), consumes exactly one u01 draw per
// node in network-then-node order (also for tau = 0, keeping the stream
// alignment policy-independent), classifies the slot and updates ages.
StageRecord simulate_stage(std::vector<NetworkState>& states,
                           const SlotLengths& lengths, Rng& rng,
                           AgeReset age_reset, int stage_index);

// All AON ages initialized to sigma_succ; simulate_stage applied config.stages
// times. Deterministic for a fixed run_seed.
std::vector<StageRecord> simulate_run(const RunConfig& config,
                                      std::uint64_t run_seed);

// (1-alpha) * sum_{n=1..N} alpha^(n-1) * u_n over the truncated horizon.
// Throws std::domain_error unless 0 < alpha < 1.
double discounted_payoff(const std::vector<double>& stage_payoffs,
                         double alpha);

struct PayoffStat {
  double mean = 0.0;
  double se = 0.0;  // standard error of the mean across runs
};

struct MonteCarloConfig {
  RunConfig run;
  long long runs = 1;
  std::uint64_t master_seed = 1;
  int threads = 1;     // 0 selects hardware concurrency
  int trace_runs = 0;  // keep full stage records for run indices < trace_runs

  void validate() const;
};

struct RunAggregate {
  std::vector<double> alphas;
  // payoff[network][alpha_index]; mean/se of the discounted payoff.
  std::vector<std::vector<PayoffStat>> payoff;
  // Pooled over all stages of all runs.
  std::vector<double> freq_success_per_node;  // per network
  std::vector<double> freq_tau_zero;          // per network (nan for TON)
  double freq_collision = 0.0;
  long long runs = 0;
  int stages = 0;
  std::vector<std::vector<StageRecord>> traces;  // first trace_runs runs
};

RunAggregate monte_carlo(const MonteCarloConfig& config);

}  // namespace aoicoex
