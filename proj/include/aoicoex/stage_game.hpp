#pragma once

#include <optional>

#include "aoicoex/slot_model.hpp"

// The one-shot stage game G between an age-optimizing network (AON, payoff
// u_aon = -average age) and a throughput-optimizing network (TON, payoff
// u_ton = average per-slot throughput), parameterized by the AON's average
// age at the start of the slot. All nodes of one network share a single
// access probability.

namespace aoicoex {

struct StageGameParams {
  int n_aon = 0;          // number of AON nodes (N_A)
  int n_ton = 0;          // number of TON nodes (N_W)
  SlotLengths lengths;
  double age_state = 0.0;  // average AON age at the stage start

  void validate() const;  // throws std::domain_error
};

struct StrategyProfile {
  double tau_aon = 0.0;
  double tau_ton = 0.0;

  void validate() const;
};

struct StagePayoffs {
  double u_ton = 0.0;  // bits per slot, >= 0
  double u_aon = 0.0;  // negative expected average age; 0 when n_aon == 0
};

struct EquilibriumResult {
  std::optional<double> tau_aon_star;  // absent when n_aon == 0
  std::optional<double> tau_ton_star;  // absent when n_ton == 0
  double age_threshold = 0.0;          // n_aon * (sigma_succ - sigma_idle)
};

// Access probabilities per node: AON nodes occupy indices [0, n_aon), TON
// nodes [n_aon, n_aon + n_ton).
AccessVector access_vector(const StageGameParams& params,
                           const StrategyProfile& profile);

// Expected stage payoffs for both networks.
StagePayoffs stage_payoffs(const StageGameParams& params,
                           const StrategyProfile& profile);

// Algebraically expanded closed form of the AON's expected average age at
// the slot end (positive quantity; stage_payoffs().u_aon is its negation).
// Kept as an independent formulation for cross-checking.
double expanded_average_age(const StageGameParams& params,
                            const StrategyProfile& profile);

// Derivative of expanded_average_age with respect to tau_aon, in the same
// expanded form (used by the KKT residual checks).
double expanded_average_age_dtau(const StageGameParams& params,
                                 const StrategyProfile& profile);

// Closed-form mixed-strategy Nash equilibrium for the sigma_succ ==
// sigma_col case: tau_ton* = 1/n_ton and the thresholded tau_aon* formula.
// Throws std::domain_error when sigma_succ != sigma_col (use
// general_msne_aon).
EquilibriumResult msne(const StageGameParams& params);

// General-case (sigma_succ != sigma_col permitted) AON equilibrium access
// probability against a fixed tau_ton in [0,1). Three-branch solution with
// thresholds
//   th0 = N_A(sigma_succ - sigma_idle)
//         - N_A N_W tau_ton (sigma_succ - sigma_col) / (1 - tau_ton)
//   th1 = N_A(sigma_succ - sigma_col)
// and interior formula above max(th0, th1).
double general_msne_aon(const StageGameParams& params, double tau_ton);

// Equilibrium rule for one AON coexisting with another AON: the same
// thresholded formula driven by the network's own node count and own age.
double aon_aon_msne(int n_self, double age_state_self,
                    const SlotLengths& lengths);

// Equilibrium rule for one TON coexisting with another TON: 1/n_self.
double ton_ton_msne(int n_self);

// Probability of every pure action profile under independent Bernoulli
// play. Index is a bitmask over nodes in access_vector order; bit set means
// the node transmits. Requires n_aon + n_ton <= 20.
std::vector<double> expand_distribution(const StrategyProfile& profile,
                                        const StageGameParams& params);

}  // namespace aoicoex
