#pragma once

#include "aoicoex/stage_game.hpp"

// Independent numerical verification of the closed forms: brute-force
// expectation by pure-profile enumeration, best-response grid search, and
// KKT residuals. These exist so every closed-form result is validated by a
// second route before it is trusted.

namespace aoicoex {

enum class Player { aon, ton };

// Expected stage payoffs by enumerating all 2^(n_aon+n_ton) pure profiles
// (requires n_aon + n_ton <= 20). Realized bookkeeping per profile:
//   - unique TON transmitter: u_ton = sigma_succ*rate/n_ton, ages grow
//   - unique AON transmitter i: average AON age becomes
//     ((n_aon-1)(age+sigma_succ) + sigma_succ)/n_aon
//   - idle / collision: ages grow by the slot length
StagePayoffs expected_payoffs_bruteforce(const StageGameParams& params,
                                         const StrategyProfile& profile);

// Argmax of the player's stage payoff over tau in {0, h, 2h, ..., 1}; ties
// break toward smaller tau. grid_step must lie in (0, 0.01].
double best_response_grid(const StageGameParams& params, double opponent_tau,
                          Player player, double grid_step);

struct KktReport {
  // d(expected average AON age)/d tau_aon at the candidate point (the AON
  // minimizes this objective).
  double d_age_d_tau_aon = 0.0;
  // d(u_ton)/d tau_ton (the TON maximizes u_ton).
  double d_uton_d_tau_ton = 0.0;
  // |derivative| when the candidate tau is interior, 0 at boundaries.
  double stationarity_aon = 0.0;
  double stationarity_ton = 0.0;
  // Sign conditions at boundary candidates (vacuously true when interior):
  // tau_aon = 0 needs d_age >= 0, tau_aon = 1 needs d_age <= 0; tau_ton = 0
  // needs d_uton <= 0, tau_ton = 1 needs d_uton >= 0.
  bool aon_boundary_ok = true;
  bool ton_boundary_ok = true;
};

KktReport kkt_residuals(const StageGameParams& params, double tau_aon,
                        double tau_ton);

}  // namespace aoicoex
