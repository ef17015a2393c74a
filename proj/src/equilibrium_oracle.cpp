#include "aoicoex/equilibrium_oracle.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace aoicoex {

StagePayoffs expected_payoffs_bruteforce(const StageGameParams& params,
                                         const StrategyProfile& profile) {
  const std::vector<double> masses = expand_distribution(profile, params);
  const int na = params.n_aon;
  const int nw = params.n_ton;
  const double si = params.lengths.sigma_idle;
  const double ss = params.lengths.sigma_succ;
  const double sc = params.lengths.sigma_col;
  const double rate = params.lengths.rate;
  const double age = params.age_state;

  double u_ton = 0.0;
  double avg_age = 0.0;
  for (std::size_t mask = 0; mask < masses.size(); ++mask) {
    const double p = masses[mask];
    if (p == 0.0) continue;
    const int transmitters = std::popcount(mask);
    double realized_age;
    if (transmitters == 0) {
      realized_age = age + si;
    } else if (transmitters >= 2) {
      realized_age = age + sc;
    } else {
      const int node = std::countr_zero(mask);
      if (node >= na) {  // unique transmitter is a TON node
        u_ton += p * ss * rate / nw;
        realized_age = age + ss;
      } else {  // unique transmitter is an AON node
        realized_age = na > 0 ? ((na - 1) * (age + ss) + ss) / na : 0.0;
      }
    }
    if (na > 0) avg_age += p * realized_age;
  }
  return StagePayoffs{u_ton, na > 0 ? -avg_age : 0.0};
}

double best_response_grid(const StageGameParams& params, double opponent_tau,
                          Player player, double grid_step) {
  if (!(grid_step > 0.0 && grid_step <= 0.01)) {
    throw std::domain_error("grid_step must lie in (0, 0.01]");
  }
  if (!(opponent_tau >= 0.0 && opponent_tau <= 1.0)) {
    throw std::domain_error("opponent_tau must lie in [0,1]");
  }
  const long long steps = std::llround(std::ceil(1.0 / grid_step));
  double best_tau = 0.0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (long long k = 0; k <= steps; ++k) {
    const double tau = std::min(1.0, k * grid_step);
    StrategyProfile profile = player == Player::aon
                                  ? StrategyProfile{tau, opponent_tau}
                                  : StrategyProfile{opponent_tau, tau};
    const StagePayoffs payoffs = stage_payoffs(params, profile);
    const double value = player == Player::aon ? payoffs.u_aon : payoffs.u_ton;
    if (value > best_value) {  // strict: ties keep the smaller tau
      best_value = value;
      best_tau = tau;
    }
    if (tau == 1.0) break;
  }
  return best_tau;
}

KktReport kkt_residuals(const StageGameParams& params, double tau_aon,
                        double tau_ton) {
  params.validate();
  StrategyProfile profile{tau_aon, tau_ton};
  profile.validate();

  KktReport report;
  if (params.n_aon >= 1) {
    report.d_age_d_tau_aon = expanded_average_age_dtau(params, profile);
    if (tau_aon > 0.0 && tau_aon < 1.0) {
      report.stationarity_aon = std::abs(report.d_age_d_tau_aon);
    } else if (tau_aon == 0.0) {
      report.aon_boundary_ok = report.d_age_d_tau_aon >= -1e-12;
    } else {
      report.aon_boundary_ok = report.d_age_d_tau_aon <= 1e-12;
    }
  }
  if (params.n_ton >= 1) {
    const double ta_pow = [&] {
      double p = 1.0;
      for (int k = 0; k < params.n_aon; ++k) p *= 1.0 - tau_aon;
      return p;
    }();
    const int nw = params.n_ton;
    double tw_pow1 = 1.0;  // (1-tau)^(nw-1)
    for (int k = 0; k < nw - 1; ++k) tw_pow1 *= 1.0 - tau_ton;
    double tw_pow2 = 1.0;  // (1-tau)^(nw-2), unused factor zeroed for nw == 1
    for (int k = 0; k < nw - 2; ++k) tw_pow2 *= 1.0 - tau_ton;
    const double scale = params.lengths.sigma_succ * params.lengths.rate;
    report.d_uton_d_tau_ton =
        ta_pow * scale *
        (tw_pow1 - (nw - 1) * tau_ton * tw_pow2);
    if (tau_ton > 0.0 && tau_ton < 1.0) {
      report.stationarity_ton = std::abs(report.d_uton_d_tau_ton);
    } else if (tau_ton == 0.0) {
      report.ton_boundary_ok = report.d_uton_d_tau_ton <= 1e-12;
    } else {
      report.ton_boundary_ok = report.d_uton_d_tau_ton >= -1e-12;
    }
  }
  return report;
}

}  // namespace aoicoex
