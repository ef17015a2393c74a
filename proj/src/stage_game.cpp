#include "aoicoex/stage_game.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "aoicoex/metrics.hpp"

namespace aoicoex {

namespace {

double ipow(double base, int exp) {
  double result = 1.0;
  for (int k = 0; k < exp; ++k) result *= base;
  return result;
}

// Thresholded equilibrium access probability for an age-optimizing network
// (sigma_succ == sigma_col case): zero at or below the age threshold,
// otherwise the interior stationarity solution, clamped to [0,1].
double tau_aon_star_closed(int n, double age, const SlotLengths& lengths) {
  const double threshold = n * (lengths.sigma_succ - lengths.sigma_idle);
  if (!(age > threshold)) return 0.0;
  const double num = n * (lengths.sigma_idle - lengths.sigma_succ) + age;
  const double den = n * (lengths.sigma_idle - lengths.sigma_col + age);
  return std::clamp(num / den, 0.0, 1.0);
}

}  // namespace

void StageGameParams::validate() const {
  lengths.validate();
  if (n_aon < 0 || n_ton < 0 || n_aon + n_ton < 1) {
    throw std::domain_error("need nonnegative node counts summing to >= 1");
  }
  if (!(age_state >= 0.0)) {
    throw std::domain_error("age_state must be nonnegative");
  }
}

void StrategyProfile::validate() const {
  if (!(tau_aon >= 0.0 && tau_aon <= 1.0) ||
      !(tau_ton >= 0.0 && tau_ton <= 1.0)) {
    throw std::domain_error("strategy probabilities must lie in [0,1]");
  }
}

AccessVector access_vector(const StageGameParams& params,
                           const StrategyProfile& profile) {
  params.validate();
  profile.validate();
  AccessVector taus;
  taus.reserve(static_cast<std::size_t>(params.n_aon + params.n_ton));
  taus.insert(taus.end(), static_cast<std::size_t>(params.n_aon),
              profile.tau_aon);
  taus.insert(taus.end(), static_cast<std::size_t>(params.n_ton),
              profile.tau_ton);
  return taus;
}

StagePayoffs stage_payoffs(const StageGameParams& params,
                           const StrategyProfile& profile) {
  const AccessVector taus = access_vector(params, profile);
  const SlotProbabilities probs = slot_probabilities(taus);

  StagePayoffs payoffs;
  if (params.n_ton > 0) {
    std::vector<std::size_t> ton_set(static_cast<std::size_t>(params.n_ton));
    std::iota(ton_set.begin(), ton_set.end(),
              static_cast<std::size_t>(params.n_aon));
    payoffs.u_ton =
        network_expected_throughput(probs, params.lengths, ton_set);
  }
  if (params.n_aon > 0) {
    std::vector<std::size_t> aon_set(static_cast<std::size_t>(params.n_aon));
    std::iota(aon_set.begin(), aon_set.end(), std::size_t{0});
    const std::vector<double> priors(static_cast<std::size_t>(params.n_aon),
                                     params.age_state);
    payoffs.u_aon =
        -network_expected_age(priors, probs, params.lengths, aon_set);
  }
  return payoffs;
}

double expanded_average_age(const StageGameParams& params,
                            const StrategyProfile& profile) {
  params.validate();
  profile.validate();
  if (params.n_aon < 1) {
    throw std::domain_error("expanded_average_age needs n_aon >= 1");
  }
  const double si = params.lengths.sigma_idle;
  const double ss = params.lengths.sigma_succ;
  const double sc = params.lengths.sigma_col;
  const int na = params.n_aon;
  const int nw = params.n_ton;
  const double ta = profile.tau_aon;
  const double tw = profile.tau_ton;

  const double own_succ = ta * ipow(1.0 - ta, na - 1) * ipow(1.0 - tw, nw);
  const double idle = ipow(1.0 - ta, na) * ipow(1.0 - tw, nw);
  const double ton_succ =
      nw * tw * ipow(1.0 - tw, std::max(0, nw - 1)) * ipow(1.0 - ta, na);
  return (1.0 - own_succ) * params.age_state + idle * (si - sc) + sc +
         (na * own_succ + ton_succ) * (ss - sc);
}

double expanded_average_age_dtau(const StageGameParams& params,
                                 const StrategyProfile& profile) {
  params.validate();
  profile.validate();
  if (params.n_aon < 1) {
    throw std::domain_error("expanded_average_age_dtau needs n_aon >= 1");
  }
  const double si = params.lengths.sigma_idle;
  const double ss = params.lengths.sigma_succ;
  const double sc = params.lengths.sigma_col;
  const int na = params.n_aon;
  const int nw = params.n_ton;
  const double ta = profile.tau_aon;
  const double tw = profile.tau_ton;

  const double tw_pow = ipow(1.0 - tw, nw);
  const double ta_pow1 = ipow(1.0 - ta, na - 1);
  const double ta_pow2 = (na - 1) * ta * ipow(1.0 - ta, std::max(0, na - 2));
  return -params.age_state * tw_pow * (ta_pow1 - ta_pow2) +
         (ss - sc) * (tw_pow * (na * ta_pow1 - na * ta_pow2) -
                      na * nw * tw * ipow(1.0 - tw, std::max(0, nw - 1)) *
                          ta_pow1) -
         (si - sc) * na * tw_pow * ta_pow1;
}

EquilibriumResult msne(const StageGameParams& params) {
  params.validate();
  if (params.lengths.sigma_succ != params.lengths.sigma_col) {
    throw std::domain_error(
        "msne requires sigma_succ == sigma_col; use general_msne_aon");
  }
  EquilibriumResult result;
  result.age_threshold =
      params.n_aon * (params.lengths.sigma_succ - params.lengths.sigma_idle);
  if (params.n_ton >= 1) {
    result.tau_ton_star = 1.0 / params.n_ton;
  }
  if (params.n_aon >= 1) {
    result.tau_aon_star =
        tau_aon_star_closed(params.n_aon, params.age_state, params.lengths);
  }
  return result;
}

double general_msne_aon(const StageGameParams& params, double tau_ton) {
  params.validate();
  if (params.n_aon < 1) {
    throw std::domain_error("general_msne_aon needs n_aon >= 1");
  }
  if (!(tau_ton >= 0.0 && tau_ton < 1.0)) {
    throw std::domain_error("tau_ton must lie in [0,1)");
  }
  const double si = params.lengths.sigma_idle;
  const double ss = params.lengths.sigma_succ;
  const double sc = params.lengths.sigma_col;
  const int na = params.n_aon;
  const int nw = params.n_ton;
  const double tw = tau_ton;
  const double age = params.age_state;

  const double th0 = na * (ss - si) - na * nw * tw * (ss - sc) / (1.0 - tw);
  const double th1 = na * (ss - sc);
  const double th = std::max(th0, th1);

  if (age > th) {
    const double num =
        (1.0 - tw) * (age - na * (ss - si)) + na * nw * tw * (ss - sc);
    const double den =
        (1.0 - tw) * na * (age + (si - sc) - na * (ss - sc)) +
        na * nw * tw * (ss - sc);
    const double tau = num / den;
    if (!std::isfinite(tau)) {
      return num >= 0.0 ? 1.0 : 0.0;
    }
    return std::clamp(tau, 0.0, 1.0);
  }
  // Below the binding threshold the boundary that produced it is optimal;
  // when both coincide the conservative boundary 0 is kept.
  return th0 >= th1 ? 0.0 : 1.0;
}

double aon_aon_msne(int n_self, double age_state_self,
                    const SlotLengths& lengths) {
  lengths.validate();
  if (n_self < 1) throw std::domain_error("aon_aon_msne needs n_self >= 1");
  if (!(age_state_self >= 0.0)) {
    throw std::domain_error("age state must be nonnegative");
  }
  if (lengths.sigma_succ != lengths.sigma_col) {
    throw std::domain_error("aon_aon_msne requires sigma_succ == sigma_col");
  }
  return tau_aon_star_closed(n_self, age_state_self, lengths);
}

double ton_ton_msne(int n_self) {
  if (n_self < 1) throw std::domain_error("ton_ton_msne needs n_self >= 1");
  return 1.0 / n_self;
}

std::vector<double> expand_distribution(const StrategyProfile& profile,
                                        const StageGameParams& params) {
  const AccessVector taus = access_vector(params, profile);
  if (taus.size() > 20) {
    throw std::domain_error("profile enumeration limited to 20 nodes");
  }
  std::vector<double> masses{1.0};
  for (double tau : taus) {
    const std::size_t half = masses.size();
    masses.resize(half * 2);
    for (std::size_t mask = 0; mask < half; ++mask) {
      masses[half + mask] = masses[mask] * tau;  // this node transmits
      masses[mask] *= 1.0 - tau;
    }
  }
  return masses;
}

}  // namespace aoicoex
