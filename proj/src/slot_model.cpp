#include "aoicoex/slot_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace aoicoex {

SlotLengths SlotLengths::from_beta(double beta, double rate) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw std::domain_error("beta must lie in (0,1), got " +
                            std::to_string(beta));
  }
  SlotLengths lengths{beta, 1.0 + beta, 1.0 + beta, rate};
  lengths.validate();
  return lengths;
}

void SlotLengths::validate() const {
  if (!(sigma_idle > 0.0) || !(sigma_succ > 0.0) || !(sigma_col > 0.0) ||
      !(rate > 0.0)) {
    throw std::domain_error("slot lengths and rate must be positive");
  }
}

SlotProbabilities slot_probabilities(const AccessVector& taus) {
  if (taus.empty()) {
    throw std::domain_error("access vector must contain at least one node");
  }
  for (double tau : taus) {
    if (!(tau >= 0.0 && tau <= 1.0)) {  // also rejects NaN
      throw std::domain_error("access probability outside [0,1]: " +
                              std::to_string(tau));
    }
  }

  const std::size_t n = taus.size();
  SlotProbabilities probs;
  probs.p_succ_node.resize(n);
  probs.p_busy_seen_by.resize(n);

  double p_idle = 1.0;
  for (double tau : taus) p_idle *= 1.0 - tau;
  probs.p_idle = p_idle;

  // Direct per-node products; node counts stay small enough that the
  // quadratic cost is irrelevant and no division by (1 - tau) is needed.
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double p = taus[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) p *= 1.0 - taus[j];
    }
    probs.p_succ_node[i] = p;
    total += p;
  }
  probs.p_succ_total = total;
  for (std::size_t i = 0; i < n; ++i) {
    probs.p_busy_seen_by[i] = total - probs.p_succ_node[i];
  }
  probs.p_col = 1.0 - probs.p_idle - probs.p_succ_total;
  if (probs.p_col < 0.0) probs.p_col = 0.0;  // floating-point guard
  return probs;
}

}  // namespace aoicoex
