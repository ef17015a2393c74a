#pragma once

#include <vector>

// Per-slot event probabilities for a set of nodes contending on a shared
// channel. A slot is idle (no transmitter), a success (exactly one), or a
// collision (two or more); the three lengths sigma_* give the slot its
// duration.

namespace aoicoex {

struct SlotLengths {
  double sigma_idle = 0.0;  // length of an idle slot
  double sigma_succ = 0.0;  // length of a slot carrying one transmission
  double sigma_col = 0.0;   // length of a collision slot
  double rate = 1.0;        // transmission rate in bits per unit time

  // Conventional geometry: sigma_idle = beta, sigma_succ = sigma_col = 1+beta.
  static SlotLengths from_beta(double beta, double rate = 1.0);

  void validate() const;  // throws std::domain_error on bad fields
};

// One access probability per node; index identifies the node.
using AccessVector = std::vector<double>;

struct SlotProbabilities {
  double p_idle = 0.0;                  // no node transmits
  std::vector<double> p_succ_node;      // node i transmits alone
  double p_succ_total = 0.0;            // some node transmits alone
  std::vector<double> p_busy_seen_by;   // some node other than i transmits alone
  double p_col = 0.0;                   // two or more nodes transmit
};

// Exact probabilities for independent per-node Bernoulli(tau_i) attempts.
// Throws std::domain_error if any entry lies outside [0,1] or the vector is
// empty.
SlotProbabilities slot_probabilities(const AccessVector& taus);

}  // namespace aoicoex
