#pragma once

#include <array>
#include <cstddef>

#include "aoicoex/slot_model.hpp"

// Per-slot throughput and age-of-information random variables: PMFs,
// conditional expectations, and network averages.
//
// Age bookkeeping convention: a node's age resets to sigma_succ when that
// node transmits successfully and otherwise grows by the realized slot
// length. The expectations below follow that per-node convention; the
// simulator's state dynamics live in repeated_sim and are configurable.

namespace aoicoex {

struct ThroughputPmf {
  double success_bits = 0.0;  // sigma_succ * rate, earned with p_success
  double p_success = 0.0;     // remaining mass sits at 0 bits
};

struct AgeOutcome {
  double value = 0.0;
  double probability = 0.0;
};

// Distribution of a node's age at the end of a slot, conditioned on its age
// at the start. Outcome order: idle, collision, busy (another node
// succeeded), own success.
struct AgePmf {
  double age_prior = 0.0;
  std::array<AgeOutcome, 4> outcomes{};
};

ThroughputPmf throughput_pmf(std::size_t i, const SlotProbabilities& probs,
                             const SlotLengths& lengths);

AgePmf age_pmf(double age_prior, std::size_t i, const SlotProbabilities& probs,
               const SlotLengths& lengths);

// Mean of the AgePmf; equals node_expected_age by construction.
double age_pmf_mean(const AgePmf& pmf);

// P_succ,i * sigma_succ * rate.
double node_expected_throughput(std::size_t i, const SlotProbabilities& probs,
                                const SlotLengths& lengths);

// Arithmetic mean of node_expected_throughput over node_set (must be
// non-empty).
double network_expected_throughput(const SlotProbabilities& probs,
                                   const SlotLengths& lengths,
                                   const std::vector<std::size_t>& node_set);

// (1 - P_succ,i) * age_prior + (p_idle*sigma_idle + P_succ*sigma_succ
//  + p_col*sigma_col). Throws std::domain_error for negative age_prior.
double node_expected_age(double age_prior, std::size_t i,
                         const SlotProbabilities& probs,
                         const SlotLengths& lengths);

// Mean of node_expected_age over node_set; ages_prior[k] is the prior age of
// node node_set[k]. Sizes must match and be non-empty.
double network_expected_age(const std::vector<double>& ages_prior,
                            const SlotProbabilities& probs,
                            const SlotLengths& lengths,
                            const std::vector<std::size_t>& node_set);

}  // namespace aoicoex
