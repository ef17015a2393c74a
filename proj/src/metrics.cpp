#include "aoicoex/metrics.hpp"

#include <stdexcept>

namespace aoicoex {

namespace {

void check_index(std::size_t i, const SlotProbabilities& probs) {
  if (i >= probs.p_succ_node.size()) {
    throw std::out_of_range("node index out of range");
  }
}

}  // namespace

ThroughputPmf throughput_pmf(std::size_t i, const SlotProbabilities& probs,
                             const SlotLengths& lengths) {
  check_index(i, probs);
  return ThroughputPmf{lengths.sigma_succ * lengths.rate,
                       probs.p_succ_node[i]};
}

AgePmf age_pmf(double age_prior, std::size_t i, const SlotProbabilities& probs,
               const SlotLengths& lengths) {
  if (!(age_prior >= 0.0)) {
    throw std::domain_error("age_prior must be nonnegative");
  }
  check_index(i, probs);
  AgePmf pmf;
  pmf.age_prior = age_prior;
  pmf.outcomes[0] = {age_prior + lengths.sigma_idle, probs.p_idle};
  pmf.outcomes[1] = {age_prior + lengths.sigma_col, probs.p_col};
  pmf.outcomes[2] = {age_prior + lengths.sigma_succ, probs.p_busy_seen_by[i]};
  pmf.outcomes[3] = {lengths.sigma_succ, probs.p_succ_node[i]};
  return pmf;
}

double age_pmf_mean(const AgePmf& pmf) {
  double mean = 0.0;
  for (const AgeOutcome& outcome : pmf.outcomes) {
    mean += outcome.value * outcome.probability;
  }
  return mean;
}

double node_expected_throughput(std::size_t i, const SlotProbabilities& probs,
                                const SlotLengths& lengths) {
  check_index(i, probs);
  return probs.p_succ_node[i] * lengths.sigma_succ * lengths.rate;
}

double network_expected_throughput(const SlotProbabilities& probs,
                                   const SlotLengths& lengths,
                                   const std::vector<std::size_t>& node_set) {
  if (node_set.empty()) {
    throw std::domain_error("node set must be non-empty");
  }
  double sum = 0.0;
  for (std::size_t i : node_set) {
    sum += node_expected_throughput(i, probs, lengths);
  }
  return sum / static_cast<double>(node_set.size());
}

double node_expected_age(double age_prior, std::size_t i,
                         const SlotProbabilities& probs,
                         const SlotLengths& lengths) {
  if (!(age_prior >= 0.0)) {
    throw std::domain_error("age_prior must be nonnegative");
  }
  check_index(i, probs);
  const double drift = probs.p_idle * lengths.sigma_idle +
                       probs.p_succ_total * lengths.sigma_succ +
                       probs.p_col * lengths.sigma_col;
  return (1.0 - probs.p_succ_node[i]) * age_prior + drift;
}

double network_expected_age(const std::vector<double>& ages_prior,
                            const SlotProbabilities& probs,
                            const SlotLengths& lengths,
                            const std::vector<std::size_t>& node_set) {
  if (node_set.empty()) {
    throw std::domain_error("node set must be non-empty");
  }
  if (ages_prior.size() != node_set.size()) {
    throw std::domain_error("ages_prior and node_set sizes differ");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < node_set.size(); ++k) {
    sum += node_expected_age(ages_prior[k], node_set[k], probs, lengths);
  }
  return sum / static_cast<double>(node_set.size());
}

}  // namespace aoicoex
