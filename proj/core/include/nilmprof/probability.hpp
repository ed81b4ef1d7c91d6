#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "nilmprof/device_set.hpp"
#include "nilmprof/state_space.hpp"

namespace nilmprof {

// Per-device on-state probabilities, aligned with Device::on_states().
// The off probability is the complement 1 - sum(on_probs[d]).
struct DeviceProbabilities {
  std::vector<std::vector<double>> on_probs;

  double off_probability(std::size_t d) const;
};

// Shape and simplex checks; throws std::invalid_argument on violation.
void validate(const DeviceSet& set, const DeviceProbabilities& model);

// Every device on with probability p_hat, split equally among its on-states.
DeviceProbabilities uniform_model(const DeviceSet& set, double p_hat);

// Every per-device state (off included) equally likely: the source with
// maximal entropy ld(M).
DeviceProbabilities max_entropy_model(const DeviceSet& set);

// Probability of one configuration: product of per-device state probabilities
// (devices are independent).
double state_probability(const DeviceSet& set, const DeviceProbabilities& model,
                         const state_digits& digits);

// On-off set under a uniform model: probability of one configuration with
// exactly z of n devices on, p_hat^z * (1 - p_hat)^(n - z).
double z_state_probability(std::size_t n, double p_hat, std::size_t z);

// Aggregated power-value distribution; zero-mass values pruned, ascending.
struct PowerDistribution {
  std::vector<std::pair<watt_t, double>> masses;
  watt_t total_power = 0;

  double probability_at(watt_t power) const;  // 0 for absent values
};

// Dense convolution over the integer power axis 0..P_total, one device at a
// time: O(S * P_total). The engine of record for distributions.
PowerDistribution power_distribution(const DeviceSet& set, const DeviceProbabilities& model);

// Counting mode of the same engine (every state weighted 1): the exact
// occupation histogram, without enumerating configurations. Works for sets
// whose M overflows uint64; throws std::overflow_error past 128 bits.
OccupationHistogram occupation_by_convolution(const DeviceSet& set);

// p(0) = prod of off probabilities; (1 - p_hat)^N for uniform on-off models.
double zero_power_probability(const DeviceSet& set, const DeviceProbabilities& model);

}  // namespace nilmprof
