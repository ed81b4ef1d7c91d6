#include "nilmprof/probability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nilmprof {

namespace {

constexpr double simplex_slack = 1e-12;

}  // namespace

double DeviceProbabilities::off_probability(std::size_t d) const {
  const auto& probs = on_probs.at(d);
  double sum = 0.0;
  for (double p : probs) sum += p;
  return std::max(0.0, 1.0 - sum);
}

void validate(const DeviceSet& set, const DeviceProbabilities& model) {
  if (model.on_probs.size() != set.device_count())
    throw std::invalid_argument("model has " + std::to_string(model.on_probs.size()) +
                                " devices, set has " + std::to_string(set.device_count()));
  for (std::size_t d = 0; d < set.device_count(); ++d) {
    const auto& probs = model.on_probs[d];
    if (probs.size() != set.devices()[d].on_state_count())
      throw std::invalid_argument("device " + std::to_string(d) + " has " +
                                  std::to_string(set.devices()[d].on_state_count()) +
                                  " on-states, model lists " + std::to_string(probs.size()));
    double sum = 0.0;
    for (double p : probs) {
      if (!(p >= 0.0) || !std::isfinite(p))
        throw std::invalid_argument("device " + std::to_string(d) +
                                    ": on-state probabilities must be finite and >= 0");
      sum += p;
    }
    if (sum > 1.0 + simplex_slack)
      throw std::invalid_argument("device " + std::to_string(d) +
                                  ": on-state probabilities sum to " + std::to_string(sum) +
                                  " > 1");
  }
}

DeviceProbabilities uniform_model(const DeviceSet& set, double p_hat) {
  if (!(p_hat >= 0.0 && p_hat <= 1.0))
    throw std::invalid_argument("p_hat must be in [0, 1]");
  DeviceProbabilities model;
  model.on_probs.reserve(set.device_count());
  for (const Device& d : set.devices())
    model.on_probs.emplace_back(d.on_state_count(),
                                p_hat / static_cast<double>(d.on_state_count()));
  return model;
}

DeviceProbabilities max_entropy_model(const DeviceSet& set) {
  DeviceProbabilities model;
  model.on_probs.reserve(set.device_count());
  for (const Device& d : set.devices())
    model.on_probs.emplace_back(d.on_state_count(),
                                1.0 / static_cast<double>(d.state_count()));
  return model;
}

double state_probability(const DeviceSet& set, const DeviceProbabilities& model,
                         const state_digits& digits) {
  validate(set, model);
  if (digits.size() != set.device_count())
    throw std::invalid_argument("digit count must match device count");
  double p = 1.0;
  for (std::size_t d = 0; d < digits.size(); ++d) {
    const std::size_t s = digits[d];
    if (s >= set.devices()[d].state_count())
      throw std::out_of_range("state digit out of range for device " + std::to_string(d));
    p *= (s == 0) ? model.off_probability(d) : model.on_probs[d][s - 1];
  }
  return p;
}

double z_state_probability(std::size_t n, double p_hat, std::size_t z) {
  if (z > n) throw std::invalid_argument("z must not exceed the device count");
  if (!(p_hat >= 0.0 && p_hat <= 1.0))
    throw std::invalid_argument("p_hat must be in [0, 1]");
  return std::pow(p_hat, static_cast<double>(z)) *
         std::pow(1.0 - p_hat, static_cast<double>(n - z));
}

double PowerDistribution::probability_at(watt_t power) const {
  const auto it = std::lower_bound(masses.begin(), masses.end(), power,
                                   [](const auto& m, watt_t p) { return m.first < p; });
  return (it != masses.end() && it->first == power) ? it->second : 0.0;
}

PowerDistribution power_distribution(const DeviceSet& set, const DeviceProbabilities& model) {
  validate(set, model);
  const watt_t ptot = total_power(set);
  std::vector<double> axis(static_cast<std::size_t>(ptot) + 1, 0.0);
  axis[0] = 1.0;
  watt_t reach = 0;
  for (std::size_t d = 0; d < set.device_count(); ++d) {
    const Device& dev = set.devices()[d];
    const double off = model.off_probability(d);
    // In place, top down: axis[p - P_s] is still the previous device's value
    // because P_s > 0.
    for (watt_t p = reach + dev.max_power(); p >= 0; --p) {
      double mass = (p <= reach) ? axis[static_cast<std::size_t>(p)] * off : 0.0;
      for (std::size_t s = 0; s < dev.on_state_count(); ++s) {
        const watt_t source = p - dev.on_states()[s];
        if (source >= 0 && source <= reach)
          mass += model.on_probs[d][s] * axis[static_cast<std::size_t>(source)];
      }
      axis[static_cast<std::size_t>(p)] = mass;
    }
    reach += dev.max_power();
  }

  PowerDistribution dist;
  dist.total_power = ptot;
  double sum = 0.0;
  for (watt_t p = 0; p <= ptot; ++p) {
    const double mass = axis[static_cast<std::size_t>(p)];
    if (mass > 0.0) {
      dist.masses.emplace_back(p, mass);
      sum += mass;
    }
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::runtime_error("power distribution mass " + std::to_string(sum) +
                             " is not normalized");
  return dist;
}

OccupationHistogram occupation_by_convolution(const DeviceSet& set) {
  const watt_t ptot = total_power(set);
  std::vector<count_t> axis(static_cast<std::size_t>(ptot) + 1, 0);
  axis[0] = 1;
  watt_t reach = 0;
  for (const Device& dev : set.devices()) {
    for (watt_t p = reach + dev.max_power(); p >= 0; --p) {
      count_t count = (p <= reach) ? axis[static_cast<std::size_t>(p)] : 0;
      for (watt_t value : dev.on_states()) {
        const watt_t source = p - value;
        if (source >= 0 && source <= reach) {
          const count_t before = count;
          count += axis[static_cast<std::size_t>(source)];
          if (count < before)
            throw std::overflow_error("occupation count exceeds the 128-bit range");
        }
      }
      axis[static_cast<std::size_t>(p)] = count;
    }
    reach += dev.max_power();
  }

  OccupationHistogram hist;
  hist.total_power = ptot;
  for (watt_t p = 0; p <= ptot; ++p) {
    const count_t count = axis[static_cast<std::size_t>(p)];
    if (count > 0) {
      hist.bins.emplace_back(p, count);
      const count_t before = hist.total_states;
      hist.total_states += count;
      if (hist.total_states < before)
        throw std::overflow_error("configuration count exceeds the 128-bit range");
    }
  }
  return hist;
}

double zero_power_probability(const DeviceSet& set, const DeviceProbabilities& model) {
  validate(set, model);
  double p = 1.0;
  for (std::size_t d = 0; d < set.device_count(); ++d) p *= model.off_probability(d);
  return p;
}

}  // namespace nilmprof
