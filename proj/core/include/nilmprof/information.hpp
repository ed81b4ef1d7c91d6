#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilmprof/device_set.hpp"
#include "nilmprof/probability.hpp"

namespace nilmprof {

// Shannon entropy in bits; zero masses are skipped. The masses must form a
// distribution (non-negative, summing to 1 within 1e-9).
double entropy(const std::vector<double>& masses);

// Entropy in bits of the aggregated power-value distribution. The power
// value is a function of the configuration, so this equals the mutual
// information between configuration and power value.
double mutual_information(const PowerDistribution& dist);

// Per-power-value terms -p ld p; they sum to mutual_information.
std::vector<std::pair<watt_t, double>> entropy_terms(const PowerDistribution& dist);

// Source entropy of independent devices: sum of per-device state entropies.
double source_entropy(const DeviceSet& set, const DeviceProbabilities& model);

// Entropy contribution of all configurations with exactly z of n on-off
// devices on under a uniform model: C(n,z) * p(z) * (-ld p(z)).
double h_of_z(std::size_t n, double p_hat, std::size_t z);

// C = I_P / H; empty when H = 0 (a source with no information). Roundoff
// at the C = 1 boundary is clamped.
std::optional<double> proficiency(double ip_bits, double h_bits);

struct InfoReport {
  std::string set_name;
  std::string model;
  std::size_t n_devices = 0;
  std::size_t s_on = 0;     // on-states only
  std::size_t s_total = 0;  // on-states plus one off state per device
  std::uint64_t m_states = 0;
  watt_t total_power = 0;
  double average_power = 0.0;
  double h_bits = 0.0;
  double h_max_bits = 0.0;
  double ip_bits = 0.0;
  double ip_max_bits = 0.0;
  std::optional<double> c;  // empty when H = 0
  double c_max = 0.0;
  double c_hat = 0.0;
  double ip_max_bound_bits = 0.0;  // h_max - ld(c_hat), an upper bound on ip_max
};

// Report under the maximum-entropy source: H = H_max = ld(M) and
// I_P = I_P_max, computed from the exact occupation counts.
InfoReport max_entropy_report(const DeviceSet& set);

// Report for an arbitrary device-probability model; the *_max fields and
// c_hat describe the set and do not depend on the model.
InfoReport analyze(const DeviceSet& set, const DeviceProbabilities& model,
                   std::string model_description);

struct SweepRow {
  double p_hat = 0.0;
  double h_bits = 0.0;
  double ip_bits = 0.0;
  std::optional<double> c;
};

// Uniform-model sweep over the given p_hat grid.
std::vector<SweepRow> sweep(const DeviceSet& set, const std::vector<double>& p_hats);

}  // namespace nilmprof
