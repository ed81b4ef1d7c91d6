#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nilmprof/device_set.hpp"

namespace nilmprof {

// Exact occupation counts. 128 bits so that sets whose configuration count
// overflows uint64 still get exact histograms via the convolution engine.
using count_t = unsigned __int128;

std::string to_string(count_t value);

// One state digit per device, aligned with set.devices(); digit 0 is off.
// The first device varies fastest in the configuration index.
using state_digits = std::vector<std::size_t>;

state_digits digits_of_state(const DeviceSet& set, std::uint64_t k);
std::uint64_t state_of_digits(const DeviceSet& set, const state_digits& digits);

// Aggregated power of one configuration: sum of per-device state powers.
watt_t state_power(const DeviceSet& set, const state_digits& digits);

// Number of devices not in the off state.
std::size_t devices_on(const state_digits& digits);

// Number of configurations of n on-off devices with exactly z devices on:
// the binomial row C(n, 0..n). Throws std::overflow_error past uint64.
std::vector<std::uint64_t> states_by_z(std::size_t n);

// Occupied power values with their exact configuration counts, ascending.
struct OccupationHistogram {
  std::vector<std::pair<watt_t, count_t>> bins;
  count_t total_states = 0;  // sum of all counts
  watt_t total_power = 0;

  std::size_t occupied_count() const { return bins.size(); }
  count_t count_at(watt_t power) const;  // 0 for unoccupied values
};

// Mean occupation over occupied power values: c_hat = M / #occupied.
double average_occupation(const OccupationHistogram& hist);

struct EnumerationOptions {
  std::uint64_t max_states = std::uint64_t{1} << 24;
};

// Brute-force enumeration of all M configurations; the exact reference
// engine. Throws std::runtime_error when M exceeds options.max_states
// (occupation_by_convolution in probability.hpp handles larger sets).
OccupationHistogram occupation_histogram(const DeviceSet& set, EnumerationOptions options = {});

}  // namespace nilmprof
