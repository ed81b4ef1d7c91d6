#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nilmprof {

// Power values are integer watts; any sum over a whole set fits int64.
using watt_t = std::int64_t;

// One appliance: its strictly increasing on-state power values.
// State 0 is the implicit off state (0 W); on-states are numbered 1..s.
class Device {
 public:
  explicit Device(std::vector<watt_t> on_states);

  const std::vector<watt_t>& on_states() const { return on_states_; }
  std::size_t on_state_count() const { return on_states_.size(); }
  std::size_t state_count() const { return on_states_.size() + 1; }
  watt_t max_power() const { return on_states_.back(); }
  watt_t power_of_state(std::size_t s) const;  // s = 0 -> 0 W
  double mean_on_power() const;

  friend bool operator==(const Device&, const Device&) = default;

 private:
  std::vector<watt_t> on_states_;
};

// A named collection of devices, kept ordered by maximal on-state power
// (stable: input order breaks ties).
class DeviceSet {
 public:
  DeviceSet(std::string name, std::vector<Device> devices);

  const std::string& name() const { return name_; }
  const std::vector<Device>& devices() const { return devices_; }
  std::size_t device_count() const { return devices_.size(); }
  bool is_on_off() const;  // every device has exactly one on-state

  friend bool operator==(const DeviceSet&, const DeviceSet&) = default;

 private:
  std::string name_;
  std::vector<Device> devices_;
};

// Sum of per-device maximal powers: the all-on aggregated value.
watt_t total_power(const DeviceSet& set);

// Number of device-state configurations M = prod(s_d + 1).
// Throws std::overflow_error when M exceeds the 64-bit range; the
// convolution engine still handles such sets (see probability.hpp).
std::uint64_t state_count(const DeviceSet& set);

// Number of distinct per-device on-states S = sum(s_d), off not counted.
std::size_t power_value_count(const DeviceSet& set);

// Mean over devices of their mean on-state power.
double average_set_power(const DeviceSet& set);

// n on-off devices with powers base, base+step, ..., base+(n-1)*step.
DeviceSet linear_set(std::size_t n, watt_t base, watt_t step);

// n on-off devices, each power the previous scaled by alpha and rounded
// half away from zero; throws if rounding fails to increase a value.
DeviceSet powerlaw_set(std::size_t n, double alpha, watt_t first);

}  // namespace nilmprof
