#include "nilmprof/device_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nilmprof {

Device::Device(std::vector<watt_t> on_states) : on_states_(std::move(on_states)) {
  if (on_states_.empty())
    throw std::invalid_argument("device needs at least one on-state");
  std::sort(on_states_.begin(), on_states_.end());
  if (on_states_.front() <= 0)
    throw std::invalid_argument("on-state power values must be positive");
  const auto dup = std::adjacent_find(on_states_.begin(), on_states_.end());
  if (dup != on_states_.end())
    throw std::invalid_argument("on-states must be strictly increasing: duplicate value " +
                                std::to_string(*dup));
}

watt_t Device::power_of_state(std::size_t s) const {
  if (s > on_states_.size())
    throw std::out_of_range("device state index " + std::to_string(s) + " out of range");
  return s == 0 ? 0 : on_states_[s - 1];
}

double Device::mean_on_power() const {
  double sum = 0.0;
  for (watt_t p : on_states_) sum += static_cast<double>(p);
  return sum / static_cast<double>(on_states_.size());
}

DeviceSet::DeviceSet(std::string name, std::vector<Device> devices)
    : name_(std::move(name)), devices_(std::move(devices)) {
  if (devices_.empty())
    throw std::invalid_argument("device set needs at least one device");
  std::stable_sort(devices_.begin(), devices_.end(),
                   [](const Device& a, const Device& b) { return a.max_power() < b.max_power(); });
}

bool DeviceSet::is_on_off() const {
  return std::all_of(devices_.begin(), devices_.end(),
                     [](const Device& d) { return d.on_state_count() == 1; });
}

watt_t total_power(const DeviceSet& set) {
  watt_t sum = 0;
  for (const Device& d : set.devices()) sum += d.max_power();
  return sum;
}

std::uint64_t state_count(const DeviceSet& set) {
  std::uint64_t m = 1;
  for (const Device& d : set.devices()) {
    const auto radix = static_cast<std::uint64_t>(d.state_count());
    if (m > std::numeric_limits<std::uint64_t>::max() / radix)
      throw std::overflow_error("configuration count exceeds the 64-bit range");
    m *= radix;
  }
  return m;
}

std::size_t power_value_count(const DeviceSet& set) {
  std::size_t s = 0;
  for (const Device& d : set.devices()) s += d.on_state_count();
  return s;
}

double average_set_power(const DeviceSet& set) {
  double sum = 0.0;
  for (const Device& d : set.devices()) sum += d.mean_on_power();
  return sum / static_cast<double>(set.device_count());
}

DeviceSet linear_set(std::size_t n, watt_t base, watt_t step) {
  if (n == 0) throw std::invalid_argument("linear_set needs n >= 1");
  if (base <= 0) throw std::invalid_argument("linear_set needs base > 0");
  if (step < 0) throw std::invalid_argument("linear_set needs step >= 0");
  std::vector<Device> devices;
  devices.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    devices.emplace_back(std::vector<watt_t>{base + static_cast<watt_t>(i) * step});
  return DeviceSet("linear", std::move(devices));
}

DeviceSet powerlaw_set(std::size_t n, double alpha, watt_t first) {
  if (n == 0) throw std::invalid_argument("powerlaw_set needs n >= 1");
  if (first <= 0) throw std::invalid_argument("powerlaw_set needs first > 0");
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("powerlaw_set needs a finite alpha > 0");
  std::vector<Device> devices;
  devices.reserve(n);
  watt_t p = first;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      const watt_t next = static_cast<watt_t>(std::llround(alpha * static_cast<double>(p)));
      if (next <= p)
        throw std::invalid_argument("powerlaw_set: alpha " + std::to_string(alpha) +
                                    " rounds to a non-increasing power value");
      p = next;
    }
    devices.emplace_back(std::vector<watt_t>{p});
  }
  return DeviceSet("powerlaw", std::move(devices));
}

}  // namespace nilmprof
