#include "nilmprof/state_space.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace nilmprof {

std::string to_string(count_t value) {
  if (value == 0) return "0";
  std::string out;
  while (value > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

state_digits digits_of_state(const DeviceSet& set, std::uint64_t k) {
  state_digits digits(set.device_count());
  for (std::size_t d = 0; d < set.device_count(); ++d) {
    const auto radix = static_cast<std::uint64_t>(set.devices()[d].state_count());
    digits[d] = static_cast<std::size_t>(k % radix);
    k /= radix;
  }
  if (k != 0)
    throw std::out_of_range("configuration index out of range");
  return digits;
}

std::uint64_t state_of_digits(const DeviceSet& set, const state_digits& digits) {
  if (digits.size() != set.device_count())
    throw std::invalid_argument("digit count must match device count");
  std::uint64_t k = 0;
  for (std::size_t d = set.device_count(); d-- > 0;) {
    const auto radix = static_cast<std::uint64_t>(set.devices()[d].state_count());
    if (digits[d] >= radix)
      throw std::out_of_range("state digit out of range for device " + std::to_string(d));
    k = k * radix + digits[d];
  }
  return k;
}

watt_t state_power(const DeviceSet& set, const state_digits& digits) {
  if (digits.size() != set.device_count())
    throw std::invalid_argument("digit count must match device count");
  watt_t p = 0;
  for (std::size_t d = 0; d < digits.size(); ++d)
    p += set.devices()[d].power_of_state(digits[d]);
  return p;
}

std::size_t devices_on(const state_digits& digits) {
  return static_cast<std::size_t>(
      std::count_if(digits.begin(), digits.end(), [](std::size_t s) { return s != 0; }));
}

std::vector<std::uint64_t> states_by_z(std::size_t n) {
  std::vector<std::uint64_t> row(n + 1);
  row[0] = 1;
  for (std::size_t z = 0; z < n; ++z) {
    // C(n, z+1) = C(n, z) * (n - z) / (z + 1); the division is exact.
    const count_t next = static_cast<count_t>(row[z]) * (n - z) / (z + 1);
    if (next > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("binomial coefficient exceeds the 64-bit range");
    row[z + 1] = static_cast<std::uint64_t>(next);
  }
  return row;
}

count_t OccupationHistogram::count_at(watt_t power) const {
  const auto it = std::lower_bound(bins.begin(), bins.end(), power,
                                   [](const auto& bin, watt_t p) { return bin.first < p; });
  return (it != bins.end() && it->first == power) ? it->second : 0;
}

double average_occupation(const OccupationHistogram& hist) {
  if (hist.bins.empty())
    throw std::invalid_argument("average_occupation of an empty histogram");
  return static_cast<double>(static_cast<long double>(hist.total_states) /
                             static_cast<long double>(hist.bins.size()));
}

OccupationHistogram occupation_histogram(const DeviceSet& set, EnumerationOptions options) {
  const std::uint64_t m = state_count(set);
  if (m > options.max_states)
    throw std::runtime_error("state space too large to enumerate (" + std::to_string(m) +
                             " configurations, cap " + std::to_string(options.max_states) +
                             "); use the convolution engine");
  const watt_t ptot = total_power(set);

  OccupationHistogram hist;
  hist.total_power = ptot;
  hist.total_states = m;

  // Odometer walk over all configurations with a running power sum.
  const auto visit_all = [&](auto&& record) {
    state_digits digits(set.device_count(), 0);
    watt_t power = 0;
    for (std::uint64_t k = 0;;) {
      record(power);
      if (++k == m) break;
      for (std::size_t d = 0;; ++d) {
        const Device& dev = set.devices()[d];
        power -= dev.power_of_state(digits[d]);
        if (++digits[d] < dev.state_count()) {
          power += dev.power_of_state(digits[d]);
          break;
        }
        digits[d] = 0;  // carry; off contributes 0 W
      }
    }
  };

  // Dense axis when affordable, hash map for sparse/huge power ranges.
  constexpr watt_t dense_limit = watt_t{1} << 22;
  if (ptot <= dense_limit) {
    std::vector<count_t> axis(static_cast<std::size_t>(ptot) + 1, 0);
    visit_all([&](watt_t p) { ++axis[static_cast<std::size_t>(p)]; });
    for (watt_t p = 0; p <= ptot; ++p)
      if (axis[static_cast<std::size_t>(p)] > 0)
        hist.bins.emplace_back(p, axis[static_cast<std::size_t>(p)]);
  } else {
    std::unordered_map<watt_t, count_t> axis;
    visit_all([&](watt_t p) { ++axis[p]; });
    hist.bins.assign(axis.begin(), axis.end());
    std::sort(hist.bins.begin(), hist.bins.end());
  }
  return hist;
}

}  // namespace nilmprof
