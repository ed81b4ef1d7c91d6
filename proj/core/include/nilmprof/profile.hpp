#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "nilmprof/device_set.hpp"
#include "nilmprof/probability.hpp"

namespace nilmprof {

// Tiny seed-stable generator; profiles synthesized from the same seed are
// bit-identical on every platform, which the golden tests rely on.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }  // [0, 1)

 private:
  std::uint64_t state_;
};

// Equidistant samples of aggregated power.
struct LoadProfile {
  std::vector<watt_t> samples;  // watts per step
  double dt_seconds = 1.0;
};

double energy_ws(const LoadProfile& profile);      // sum(P) * dt, watt-seconds
double average_power(const LoadProfile& profile);  // energy / duration

struct PHatEstimate {
  double value = 0.0;
  bool clamped = false;  // raw estimate exceeded 1 and was clamped
};

// Inverts average_power = p_hat * P_total; on-off sets only.
PHatEstimate estimate_p_hat(const LoadProfile& profile, const DeviceSet& set);

// Fraction of samples a device was observed on.
double device_probability_from_runtime(std::uint64_t samples_on, std::uint64_t samples_total);

// Draw order, frozen: per sample, devices in set order, one uniform draw
// each, cumulative walk over that device's on-state probabilities, else off.
LoadProfile synthesize(const DeviceSet& set, const DeviceProbabilities& model,
                       std::size_t n_samples, std::uint64_t seed, double dt_seconds = 1.0);

// CSV with header "t_s,power_w". The time column is informational; reading
// recovers dt from the first two rows (1.0 for shorter files).
void write_profile_csv(const LoadProfile& profile, std::ostream& out);
void write_profile_csv(const LoadProfile& profile, const std::filesystem::path& path);
LoadProfile read_profile_csv(std::istream& in);
LoadProfile read_profile_csv(const std::filesystem::path& path);

}  // namespace nilmprof
