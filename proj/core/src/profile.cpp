#include "nilmprof/profile.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "nilmprof/csv_format.hpp"
#include "nilmprof/state_space.hpp"

namespace nilmprof {

namespace {

count_t sample_sum(const LoadProfile& profile) {
  count_t sum = 0;
  for (watt_t p : profile.samples) sum += static_cast<count_t>(p);
  return sum;
}

void require_samples(const LoadProfile& profile, const char* op) {
  if (profile.samples.empty())
    throw std::invalid_argument(std::string(op) + " needs a non-empty profile");
  if (!(profile.dt_seconds > 0.0))
    throw std::invalid_argument(std::string(op) + " needs dt > 0");
}

}  // namespace

double energy_ws(const LoadProfile& profile) {
  require_samples(profile, "energy_ws");
  return static_cast<double>(static_cast<long double>(sample_sum(profile))) *
         profile.dt_seconds;
}

double average_power(const LoadProfile& profile) {
  require_samples(profile, "average_power");
  return static_cast<double>(static_cast<long double>(sample_sum(profile))) /
         static_cast<double>(profile.samples.size());
}

PHatEstimate estimate_p_hat(const LoadProfile& profile, const DeviceSet& set) {
  if (!set.is_on_off())
    throw std::invalid_argument("estimate_p_hat is defined for on-off sets only");
  require_samples(profile, "estimate_p_hat");
  const double raw = average_power(profile) / static_cast<double>(total_power(set));
  if (raw > 1.0) return {1.0, true};
  return {raw, false};
}

double device_probability_from_runtime(std::uint64_t samples_on, std::uint64_t samples_total) {
  if (samples_total == 0)
    throw std::invalid_argument("device_probability_from_runtime needs samples_total >= 1");
  if (samples_on > samples_total)
    throw std::invalid_argument("samples_on exceeds samples_total");
  return static_cast<double>(samples_on) / static_cast<double>(samples_total);
}

LoadProfile synthesize(const DeviceSet& set, const DeviceProbabilities& model,
                       std::size_t n_samples, std::uint64_t seed, double dt_seconds) {
  validate(set, model);
  if (!(dt_seconds > 0.0)) throw std::invalid_argument("synthesize needs dt > 0");
  LoadProfile profile;
  profile.dt_seconds = dt_seconds;
  profile.samples.reserve(n_samples);
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < n_samples; ++i) {
    watt_t power = 0;
    for (std::size_t d = 0; d < set.device_count(); ++d) {
      const double u = rng.next_unit();
      double cumulative = 0.0;
      for (std::size_t s = 0; s < model.on_probs[d].size(); ++s) {
        cumulative += model.on_probs[d][s];
        if (u < cumulative) {
          power += set.devices()[d].on_states()[s];
          break;
        }
      }
      // u past all on-states: device stays off.
    }
    profile.samples.push_back(power);
  }
  return profile;
}

void write_profile_csv(const LoadProfile& profile, std::ostream& out) {
  out << "t_s,power_w\n";
  for (std::size_t i = 0; i < profile.samples.size(); ++i)
    out << format_real(static_cast<double>(i) * profile.dt_seconds) << ','
        << profile.samples[i] << '\n';
}

void write_profile_csv(const LoadProfile& profile, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_profile_csv(profile, out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

namespace {

double parse_time(const std::string& field, std::size_t line_no) {
  double value = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size())
    throw std::invalid_argument("line " + std::to_string(line_no) + ": bad time value '" +
                                field + "'");
  return value;
}

watt_t parse_power(const std::string& field, std::size_t line_no) {
  watt_t value = 0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size())
    throw std::invalid_argument("line " + std::to_string(line_no) +
                                ": power must be an integer, got '" + field + "'");
  if (value < 0)
    throw std::invalid_argument("line " + std::to_string(line_no) + ": power must be >= 0");
  return value;
}

}  // namespace

LoadProfile read_profile_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("profile CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t_s,power_w")
    throw std::invalid_argument("profile CSV must start with header 't_s,power_w', got '" +
                                line + "'");
  LoadProfile profile;
  std::vector<double> times;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected exactly two fields");
    times.push_back(parse_time(line.substr(0, comma), line_no));
    profile.samples.push_back(parse_power(line.substr(comma + 1), line_no));
  }
  if (times.size() >= 2) {
    const double dt = times[1] - times[0];
    if (!(dt > 0.0))
      throw std::invalid_argument("time column must be strictly increasing");
    profile.dt_seconds = dt;
  }
  return profile;
}

LoadProfile read_profile_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  return read_profile_csv(in);
}

}  // namespace nilmprof
