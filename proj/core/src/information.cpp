#include "nilmprof/information.hpp"

#include <cmath>
#include <stdexcept>

#include "nilmprof/state_space.hpp"

namespace nilmprof {

namespace {

double entropy_term(double mass) { return mass > 0.0 ? -mass * std::log2(mass) : 0.0; }

}  // namespace

double entropy(const std::vector<double>& masses) {
  double sum = 0.0;
  double h = 0.0;
  for (double m : masses) {
    if (m < 0.0 || !std::isfinite(m))
      throw std::invalid_argument("masses must be finite and >= 0");
    sum += m;
    h += entropy_term(m);
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("masses sum to " + std::to_string(sum) + ", expected 1");
  return h;
}

double mutual_information(const PowerDistribution& dist) {
  double h = 0.0;
  for (const auto& [power, mass] : dist.masses) h += entropy_term(mass);
  return h;
}

std::vector<std::pair<watt_t, double>> entropy_terms(const PowerDistribution& dist) {
  std::vector<std::pair<watt_t, double>> terms;
  terms.reserve(dist.masses.size());
  for (const auto& [power, mass] : dist.masses) terms.emplace_back(power, entropy_term(mass));
  return terms;
}

double source_entropy(const DeviceSet& set, const DeviceProbabilities& model) {
  validate(set, model);
  double h = 0.0;
  for (std::size_t d = 0; d < set.device_count(); ++d) {
    h += entropy_term(model.off_probability(d));
    for (double p : model.on_probs[d]) h += entropy_term(p);
  }
  return h;
}

double h_of_z(std::size_t n, double p_hat, std::size_t z) {
  const double pk = z_state_probability(n, p_hat, z);
  if (pk <= 0.0) return 0.0;
  const double count = static_cast<double>(states_by_z(n)[z]);
  return count * pk * -std::log2(pk);
}

std::optional<double> proficiency(double ip_bits, double h_bits) {
  if (h_bits < 0.0 || ip_bits < 0.0)
    throw std::invalid_argument("entropies must be >= 0");
  if (h_bits == 0.0) return std::nullopt;
  const double c = ip_bits / h_bits;
  if (c > 1.0 && c < 1.0 + 1e-9) return 1.0;  // roundoff at the exact-coding boundary
  return c;
}

namespace {

// Set-level figures shared by both report flavours.
void fill_set_level(const DeviceSet& set, InfoReport& report) {
  report.set_name = set.name();
  report.n_devices = set.device_count();
  report.s_on = power_value_count(set);
  report.s_total = report.s_on + report.n_devices;
  report.m_states = state_count(set);
  report.total_power = total_power(set);
  report.average_power = average_set_power(set);

  const OccupationHistogram occ = occupation_by_convolution(set);
  const double m = static_cast<double>(static_cast<long double>(occ.total_states));
  report.h_max_bits = std::log2(m);
  // I_P_max = ld M - (1/M) sum c ld c, straight from the exact counts.
  double acc = 0.0;
  for (const auto& [power, count] : occ.bins) {
    const double c = static_cast<double>(static_cast<long double>(count));
    if (count > 1) acc += c * std::log2(c);
  }
  report.ip_max_bits = report.h_max_bits - acc / m;
  report.c_hat = average_occupation(occ);
  report.c_max = *proficiency(report.ip_max_bits, report.h_max_bits);
  report.ip_max_bound_bits = report.h_max_bits - std::log2(report.c_hat);
}

}  // namespace

InfoReport max_entropy_report(const DeviceSet& set) {
  InfoReport report;
  fill_set_level(set, report);
  report.model = "max-entropy";
  report.h_bits = report.h_max_bits;
  report.ip_bits = report.ip_max_bits;
  report.c = report.c_max;
  return report;
}

InfoReport analyze(const DeviceSet& set, const DeviceProbabilities& model,
                   std::string model_description) {
  validate(set, model);
  InfoReport report;
  fill_set_level(set, report);
  report.model = std::move(model_description);
  report.h_bits = source_entropy(set, model);
  report.ip_bits = mutual_information(power_distribution(set, model));
  report.c = proficiency(report.ip_bits, report.h_bits);
  return report;
}

std::vector<SweepRow> sweep(const DeviceSet& set, const std::vector<double>& p_hats) {
  std::vector<SweepRow> rows;
  rows.reserve(p_hats.size());
  for (double p_hat : p_hats) {
    const DeviceProbabilities model = uniform_model(set, p_hat);
    SweepRow row;
    row.p_hat = p_hat;
    row.h_bits = source_entropy(set, model);
    row.ip_bits = mutual_information(power_distribution(set, model));
    row.c = proficiency(row.ip_bits, row.h_bits);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace nilmprof
