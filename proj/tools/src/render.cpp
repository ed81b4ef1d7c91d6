#include "render.hpp"

#include <iomanip>
#include <limits>
#include <string>

#include <json.hpp>

#include "nilmprof/catalog.hpp"
#include "nilmprof/csv_format.hpp"

namespace nilmprof::cli {

namespace {

using nlohmann::json;

// Counts that fit 64 bits stay JSON numbers; wider ones become strings.
json json_count(count_t count) {
  if (count <= std::numeric_limits<std::uint64_t>::max())
    return static_cast<std::uint64_t>(count);
  return to_string(count);
}

json set_json(const DeviceSet& set) {
  json devices = json::array();
  for (const Device& d : set.devices()) devices.push_back(d.on_states());
  return json{{"name", set.name()},
              {"devices", devices},
              {"device_count", set.device_count()},
              {"on_states", power_value_count(set)},
              {"states_with_off", power_value_count(set) + set.device_count()},
              {"configurations", state_count(set)},
              {"total_power_w", total_power(set)},
              {"average_power_w", average_set_power(set)}};
}

}  // namespace

void render_list(std::ostream& out, Format format) {
  if (format == Format::json) {
    json rows = json::array();
    for (const CatalogEntry& entry : catalog())
      rows.push_back({{"key", entry.key},
                      {"title", entry.title},
                      {"provenance", entry.provenance},
                      {"devices", entry.set.device_count()},
                      {"on_states", power_value_count(entry.set)},
                      {"configurations", state_count(entry.set)},
                      {"total_power_w", total_power(entry.set)}});
    out << rows.dump(2) << '\n';
    return;
  }
  out << std::left << std::setw(9) << "key" << std::setw(9) << "devices"
      << std::setw(11) << "on_states" << std::setw(16) << "configurations"
      << std::setw(15) << "total_power_w" << "title\n";
  for (const CatalogEntry& entry : catalog())
    out << std::left << std::setw(9) << entry.key << std::setw(9)
        << entry.set.device_count() << std::setw(11)
        << power_value_count(entry.set) << std::setw(16)
        << state_count(entry.set) << std::setw(15) << total_power(entry.set)
        << entry.title << '\n';
}

void render_info(std::ostream& out, const DeviceSet& set, Format format) {
  if (format == Format::json) {
    out << set_json(set).dump(2) << '\n';
    return;
  }
  out << "set: " << set.name() << '\n'
      << "devices: " << set.device_count() << '\n'
      << "on_states: " << power_value_count(set) << '\n'
      << "states_with_off: " << power_value_count(set) + set.device_count() << '\n'
      << "configurations: " << state_count(set) << '\n'
      << "total_power_w: " << total_power(set) << '\n'
      << "average_power_w: " << format_real(average_set_power(set)) << '\n'
      << "device_powers_w:";
  for (const Device& d : set.devices()) {
    out << " [";
    for (std::size_t s = 0; s < d.on_state_count(); ++s) {
      if (s > 0) out << ' ';
      out << d.on_states()[s];
    }
    out << ']';
  }
  out << '\n';
}

void render_report(std::ostream& out, const InfoReport& report, Format format) {
  if (format == Format::json) {
    json doc{{"set", report.set_name},
             {"model", report.model},
             {"devices", report.n_devices},
             {"on_states", report.s_on},
             {"states_with_off", report.s_total},
             {"configurations", report.m_states},
             {"total_power_w", report.total_power},
             {"average_power_w", report.average_power},
             {"h_bits", report.h_bits},
             {"h_max_bits", report.h_max_bits},
             {"ip_bits", report.ip_bits},
             {"ip_max_bits", report.ip_max_bits},
             {"c_max", report.c_max},
             {"c_hat", report.c_hat},
             {"ip_max_bound_bits", report.ip_max_bound_bits}};
    if (report.c) {
      doc["c"] = *report.c;
    } else {
      doc["c"] = nullptr;
      doc["c_note"] = "undefined at H=0";
    }
    out << doc.dump(2) << '\n';
    return;
  }
  out << "set: " << report.set_name << '\n'
      << "model: " << report.model << '\n'
      << "devices: " << report.n_devices << '\n'
      << "on_states: " << report.s_on << '\n'
      << "states_with_off: " << report.s_total << '\n'
      << "configurations: " << report.m_states << '\n'
      << "total_power_w: " << report.total_power << '\n'
      << "average_power_w: " << format_real(report.average_power) << '\n'
      << "h_bits: " << format_real(report.h_bits) << '\n'
      << "h_max_bits: " << format_real(report.h_max_bits) << '\n'
      << "ip_bits: " << format_real(report.ip_bits) << '\n'
      << "ip_max_bits: " << format_real(report.ip_max_bits) << '\n'
      << "c: " << (report.c ? format_real(*report.c) : "undefined at H=0") << '\n'
      << "c_max: " << format_real(report.c_max) << '\n'
      << "c_hat: " << format_real(report.c_hat) << '\n'
      << "ip_max_bound_bits: " << format_real(report.ip_max_bound_bits) << '\n';
}

void render_occupation(std::ostream& out, const OccupationHistogram& hist, Format format) {
  const auto probability = [&](count_t count) {
    return static_cast<double>(static_cast<long double>(count) /
                               static_cast<long double>(hist.total_states));
  };
  if (format == Format::json) {
    json bins = json::array();
    for (const auto& [power, count] : hist.bins)
      bins.push_back({{"power_w", power},
                      {"count", json_count(count)},
                      {"probability", probability(count)}});
    json doc{{"total_power_w", hist.total_power},
             {"configurations", json_count(hist.total_states)},
             {"occupied", hist.occupied_count()},
             {"bins", bins}};
    out << doc.dump(2) << '\n';
    return;
  }
  out << "power_w,count,probability\n";
  for (const auto& [power, count] : hist.bins)
    out << power << ',' << to_string(count) << ','
        << format_real(probability(count)) << '\n';
}

void render_sweep(std::ostream& out, const std::vector<SweepRow>& rows, Format format) {
  if (format == Format::json) {
    json doc = json::array();
    for (const SweepRow& row : rows) {
      json entry{{"p_hat", row.p_hat},
                 {"h_bits", row.h_bits},
                 {"ip_bits", row.ip_bits}};
      entry["c"] = row.c ? json(*row.c) : json(nullptr);
      doc.push_back(entry);
    }
    out << doc.dump(2) << '\n';
    return;
  }
  out << "p_hat,H_bits,IP_bits,C\n";
  for (const SweepRow& row : rows)
    out << format_real(row.p_hat) << ',' << format_real(row.h_bits) << ','
        << format_real(row.ip_bits) << ','
        << (row.c ? format_real(*row.c) : "nan") << '\n';
}

}  // namespace nilmprof::cli
