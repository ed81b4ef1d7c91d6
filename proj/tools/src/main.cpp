#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilmprof/catalog.hpp"
#include "nilmprof/csv_format.hpp"
#include "nilmprof/device_set_io.hpp"
#include "nilmprof/information.hpp"
#include "nilmprof/probability.hpp"
#include "nilmprof/profile.hpp"
#include "nilmprof/state_space.hpp"

#include "golden_tables.hpp"
#include "render.hpp"

namespace {

using namespace nilmprof;
using cli::Format;

Format format_or(const std::string& name, Format fallback) {
  if (name.empty()) return fallback;
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  return Format::csv;
}

DeviceSet resolve_set(const std::string& selector) {
  if (has_catalog_key(selector)) return catalog_set(selector);
  if (std::filesystem::exists(selector)) return load_device_set(selector);
  std::string keys;
  for (const CatalogEntry& entry : catalog()) {
    if (!keys.empty()) keys += ", ";
    keys += entry.key;
  }
  throw std::invalid_argument("'" + selector +
                              "' is neither a catalog key nor an existing file; "
                              "catalog keys: " + keys);
}

// Mutually exclusive model selectors; the default is the max-entropy model.
struct ModelFlags {
  double p_hat = 0.0;
  std::string model_path;
  bool max_entropy = false;
  CLI::Option* p_hat_opt = nullptr;

  bool p_hat_given() const { return p_hat_opt != nullptr && p_hat_opt->count() > 0; }
  bool wants_max_entropy() const { return model_path.empty() && !p_hat_given(); }
};

void add_model_flags(CLI::App* sub, ModelFlags& flags) {
  auto* p = sub->add_option("--p-hat", flags.p_hat,
                            "Uniform model: every device on with this probability");
  auto* m = sub->add_option(
      "--model", flags.model_path,
      "JSON model file ({\"p_hat\": x} or {\"per_device\": [[...], ...]})");
  auto* e = sub->add_flag("--max-entropy", flags.max_entropy,
                          "All per-device states equally likely (default)");
  p->excludes(m)->excludes(e);
  m->excludes(e);
  flags.p_hat_opt = p;
}

std::pair<DeviceProbabilities, std::string> resolve_model(const DeviceSet& set,
                                                          const ModelFlags& flags) {
  if (!flags.model_path.empty()) {
    LoadedModel loaded = load_model(flags.model_path, set);
    return {std::move(loaded.probabilities), std::move(loaded.description)};
  }
  if (flags.p_hat_given())
    return {uniform_model(set, flags.p_hat),
            "uniform(p_hat=" + format_real(flags.p_hat) + ")"};
  return {max_entropy_model(set), "max-entropy"};
}

double parse_grid_field(std::string_view text, const char* what) {
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw std::invalid_argument(std::string("grid: bad ") + what + " '" +
                                std::string(text) + "'");
  return value;
}

std::vector<double> parse_grid(const std::string& spec) {
  const std::string_view view(spec);
  const auto first = view.find(':');
  const auto second = first == std::string_view::npos ? first : view.find(':', first + 1);
  if (second == std::string_view::npos || view.find(':', second + 1) != std::string_view::npos)
    throw std::invalid_argument("grid must be start:stop:step, e.g. 0.05:0.95:0.05");
  const double start = parse_grid_field(view.substr(0, first), "start");
  const double stop = parse_grid_field(view.substr(first + 1, second - first - 1), "stop");
  const double step = parse_grid_field(view.substr(second + 1), "step");
  if (!(step > 0.0) || !(start >= 0.0) || !(stop <= 1.0) || !(start <= stop))
    throw std::invalid_argument("grid needs 0 <= start <= stop <= 1 and step > 0");
  std::vector<double> grid;
  for (std::size_t i = 0;; ++i) {
    const double value = start + static_cast<double>(i) * step;
    if (value > stop + 1e-9) break;
    grid.push_back(std::min(value, stop));
    if (grid.size() > 1000000) throw std::invalid_argument("grid too fine (over 1e6 points)");
  }
  return grid;
}

template <typename Fn>
void with_output(const std::string& out_path, Fn&& fn) {
  if (out_path.empty()) {
    fn(std::cout);
    std::cout.flush();
    if (!std::cout) throw std::runtime_error("failed writing to standard output");
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
  fn(out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + out_path);
}

void render_profile_stats(std::ostream& out, const LoadProfile& profile,
                          const std::optional<PHatEstimate>& estimate, Format format) {
  const double duration =
      profile.dt_seconds * static_cast<double>(profile.samples.size());
  if (format == Format::json) {
    nlohmann::json doc{{"samples", profile.samples.size()},
                       {"dt_s", profile.dt_seconds},
                       {"duration_s", duration},
                       {"energy_ws", energy_ws(profile)},
                       {"average_power_w", average_power(profile)}};
    if (estimate) {
      doc["p_hat"] = estimate->value;
      doc["p_hat_clamped"] = estimate->clamped;
    }
    out << doc.dump(2) << '\n';
    return;
  }
  out << "samples: " << profile.samples.size() << '\n'
      << "dt_s: " << format_real(profile.dt_seconds) << '\n'
      << "duration_s: " << format_real(duration) << '\n'
      << "energy_ws: " << format_real(energy_ws(profile)) << '\n'
      << "average_power_w: " << format_real(average_power(profile)) << '\n';
  if (estimate)
    out << "p_hat: " << format_real(estimate->value) << '\n'
        << "p_hat_clamped: " << (estimate->clamped ? "true" : "false") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information-coding analysis of appliance device sets"};
  app.require_subcommand(1);

  std::string set_selector;
  std::string out_path;
  std::string format_name;
  std::string grid_spec = "0.05:0.95:0.05";
  std::uint64_t seed = 0;
  std::uint64_t n_samples = 100000;
  double dt = 1.0;
  std::string profile_path;
  ModelFlags analyze_model;
  ModelFlags synth_model;

  const auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Write output to this file instead of stdout");
  };
  const auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember(std::move(allowed)));
  };
  const auto add_set = [&](CLI::App* sub) {
    sub->add_option("--set", set_selector, "Catalog key or device-set JSON file")
        ->required();
  };

  CLI::App* list_cmd = app.add_subcommand("list", "List the embedded device-set catalog");
  add_format(list_cmd, {"text", "json"});
  add_out(list_cmd);

  CLI::App* info_cmd = app.add_subcommand("info", "Show one device set");
  add_set(info_cmd);
  add_format(info_cmd, {"text", "json"});
  add_out(info_cmd);

  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "Information report for a set under a model");
  add_set(analyze_cmd);
  add_model_flags(analyze_cmd, analyze_model);
  add_format(analyze_cmd, {"text", "json"});
  add_out(analyze_cmd);

  CLI::App* occupation_cmd =
      app.add_subcommand("occupation", "Occupation histogram over the power axis");
  add_set(occupation_cmd);
  add_format(occupation_cmd, {"csv", "json"});
  add_out(occupation_cmd);

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Uniform-model sweep over a p-hat grid");
  add_set(sweep_cmd);
  sweep_cmd->add_option("--grid", grid_spec,
                        "start:stop:step, inclusive (default 0.05:0.95:0.05)");
  add_format(sweep_cmd, {"csv", "json"});
  add_out(sweep_cmd);

  CLI::App* synth_cmd =
      app.add_subcommand("synth", "Synthesize a load profile (CSV t_s,power_w)");
  add_set(synth_cmd);
  add_model_flags(synth_cmd, synth_model);
  synth_cmd->add_option("--n", n_samples, "Number of samples (default 100000)")
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--seed", seed, "RNG seed (default 0)");
  synth_cmd->add_option("--dt", dt, "Sample spacing in seconds (default 1)");
  add_out(synth_cmd);

  CLI::App* stats_cmd =
      app.add_subcommand("profile-stats", "Summarize a load-profile CSV");
  CLI::Option* stats_profile =
      stats_cmd->add_option("profile", profile_path, "Profile CSV path");
  stats_profile->required();
  CLI::Option* stats_set = stats_cmd->add_option(
      "--set", set_selector, "On-off set used to estimate p-hat from the mean power");
  add_format(stats_cmd, {"text", "json"});
  add_out(stats_cmd);

  CLI::App* tables_cmd = app.add_subcommand(
      "tables", "Recompute the published summary tables and diff them");
  add_out(tables_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (list_cmd->parsed()) {
      const Format format = format_or(format_name, Format::text);
      with_output(out_path, [&](std::ostream& out) { cli::render_list(out, format); });
    } else if (info_cmd->parsed()) {
      const DeviceSet set = resolve_set(set_selector);
      const Format format = format_or(format_name, Format::text);
      with_output(out_path,
                  [&](std::ostream& out) { cli::render_info(out, set, format); });
    } else if (analyze_cmd->parsed()) {
      const DeviceSet set = resolve_set(set_selector);
      InfoReport report;
      if (analyze_model.wants_max_entropy()) {
        report = max_entropy_report(set);
      } else {
        auto [model, description] = resolve_model(set, analyze_model);
        report = analyze(set, model, description);
      }
      const Format format = format_or(format_name, Format::text);
      with_output(out_path,
                  [&](std::ostream& out) { cli::render_report(out, report, format); });
    } else if (occupation_cmd->parsed()) {
      const DeviceSet set = resolve_set(set_selector);
      const OccupationHistogram hist = occupation_by_convolution(set);
      const Format format = format_or(format_name, Format::csv);
      with_output(out_path,
                  [&](std::ostream& out) { cli::render_occupation(out, hist, format); });
    } else if (sweep_cmd->parsed()) {
      const DeviceSet set = resolve_set(set_selector);
      const std::vector<SweepRow> rows = nilmprof::sweep(set, parse_grid(grid_spec));
      const Format format = format_or(format_name, Format::csv);
      with_output(out_path,
                  [&](std::ostream& out) { cli::render_sweep(out, rows, format); });
    } else if (synth_cmd->parsed()) {
      const DeviceSet set = resolve_set(set_selector);
      auto [model, description] = resolve_model(set, synth_model);
      const LoadProfile profile = synthesize(set, model, n_samples, seed, dt);
      with_output(out_path,
                  [&](std::ostream& out) { write_profile_csv(profile, out); });
    } else if (stats_cmd->parsed()) {
      const LoadProfile profile = read_profile_csv(std::filesystem::path(profile_path));
      std::optional<PHatEstimate> estimate;
      if (stats_set->count() > 0) {
        const DeviceSet set = resolve_set(set_selector);
        estimate = estimate_p_hat(profile, set);
        if (estimate->clamped)
          std::cerr << "warning: raw p-hat estimate exceeded 1 and was clamped\n";
      }
      const Format format = format_or(format_name, Format::text);
      with_output(out_path, [&](std::ostream& out) {
        render_profile_stats(out, profile, estimate, format);
      });
    } else if (tables_cmd->parsed()) {
      int failures = 0;
      with_output(out_path,
                  [&](std::ostream& out) { failures = cli::run_tables(out); });
      if (failures > 0) {
        std::cerr << "error: " << failures << " table cells out of tolerance\n";
        return 3;
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
