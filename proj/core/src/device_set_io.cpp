#include "nilmprof/device_set_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "nilmprof/csv_format.hpp"

namespace nilmprof {

namespace {

using nlohmann::json;

watt_t power_value(const json& value, std::size_t device_index) {
  const std::string where = "device " + std::to_string(device_index);
  if (!value.is_number_integer())
    throw std::invalid_argument(where + ": power values must be integers");
  if (value.is_number_unsigned() &&
      value.get<std::uint64_t>() >
          static_cast<std::uint64_t>(std::numeric_limits<watt_t>::max()))
    throw std::invalid_argument(where + ": power value out of range");
  return value.get<watt_t>();
}

}  // namespace

DeviceSet device_set_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw std::invalid_argument("device set file must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (key != "name" && key != "devices")
      throw std::invalid_argument("unknown field '" + key + "'");
  if (!doc.contains("name") || !doc["name"].is_string())
    throw std::invalid_argument("missing string field 'name'");
  if (!doc.contains("devices") || !doc["devices"].is_array())
    throw std::invalid_argument("missing array field 'devices'");

  std::vector<Device> devices;
  devices.reserve(doc["devices"].size());
  for (std::size_t d = 0; d < doc["devices"].size(); ++d) {
    const json& entry = doc["devices"][d];
    if (!entry.is_array())
      throw std::invalid_argument("device " + std::to_string(d) +
                                  " must be an array of power values");
    std::vector<watt_t> values;
    values.reserve(entry.size());
    for (const json& value : entry) values.push_back(power_value(value, d));
    devices.emplace_back(std::move(values));  // sorts and validates
  }
  return DeviceSet(doc["name"].get<std::string>(), std::move(devices));
}

std::string device_set_to_json(const DeviceSet& set) {
  json doc;
  doc["name"] = set.name();
  json devices = json::array();
  for (const Device& d : set.devices()) devices.push_back(d.on_states());
  doc["devices"] = devices;
  return doc.dump(2) + "\n";
}

DeviceSet load_device_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return device_set_from_json(buffer.str());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

void save_device_set(const DeviceSet& set, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << device_set_to_json(set);
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

LoadedModel model_from_json(const std::string& text, const DeviceSet& set) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw std::invalid_argument("model file must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (key != "p_hat" && key != "per_device")
      throw std::invalid_argument("unknown field '" + key + "'");
  const bool has_p_hat = doc.contains("p_hat");
  const bool has_per_device = doc.contains("per_device");
  if (has_p_hat == has_per_device)
    throw std::invalid_argument("model file needs exactly one of 'p_hat' and 'per_device'");

  if (has_p_hat) {
    if (!doc["p_hat"].is_number())
      throw std::invalid_argument("'p_hat' must be a number");
    const double p_hat = doc["p_hat"].get<double>();
    return {uniform_model(set, p_hat), "uniform(p_hat=" + format_real(p_hat) + ")"};
  }

  if (!doc["per_device"].is_array())
    throw std::invalid_argument("'per_device' must be an array of arrays");
  DeviceProbabilities model;
  model.on_probs.reserve(doc["per_device"].size());
  for (std::size_t d = 0; d < doc["per_device"].size(); ++d) {
    const json& entry = doc["per_device"][d];
    if (!entry.is_array())
      throw std::invalid_argument("device " + std::to_string(d) +
                                  ": on-state probabilities must be an array");
    std::vector<double> probs;
    probs.reserve(entry.size());
    for (const json& value : entry) {
      if (!value.is_number())
        throw std::invalid_argument("device " + std::to_string(d) +
                                    ": probabilities must be numbers");
      probs.push_back(value.get<double>());
    }
    model.on_probs.push_back(std::move(probs));
  }
  validate(set, model);
  return {std::move(model), "per-device"};
}

LoadedModel load_model(const std::filesystem::path& path, const DeviceSet& set) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return model_from_json(buffer.str(), set);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

}  // namespace nilmprof
