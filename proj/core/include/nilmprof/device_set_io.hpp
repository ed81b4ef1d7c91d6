#pragma once

#include <filesystem>
#include <string>

#include "nilmprof/device_set.hpp"
#include "nilmprof/probability.hpp"

namespace nilmprof {

// JSON schema: {"name": string, "devices": [[int, ...], ...]}.
// Unknown fields are rejected; power values must be positive integers.
// Devices and on-states are sorted on load (duplicates within a device
// are invalid input).
DeviceSet device_set_from_json(const std::string& text);
std::string device_set_to_json(const DeviceSet& set);

DeviceSet load_device_set(const std::filesystem::path& path);
void save_device_set(const DeviceSet& set, const std::filesystem::path& path);

// Probability-model file: either {"p_hat": 0.3} or
// {"per_device": [[0.1], [0.05, 0.02], ...]} with one array of on-state
// probabilities per device, aligned with the set's (sorted) device order.
struct LoadedModel {
  DeviceProbabilities probabilities;
  std::string description;  // "uniform(p_hat=0.3)" or "per-device"
};

LoadedModel model_from_json(const std::string& text, const DeviceSet& set);
LoadedModel load_model(const std::filesystem::path& path, const DeviceSet& set);

}  // namespace nilmprof
