#pragma once

#include <string>
#include <vector>

#include "nilmprof/device_set.hpp"

namespace nilmprof {

struct CatalogEntry {
  std::string key;
  std::string title;
  std::string provenance;
  DeviceSet set;
};

// The embedded device sets: five synthetic families and nine sets of
// detected appliance power states from public residential energy datasets.
const std::vector<CatalogEntry>& catalog();

bool has_catalog_key(const std::string& key);

// Throws std::invalid_argument listing the known keys.
const DeviceSet& catalog_set(const std::string& key);

}  // namespace nilmprof
