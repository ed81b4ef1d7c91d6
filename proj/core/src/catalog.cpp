#include "nilmprof/catalog.hpp"

#include <initializer_list>
#include <stdexcept>

namespace nilmprof {

namespace {

DeviceSet make_set(const std::string& key,
                   std::initializer_list<std::initializer_list<watt_t>> devices) {
  std::vector<Device> list;
  list.reserve(devices.size());
  for (const auto& values : devices) list.emplace_back(std::vector<watt_t>(values));
  return DeviceSet(key, std::move(list));
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;
  entries.reserve(14);

  entries.push_back({"a", "Set A: linear 5..50 W",
                     "synthetic; ten on-off devices, 5 W spacing",
                     make_set("a", {{5}, {10}, {15}, {20}, {25}, {30}, {35}, {40}, {45}, {50}})});
  entries.push_back({"b", "Set B: near-geometric 1..117 W",
                     "synthetic; ten on-off devices, successive powers scaled by 1.69",
                     make_set("b", {{1}, {2}, {3}, {5}, {8}, {14}, {24}, {41}, {69}, {117}})});
  entries.push_back({"b2", "Set B2: binary ladder 1..512 W",
                     "synthetic; ten on-off devices, powers of two",
                     make_set("b2", {{1}, {2}, {4}, {8}, {16}, {32}, {64}, {128}, {256}, {512}})});
  entries.push_back(
      {"b2plus", "Set B2+: binary ladder with a ten-state device",
       "synthetic; nine binary on-off devices plus one device exposing all ten binary values",
       make_set("b2plus", {{1},
                           {2},
                           {4},
                           {8},
                           {16},
                           {32},
                           {64},
                           {128},
                           {256},
                           {1, 2, 4, 8, 16, 32, 64, 128, 256, 512}})});
  entries.push_back(
      {"b2x", "Set B2x: binary ladder with predecessor states",
       "synthetic; each device past the first also offers the previous device's power value",
       make_set("b2x", {{1},
                        {1, 2},
                        {2, 4},
                        {4, 8},
                        {8, 16},
                        {16, 32},
                        {32, 64},
                        {64, 128},
                        {128, 256},
                        {256, 512}})});

  entries.push_back({"greend1", "GREEND set 1",
                     "detected appliance power states, GREEND residential dataset",
                     make_set("greend1", {{55, 140, 240},
                                          {1220},
                                          {60, 148, 470, 570, 1225, 1265},
                                          {1790},
                                          {70, 155, 210, 260, 423, 1898},
                                          {40, 1900}})});
  entries.push_back({"greend2", "GREEND set 2",
                     "detected appliance power states, GREEND residential dataset",
                     make_set("greend2", {{60}, {80}, {850}, {1580}, {80, 1725}, {90, 173, 1910}})});
  entries.push_back({"greend3", "GREEND set 3",
                     "detected appliance power states, GREEND residential dataset",
                     make_set("greend3", {{110, 235, 285, 360},
                                          {120, 1235},
                                          {55, 125, 540, 882, 1047, 1220, 1630},
                                          {70, 2002},
                                          {125, 245, 358, 1998, 2100},
                                          {70, 160, 2358, 2550}})});

  entries.push_back({"redd1", "REDD set 1",
                     "detected appliance power states, REDD residential dataset",
                     make_set("redd1", {{200, 420},
                                        {50, 210, 410, 890, 1115},
                                        {260, 710, 1440},
                                        {55, 110, 270, 300, 620, 1405, 1505},
                                        {1680, 2478},
                                        {2705}})});
  entries.push_back({"redd2", "REDD set 2",
                     "detected appliance power states, REDD residential dataset",
                     make_set("redd2", {{123}, {410}, {160, 420}, {130, 210, 770}, {1050},
                                        {40, 1718, 1850}})});
  entries.push_back({"redd3", "REDD set 3",
                     "detected appliance power states, REDD residential dataset",
                     make_set("redd3", {{100, 400},
                                        {210, 525, 730},
                                        {40, 365, 900, 1220, 1520},
                                        {860, 960, 1285, 1605},
                                        {120, 540, 1698},
                                        {2265}})});

  entries.push_back({"eco1", "ECO set 1",
                     "detected appliance power states, ECO residential dataset",
                     make_set("eco1", {{40}, {72}, {250, 440, 785}, {50, 1225}, {1800},
                                       {90, 180, 250, 365, 2168}})});
  entries.push_back({"eco2", "ECO set 2",
                     "detected appliance power states, ECO residential dataset",
                     make_set("eco2", {{70}, {55, 175}, {80, 185}, {50, 310}, {50, 1840},
                                       {120, 2132}})});
  entries.push_back({"eco3", "ECO set 3",
                     "detected appliance power states, ECO residential dataset",
                     make_set("eco3", {{100}, {120}, {130}, {100, 175, 280}, {40, 1365, 1485},
                                       {67, 190, 280, 445, 650, 785, 1065, 1545}})});
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

bool has_catalog_key(const std::string& key) {
  for (const CatalogEntry& entry : catalog())
    if (entry.key == key) return true;
  return false;
}

const DeviceSet& catalog_set(const std::string& key) {
  for (const CatalogEntry& entry : catalog())
    if (entry.key == key) return entry.set;
  std::string known;
  for (const CatalogEntry& entry : catalog()) {
    if (!known.empty()) known += ", ";
    known += entry.key;
  }
  throw std::invalid_argument("unknown catalog key '" + key + "'; known keys: " + known);
}

}  // namespace nilmprof
