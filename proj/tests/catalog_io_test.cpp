#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilmprof/catalog.hpp"
#include "nilmprof/device_set.hpp"
#include "nilmprof/device_set_io.hpp"

using namespace nilmprof;

TEST_CASE("catalog keys, order, and metadata") {
  const std::vector<std::string> expected = {"a",     "b",       "b2",      "b2plus", "b2x",
                                             "greend1", "greend2", "greend3", "redd1",  "redd2",
                                             "redd3", "eco1",    "eco2",    "eco3"};
  const auto& entries = catalog();
  REQUIRE(entries.size() == expected.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    CAPTURE(i);
    CHECK(entries[i].key == expected[i]);
    CHECK_FALSE(entries[i].title.empty());
    CHECK_FALSE(entries[i].provenance.empty());
    CHECK(entries[i].set.name() == expected[i]);
    CHECK(has_catalog_key(expected[i]));
  }
  CHECK_FALSE(has_catalog_key("nope"));
  CHECK_THROWS_AS(catalog_set("nope"), std::invalid_argument);
}

TEST_CASE("catalog set-level counts") {
  struct Counts {
    const char* key;
    std::size_t n, s_on;
    std::uint64_t m;
    watt_t ptot;
  };
  constexpr Counts table[] = {
      {"a", 10, 10, 1024, 275},        {"b", 10, 10, 1024, 284},
      {"b2", 10, 10, 1024, 1023},      {"b2plus", 10, 19, 5632, 1023},
      {"b2x", 10, 19, 39366, 1023},    {"greend1", 6, 19, 2352, 8313},
      {"greend2", 6, 9, 192, 6205},    {"greend3", 6, 24, 10800, 9877},
      {"redd1", 6, 20, 3456, 9663},    {"redd2", 6, 11, 384, 4623},
      {"redd3", 6, 18, 2880, 8218},    {"eco1", 6, 13, 576, 6090},
      {"eco2", 6, 11, 486, 4712},      {"eco3", 6, 17, 1152, 3660},
  };
  for (const Counts& c : table) {
    CAPTURE(c.key);
    const DeviceSet& set = catalog_set(c.key);
    CHECK(set.device_count() == c.n);
    CHECK(power_value_count(set) == c.s_on);
    CHECK(state_count(set) == c.m);
    CHECK(total_power(set) == c.ptot);
  }
}

TEST_CASE("catalog device data spot checks") {
  const DeviceSet& g2 = catalog_set("greend2");
  REQUIRE(g2.device_count() == 6);
  CHECK(g2.devices()[0].on_states() == std::vector<watt_t>{60});
  CHECK(g2.devices()[1].on_states() == std::vector<watt_t>{80});
  CHECK(g2.devices()[2].on_states() == std::vector<watt_t>{850});
  CHECK(g2.devices()[3].on_states() == std::vector<watt_t>{1580});
  CHECK(g2.devices()[4].on_states() == std::vector<watt_t>{80, 1725});
  CHECK(g2.devices()[5].on_states() == std::vector<watt_t>{90, 173, 1910});

  const DeviceSet& eco2 = catalog_set("eco2");
  CHECK(eco2.devices()[0].on_states() == std::vector<watt_t>{70});
  CHECK(eco2.devices()[5].on_states() == std::vector<watt_t>{120, 2132});

  const DeviceSet& b2plus = catalog_set("b2plus");
  CHECK(b2plus.devices()[9].on_states() ==
        std::vector<watt_t>{1, 2, 4, 8, 16, 32, 64, 128, 256, 512});

  for (const CatalogEntry& entry : catalog()) {
    CAPTURE(entry.key);
    const auto& devices = entry.set.devices();
    for (std::size_t d = 1; d < devices.size(); ++d)
      REQUIRE(devices[d - 1].max_power() <= devices[d].max_power());
  }
}

TEST_CASE("device-set JSON round-trip over the catalog") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "nilmprof_io_test";
  fs::create_directories(dir);
  for (const CatalogEntry& entry : catalog()) {
    CAPTURE(entry.key);
    const fs::path path = dir / (entry.key + ".json");
    save_device_set(entry.set, path);
    const DeviceSet back = load_device_set(path);
    REQUIRE(back == entry.set);
  }
  CHECK_THROWS_AS(load_device_set(dir / "missing.json"), std::invalid_argument);
  fs::remove_all(dir);
}

TEST_CASE("device-set JSON schema") {
  const DeviceSet pair = device_set_from_json(R"({"name":"pair","devices":[[100],[200]]})");
  CHECK(pair.name() == "pair");
  REQUIRE(pair.device_count() == 2);
  CHECK(pair.devices()[0].on_states() == std::vector<watt_t>{100});
  CHECK(pair.devices()[1].on_states() == std::vector<watt_t>{200});

  // Input order does not matter; devices and on-states are normalized.
  const DeviceSet sorted = device_set_from_json(R"({"name":"s","devices":[[30,10],[5]]})");
  CHECK(sorted.devices()[0].on_states() == std::vector<watt_t>{5});
  CHECK(sorted.devices()[1].on_states() == std::vector<watt_t>{10, 30});

  const auto reject = [](const std::string& text) {
    CAPTURE(text);
    CHECK_THROWS_AS(device_set_from_json(text), std::invalid_argument);
  };
  reject("not json");
  reject("[1,2]");
  reject(R"({"devices":[[10]]})");
  reject(R"({"name":"x"})");
  reject(R"({"name":"x","devices":[[10]],"extra":1})");
  reject(R"({"name":"x","devices":[[10,10]]})");
  reject(R"({"name":"x","devices":[[10.5]]})");
  reject(R"({"name":"x","devices":[[-5]]})");
  reject(R"({"name":"x","devices":[[0]]})");
  reject(R"({"name":"x","devices":[[]]})");
  reject(R"({"name":"x","devices":[]})");
}

TEST_CASE("model JSON, uniform form") {
  const DeviceSet pair = device_set_from_json(R"({"name":"pair","devices":[[100],[200]]})");
  const LoadedModel loaded = model_from_json(R"({"p_hat": 0.25})", pair);
  CHECK(loaded.description == "uniform(p_hat=0.25)");
  REQUIRE(loaded.probabilities.on_probs.size() == 2);
  CHECK(loaded.probabilities.on_probs[0][0] == 0.25);
  CHECK(loaded.probabilities.on_probs[1][0] == 0.25);

  const auto reject = [&](const std::string& text) {
    CAPTURE(text);
    CHECK_THROWS_AS(model_from_json(text, pair), std::invalid_argument);
  };
  reject(R"({"p_hat": 1.5})");
  reject(R"({"p_hat": "x"})");
  reject("{}");
  reject(R"({"p_hat": 0.2, "per_device": [[0.1],[0.1]]})");
  reject(R"({"phat": 0.3})");
  reject("nope");
}

TEST_CASE("model JSON, per-device form") {
  const DeviceSet pair = device_set_from_json(R"({"name":"pair","devices":[[100],[200]]})");
  const LoadedModel loaded = model_from_json(R"({"per_device": [[0.3],[0.25]]})", pair);
  CHECK(loaded.description == "per-device");
  CHECK(loaded.probabilities.on_probs[0][0] == 0.3);
  CHECK(loaded.probabilities.off_probability(0) == doctest::Approx(0.7).epsilon(1e-12));

  const auto reject = [&](const std::string& text) {
    CAPTURE(text);
    CHECK_THROWS_AS(model_from_json(text, pair), std::invalid_argument);
  };
  reject(R"({"per_device": [[0.3]]})");           // wrong device count
  reject(R"({"per_device": [[1.5],[0.2]]})");     // mass above 1
  reject(R"({"per_device": [[0.3],[0.2,0.1]]})"); // wrong on-state count
  reject(R"({"per_device": 0.3})");
  reject(R"({"per_device": [0.3, 0.2]})");
  reject(R"({"per_device": [["x"],[0.2]]})");
}
