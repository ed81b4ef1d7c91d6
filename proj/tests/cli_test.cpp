#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(NILMPROF_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

std::size_t line_count(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "nilmprof_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("list prints one row per catalog set") {
  const RunResult r = run_cli("list");
  CHECK(r.exit_code == 0);
  CHECK(line_count(r.output) == 15);  // header + 14 sets
  CHECK(contains(r.output, "greend2"));
  CHECK(contains(r.output, "b2plus"));
}

TEST_CASE("info reports set-level figures") {
  const RunResult r = run_cli("info --set a");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "configurations: 1024\n"));
  CHECK(contains(r.output, "total_power_w: 275\n"));
  CHECK(contains(r.output, "average_power_w: 27.5\n"));
}

TEST_CASE("analyze defaults to the max-entropy source") {
  const RunResult r = run_cli("analyze --set b --format json");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["model"].get<std::string>() == "max-entropy");
  CHECK(std::abs(doc["ip_max_bits"].get<double>() - 8.036577454205) <= 1e-9);
  CHECK(std::abs(doc["c_hat"].get<double>() - 3.592982456140) <= 1e-9);
  CHECK(doc["configurations"].get<std::uint64_t>() == 1024);
}

TEST_CASE("analyze reports an undefined proficiency honestly") {
  const RunResult text = run_cli("analyze --set a --p-hat 0");
  CHECK(text.exit_code == 0);
  CHECK(contains(text.output, "c: undefined at H=0"));

  const RunResult json = run_cli("analyze --set a --p-hat 0 --format json");
  REQUIRE(json.exit_code == 0);
  const auto doc = nlohmann::json::parse(json.output);
  CHECK(doc["c"].is_null());
  CHECK(doc.contains("c_note"));
}

TEST_CASE("occupation lists every occupied power value") {
  const RunResult r = run_cli("occupation --set greend2");
  REQUIRE(r.exit_code == 0);
  CHECK(line_count(r.output) == 161);  // header + 160 occupied values
  CHECK(r.output.rfind("power_w,count,probability\n0,1,0.00520833\n", 0) == 0);
  CHECK(r.output.rfind("\n6205,1,0.00520833\n") == r.output.size() - 19);
}

TEST_CASE("sweep emits golden CSV rows") {
  const RunResult r = run_cli("sweep --set a --grid 0.1:0.5:0.2");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "p_hat,H_bits,IP_bits,C\n"
        "0.1,4.68996,3.70164,0.789269\n"
        "0.3,8.81291,5.1421,0.583473\n"
        "0.5,10,5.33313,0.533313\n");
}

TEST_CASE("sweep handles the degenerate duty cycles") {
  const RunResult r = run_cli("sweep --set a --grid 0:1:0.5");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "p_hat,H_bits,IP_bits,C\n"
        "0,0,0,nan\n"
        "0.5,10,5.33313,0.533313\n"
        "1,0,0,nan\n");
}

TEST_CASE("the default sweep grid spans 0.05 to 0.95") {
  const RunResult r = run_cli("sweep --set a");
  CHECK(r.exit_code == 0);
  CHECK(line_count(r.output) == 20);  // header + 19 grid points
  CHECK(r.output.rfind("p_hat,H_bits,IP_bits,C\n0.05,", 0) == 0);
  CHECK(contains(r.output, "\n0.95,"));
}

TEST_CASE("synth emits a seed-stable profile") {
  const RunResult r = run_cli("synth --set a --p-hat 0.5 --n 5 --seed 0");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "t_s,power_w\n0,160\n1,85\n2,95\n3,245\n4,215\n");

  const RunResult other = run_cli("synth --set a --p-hat 0.5 --n 5 --seed 1");
  CHECK(other.exit_code == 0);
  CHECK(other.output != r.output);

  const RunResult dt = run_cli("synth --set a --p-hat 0.5 --n 3 --seed 0 --dt 0.5");
  CHECK(dt.exit_code == 0);
  CHECK(dt.output.rfind("t_s,power_w\n0,", 0) == 0);
  CHECK(contains(dt.output, "\n0.5,"));
  CHECK(contains(dt.output, "\n1,"));
}

TEST_CASE("profile-stats closes the synthesis loop") {
  const fs::path profile = scratch_dir() / "roundtrip.csv";
  const RunResult synth = run_cli("synth --set a --p-hat 0.1 --n 20000 --seed 3 --out " +
                                  profile.string());
  REQUIRE(synth.exit_code == 0);

  const RunResult stats =
      run_cli("profile-stats " + profile.string() + " --set a --format json");
  REQUIRE(stats.exit_code == 0);
  const auto doc = nlohmann::json::parse(stats.output);
  CHECK(doc["samples"].get<std::uint64_t>() == 20000);
  CHECK(std::abs(doc["p_hat"].get<double>() - 0.1) <= 0.01);
  CHECK(doc["p_hat_clamped"].get<bool>() == false);
  fs::remove(profile);
}

TEST_CASE("--out writes exactly what stdout would carry") {
  const fs::path out = scratch_dir() / "sweep.csv";
  const RunResult direct = run_cli("sweep --set a --grid 0.1:0.3:0.1");
  const RunResult filed = run_cli("sweep --set a --grid 0.1:0.3:0.1 --out " + out.string());
  REQUIRE(direct.exit_code == 0);
  REQUIRE(filed.exit_code == 0);
  CHECK(filed.output.empty());
  CHECK(slurp(out) == direct.output);
  fs::remove(out);
}

TEST_CASE("tables passes on a clean build and is reproducible") {
  const RunResult one = run_cli("tables");
  CHECK(one.exit_code == 0);
  CHECK(contains(one.output, "summary: 107 cells, 95 ok, 0 FAIL, 12 notes"));

  const RunResult two = run_cli("tables");
  CHECK(two.output == one.output);
}

TEST_CASE("analyze accepts a device-set file") {
  const fs::path file = scratch_dir() / "pair.json";
  std::ofstream(file) << R"({"name":"pair","devices":[[100],[200]]})";
  const RunResult r = run_cli("analyze --set " + file.string());
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "set: pair\n"));
  CHECK(contains(r.output, "configurations: 4\n"));
  fs::remove(file);
}

TEST_CASE("exit codes separate usage errors from computational limits") {
  CHECK(run_cli("analyze --set nope").exit_code == 1);
  CHECK(run_cli("frobnicate").exit_code == 1);
  CHECK(run_cli("analyze").exit_code == 1);  // --set is required
  CHECK(run_cli("sweep --set a --grid 5").exit_code == 1);
  CHECK(run_cli("sweep --set a --grid 0.5:0.1:0.1").exit_code == 1);
  CHECK(run_cli("analyze --set a --p-hat 2").exit_code == 1);
  CHECK(run_cli("analyze --set a --p-hat 0.1 --max-entropy").exit_code == 1);
  CHECK(run_cli("profile-stats /nonexistent/profile.csv").exit_code == 1);

  const fs::path dir = scratch_dir();

  const fs::path model = dir / "bad_model.json";
  std::ofstream(model) << R"({"p_hat": 2})";
  CHECK(run_cli("analyze --set a --model " + model.string()).exit_code == 1);
  fs::remove(model);

  // 70 on-off devices: the configuration count overflows uint64, so the
  // entropy report refuses, while the occupation verb (pure convolution
  // with 128-bit counts) still answers.
  std::string devices = "[";
  for (int i = 0; i < 70; ++i) devices += (i == 0) ? "[1]" : ",[1]";
  devices += "]";
  const fs::path seventy = dir / "seventy.json";
  std::ofstream(seventy) << R"({"name":"seventy","devices":)" + devices + "}";

  CHECK(run_cli("analyze --set " + seventy.string()).exit_code == 2);

  const RunResult occ = run_cli("occupation --set " + seventy.string());
  CHECK(occ.exit_code == 0);
  CHECK(line_count(occ.output) == 72);  // header + powers 0..70
  CHECK(occ.output.rfind("power_w,count,probability\n0,1,", 0) == 0);
  CHECK(contains(occ.output, "\n35,112186277816662845432,"));  // C(70,35) > 2^64
  fs::remove(seventy);
}
