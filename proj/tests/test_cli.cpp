#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "dbibps/cli.hpp"
#include "dbibps/config.hpp"
#include "dbibps/json_io.hpp"

using namespace dbibps;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("dbibps_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int run(std::vector<std::string> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "dbibps");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  return code;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("config text round trip") {
  RunConfig cfg;
  cfg.command = "bound";
  cfg.sector = "skyrme";
  cfg.potential = "pow:1.5";
  cfg.beta = 0.1 + 0.2;
  cfg.mu = 1.0 / 3.0;
  cfg.n = -4;
  cfg.alpha_k = 1.25;
  cfg.seed = 18446744073709551615ull;
  cfg.tol = 1e-11;
  cfg.order = 5;
  cfg.compare_pavlovskii = true;
  cfg.axis = "beta";
  cfg.values = {10, 100, 1000};
  cfg.sigma = {0.5, 2};
  cfg.perturb = 1e-3;
  const RunConfig back = parse_config_text(serialize_config(cfg));
  CHECK(back == cfg);
  CHECK(serialize_config(back) == serialize_config(cfg));
}

TEST_CASE("config parsing errors") {
  CHECK_THROWS_AS(parse_config_text("beta=abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text("colour=red"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text("justtext"), std::invalid_argument);
  const RunConfig c = parse_config_text("# comment\n\n mu = 2 \n");
  CHECK(c.mu == 2.0);
}

TEST_CASE("flags override the config file") {
  const fs::path dir = scratch("precedence");
  std::ofstream(dir / "run.cfg") << "mu=2\nbeta=3\n";
  REQUIRE(run({"solve", "--config", (dir / "run.cfg").string(), "--mu", "0.5", "--out", dir.string()}) == kExitOk);
  const auto j = nlohmann::json::parse(slurp(dir / "solve.json"));
  CHECK(j["model"]["mu"].get<double>() == 0.5);
  CHECK(j["model"]["beta"].get<double>() == 3.0);
}

TEST_CASE("exit codes") {
  const fs::path dir = scratch("exits");
  CHECK(run({"solve", "--beta", "-1", "--out", dir.string()}) == kExitInvalidConfig);
  CHECK(run({"solve", "--potential", "nonsense", "--out", dir.string()}) == kExitInvalidConfig);
  CHECK(run({"frobnicate"}) == kExitInvalidConfig);
  CHECK(run({"solve", "--mu", "0", "--out", dir.string()}) == kExitNoSoliton);
  CHECK_FALSE(fs::exists(dir / "solve.json"));
  CHECK(run({"verify", "--perturb", "0.01", "--out", dir.string()}) == kExitVerifyFailed);
  CHECK(run({"verify", "--out", dir.string()}) == kExitOk);
  CHECK(run({"bound", "--order", "12", "--out", dir.string()}) == kExitInvalidConfig);
}

TEST_CASE("solve artifacts") {
  const fs::path dir = scratch("solve");
  std::string text;
  REQUIRE(run({"solve", "--grid", "200", "--out", dir.string()}, &text) == kExitOk);
  const std::string csv = slurp(dir / "profile.csv");
  CHECK(csv.rfind("coordinate,field,derivative,energy_density,charge_density\n", 0) == 0);
  CHECK(text == slurp(dir / "solve.json"));
  const auto j = nlohmann::json::parse(text);
  CHECK(j["energy"]["charge"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_FALSE(fs::exists(dir / "solve.json.tmp"));
}

TEST_CASE("identical runs are byte identical") {
  const fs::path a = scratch("det_a"), b = scratch("det_b");
  for (const auto& dir : {a, b}) {
    REQUIRE(run({"solve", "--sector", "skyrme", "--potential", "bps", "--seed", "5", "--out", dir.string()}) == kExitOk);
    REQUIRE(run({"bound", "--order", "5", "--samples", "20000", "--seed", "5", "--out", dir.string()}) == kExitOk);
  }
  for (const char* f : {"profile.csv", "solve.json", "certificate.json"}) {
    CAPTURE(f);
    CHECK(slurp(a / f) == slurp(b / f));
  }
}

TEST_CASE("json formatting") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  Json j;
  j["x"] = 1.0 / 3.0;
  j["bad"] = std::nan("");
  j["k"] = 3;
  const std::string s = dump_json(j);
  CHECK(s.find("0.33333333333333331") != std::string::npos);
  CHECK(s.find("\"bad\": null") != std::string::npos);
  CHECK(s.find("\"k\": 3") != std::string::npos);
}
