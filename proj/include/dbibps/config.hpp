// Run configuration: defaults, key=value files and command-line flags.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dbibps/model.hpp"

namespace dbibps {

struct RunConfig {
  std::string command;
  std::string sector = "baby";
  std::string potential;  // empty: old:1 (baby) or standard (skyrme)
  double beta = 1.0;
  double mu = 1.0;
  int n = 1;
  std::optional<double> alpha_k;  // absent: DBI law
  double energy_scale = 1.0;
  int grid = 1000;
  std::string out = ".";
  std::uint64_t seed = 0;
  std::optional<double> tol;  // quadrature relative tolerance override
  int order = 3;
  std::size_t samples = 1000000;
  bool compare_pavlovskii = false;
  std::string axis;
  std::vector<double> values;
  std::vector<double> sigma = {0.25, 1.0, 4.0};
  double perturb = 0.0;

  bool operator==(const RunConfig&) const = default;
};

// Keys accepted in config files and as --flags.
const std::vector<std::string>& config_keys();

// Sets one key from its text form; throws std::invalid_argument.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

// key=value lines; blank lines and lines starting with # are skipped.
RunConfig parse_config_text(const std::string& text, RunConfig base = {});
RunConfig load_config_file(const std::string& path, RunConfig base = {});
std::string serialize_config(const RunConfig& cfg);

std::string resolved_potential(const RunConfig& cfg);
ModelParams model_params(const RunConfig& cfg);
double quadrature_tol(const RunConfig& cfg);

}  // namespace dbibps
