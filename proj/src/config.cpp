#include "dbibps/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "dbibps/json_io.hpp"

namespace dbibps {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) throw std::invalid_argument("bad number for " + key + ": '" + v + "'");
  return x;
}

long long to_integer(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  long long x = 0;
  try {
    x = std::stoll(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) throw std::invalid_argument("bad integer for " + key + ": '" + v + "'");
  return x;
}

int to_int(const std::string& key, const std::string& v) {
  const long long x = to_integer(key, v);
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
    throw std::invalid_argument("integer out of range for " + key + ": '" + v + "'");
  return static_cast<int>(x);
}

unsigned long long to_unsigned(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  unsigned long long x = 0;
  try {
    if (!v.empty() && v[0] != '-') x = std::stoull(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size())
    throw std::invalid_argument("bad non-negative integer for " + key + ": '" + v + "'");
  return x;
}

std::vector<double> to_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(to_double(key, item));
  }
  return out;
}

std::string list_text(const std::vector<double>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += format_double(xs[i]);
  }
  return s;
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "command", "sector", "potential", "beta",    "mu",   "n",     "alpha-k",
      "energy-scale", "grid", "out",   "seed",      "tol",  "order", "samples",
      "compare-pavlovskii", "axis", "values", "sigma", "perturb"};
  return keys;
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  if (key == "command") cfg.command = v;
  else if (key == "sector") cfg.sector = to_string(parse_sector(v));
  else if (key == "potential") cfg.potential = v;
  else if (key == "beta") cfg.beta = to_double(key, v);
  else if (key == "mu") cfg.mu = to_double(key, v);
  else if (key == "n") cfg.n = to_int(key, v);
  else if (key == "alpha-k") {
    if (v.empty() || v == "none") cfg.alpha_k.reset();
    else cfg.alpha_k = to_double(key, v);
  } else if (key == "energy-scale") cfg.energy_scale = to_double(key, v);
  else if (key == "grid") cfg.grid = to_int(key, v);
  else if (key == "out") cfg.out = v;
  else if (key == "seed") cfg.seed = to_unsigned(key, v);
  else if (key == "tol") {
    if (v.empty() || v == "none") cfg.tol.reset();
    else cfg.tol = to_double(key, v);
  } else if (key == "order") cfg.order = to_int(key, v);
  else if (key == "samples") cfg.samples = static_cast<std::size_t>(to_unsigned(key, v));
  else if (key == "compare-pavlovskii") {
    if (v == "true" || v == "1") cfg.compare_pavlovskii = true;
    else if (v == "false" || v == "0") cfg.compare_pavlovskii = false;
    else throw std::invalid_argument("bad boolean for compare-pavlovskii: '" + v + "'");
  } else if (key == "axis") cfg.axis = v;
  else if (key == "values") cfg.values = to_list(key, v);
  else if (key == "sigma") cfg.sigma = to_list(key, v);
  else if (key == "perturb") cfg.perturb = to_double(key, v);
  else throw std::invalid_argument("unknown config key '" + key + "'");
}

RunConfig parse_config_text(const std::string& text, RunConfig base) {
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + " has no '='");
    apply_setting(base, trim(t.substr(0, eq)), t.substr(eq + 1));
  }
  return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read config file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str(), std::move(base));
}

std::string serialize_config(const RunConfig& c) {
  std::string s;
  auto put = [&](const std::string& k, const std::string& v) { s += k + "=" + v + "\n"; };
  put("command", c.command);
  put("sector", c.sector);
  put("potential", c.potential);
  put("beta", format_double(c.beta));
  put("mu", format_double(c.mu));
  put("n", std::to_string(c.n));
  put("alpha-k", c.alpha_k ? format_double(*c.alpha_k) : "none");
  put("energy-scale", format_double(c.energy_scale));
  put("grid", std::to_string(c.grid));
  put("out", c.out);
  put("seed", std::to_string(c.seed));
  put("tol", c.tol ? format_double(*c.tol) : "none");
  put("order", std::to_string(c.order));
  put("samples", std::to_string(c.samples));
  put("compare-pavlovskii", c.compare_pavlovskii ? "true" : "false");
  put("axis", c.axis);
  put("values", list_text(c.values));
  put("sigma", list_text(c.sigma));
  put("perturb", format_double(c.perturb));
  return s;
}

std::string resolved_potential(const RunConfig& cfg) {
  if (!cfg.potential.empty()) return cfg.potential;
  return parse_sector(cfg.sector) == Sector::Baby2D ? "old:1" : "standard";
}

ModelParams model_params(const RunConfig& cfg) {
  ModelParams p;
  p.beta = cfg.beta;
  p.mu = cfg.mu;
  p.charge = cfg.n;
  p.sector = parse_sector(cfg.sector);
  if (cfg.alpha_k) p.kinetic = PowerLaw{*cfg.alpha_k};
  p.energy_scale = cfg.energy_scale;
  return validate_params(p);
}

double quadrature_tol(const RunConfig& cfg) {
  if (!cfg.tol) return 1e-12;
  if (!(*cfg.tol > 0.0) || *cfg.tol >= 1e-2) throw std::invalid_argument("tol must lie in (0, 1e-2)");
  return *cfg.tol;
}

}  // namespace dbibps
