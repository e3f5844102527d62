#include "dbibps/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>

#include "CLI11.hpp"
#include "dbibps/bounds.hpp"
#include "dbibps/bps.hpp"
#include "dbibps/json_io.hpp"
#include "dbibps/observables.hpp"
#include "dbibps/profile.hpp"

namespace dbibps {

namespace {

namespace fs = std::filesystem;

Json header(const RunConfig& cfg) {
  Json j;
  j["command"] = cfg.command;
  j["seed"] = cfg.seed;
  return j;
}

Json model_json(const RunConfig& cfg, const ModelParams& p) {
  Json j;
  j["sector"] = to_string(p.sector);
  j["potential"] = resolved_potential(cfg);
  j["beta"] = p.beta;
  j["mu"] = p.mu;
  j["n"] = p.charge;
  j["kinetic_law"] = p.is_dbi() ? "dbi" : "power";
  j["alpha_k"] = p.is_dbi() ? Json(nullptr) : Json(p.power_alpha());
  return j;
}

void emit(std::ostream& out, const fs::path& path, const Json& j) {
  const std::string text = dump_json(j);
  write_atomic(path, text);
  out << text;
}

struct CheckList {
  Json items = Json::array();
  std::vector<std::string> failures;

  void add(const std::string& name, bool passed, double value, double threshold) {
    Json c;
    c["name"] = name;
    c["passed"] = passed;
    c["value"] = value;
    c["threshold"] = threshold;
    items.push_back(c);
    if (!passed) failures.push_back(name);
  }
};

// Characteristic length: radius of a compacton, else where the field falls to 1e-3 of the chart top.
double core_length(const SolitonProfile& prof, const PotentialSpec& v) {
  if (prof.compacton_radius) return *prof.compacton_radius;
  for (const auto& s : prof.samples)
    if (s.field - v.vacuum_coordinate <= 1e-3 * v.domain.width()) return s.coordinate;
  return prof.extent;
}

SolitonProfile eom_profile(const ModelParams& p, const PotentialSpec& v, double spacing, double perturb,
                           double centre, double width) {
  GridSpec g;
  g.spacing = spacing;
  SolitonProfile prof = has_exact_profile(p, v) ? exact_profile(p, v, g) : solve_profile(p, v, g);
  if (perturb != 0.0) {
    for (auto& s : prof.samples) {
      const double u = (s.coordinate - centre) / width;
      s.field += perturb * std::exp(-u * u);
    }
  }
  return prof;
}

void verify_model(const ModelParams& p, const PotentialSpec& v, const RunConfig& cfg, const std::string& tag,
                  CheckList& checks) {
  const double tol = quadrature_tol(cfg);
  GridSpec grid;
  grid.samples = cfg.grid;
  const SolitonProfile prof = solve_profile(p, v, grid);
  const double n = static_cast<double>(p.charge);

  const double q = charge_quadrature(prof, p, tol);
  checks.add(tag + "charge_quantization", std::abs(q - n) <= 1e-6, std::abs(q - n), 1e-6);

  const EnergyReport rep = energy_report(prof, p, v);
  if (rep.rel_discrepancy_closed)
    checks.add(tag + "closed_form_energy", *rep.rel_discrepancy_closed <= 1e-6, *rep.rel_discrepancy_closed, 1e-6);
  if (rep.rel_discrepancy_avg)
    checks.add(tag + "average_formula", *rep.rel_discrepancy_avg <= 1e-8, *rep.rel_discrepancy_avg, 1e-8);

  if (has_exact_profile(p, v)) {
    const SolitonProfile ex = exact_profile(p, v, grid);
    const double sup = sup_field_error(prof, *ex.curve, ex.compacton_radius);
    checks.add(tag + "closed_form_profile", sup <= 1e-8, sup, 1e-8);
    const double dr = std::abs(*prof.compacton_radius - *ex.compacton_radius);
    checks.add(tag + "compacton_radius", dr <= 1e-8, dr, 1e-8);
  }

  std::vector<double> per;
  for (int k = 1; k <= 5; ++k) {
    ModelParams pk = p;
    pk.charge = k * (p.charge < 0 ? -1 : 1);
    const SolitonProfile pr = solve_profile(pk, v, grid);
    per.push_back(energy_quadrature(pr, pk, v, tol) / k);
  }
  const auto [lo, hi] = std::minmax_element(per.begin(), per.end());
  const double spread = (*hi - *lo) / std::abs(per[0]);
  checks.add(tag + "linearity_n1_to_5", spread <= 1e-8, spread, 1e-8);

  const double len = core_length(prof, v);
  const double width = 0.1 * len;
  const SolitonProfile coarse = eom_profile(p, v, len / 200.0, cfg.perturb, 0.5 * len, width);
  const SolitonProfile fine = eom_profile(p, v, len / 400.0, cfg.perturb, 0.5 * len, width);
  const double ratio = eom_richardson_ratio(coarse, fine, v);
  checks.add(tag + "eom_second_order", std::abs(ratio - 4.0) <= 0.5, ratio, 0.5);
}

}  // namespace

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const ModelParams p = model_params(cfg);
  const PotentialSpec v = parse_potential(resolved_potential(cfg));
  GridSpec grid;
  grid.samples = cfg.grid;
  const SolitonProfile prof = solve_profile(p, v, grid);
  EnergyReport rep = energy_report(prof, p, v);

  Json j = header(cfg);
  j["model"] = model_json(cfg, p);
  j["compacton_radius"] = prof.compacton_radius ? Json(*prof.compacton_radius) : Json(nullptr);
  j["extent"] = prof.extent;
  j["samples"] = prof.samples.size();
  j["energy"] = to_json(rep);
  if (p.is_dbi()) {
    const PerChargeEnergy avg = energy_per_charge_average(p, v, TargetMeasure::for_sector(p.sector));
    j["energy_per_charge_avg_sqrt2_mu"] = avg.sqrt2_mu_prefactor;
  }
  if (p.sector == Sector::Skyrme3D && v.tag == PotentialTag::SkyrmeStandard && p.is_dbi())
    j["energy_closed_form_alternate"] = skyrme_standard_energy_alternate(p);
  try {
    const EomResidualReport eom = eom_residual(prof, v);
    j["eom_max_residual"] = eom.max_residual;
    j["eom_spacing"] = eom.spacing;
  } catch (const std::invalid_argument&) {
    j["eom_max_residual"] = nullptr;
    j["eom_spacing"] = prof.spacing();
  }
  const fs::path dir(cfg.out);
  write_atomic(dir / "profile.csv", profile_csv(prof));
  emit(out, dir / "solve.json", j);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ModelParams base = model_params(cfg);
  const PotentialSpec v = parse_potential(resolved_potential(cfg));
  CheckList checks;
  if (base.sector == Sector::Baby2D) {
    verify_model(base, v, cfg, "", checks);
  } else {
    if (cfg.sigma.empty()) throw std::invalid_argument("verify: empty sigma list");
    for (double s : cfg.sigma) {
      if (!(s > 0.0)) throw std::invalid_argument("verify: sigma must be positive");
      ModelParams p = base;
      p.mu = base.beta / std::sqrt(s);
      verify_model(p, v, cfg, "sigma=" + format_double(s) + ":", checks);
    }
  }
  Json j = header(cfg);
  j["model"] = model_json(cfg, base);
  j["perturb"] = cfg.perturb;
  if (base.sector == Sector::Skyrme3D) j["sigma"] = cfg.sigma;
  j["passed"] = checks.failures.empty();
  j["failures"] = checks.failures;
  j["checks"] = checks.items;
  emit(out, fs::path(cfg.out) / "verify.json", j);
  if (!checks.failures.empty()) {
    err << "verify failed:";
    for (const auto& f : checks.failures) err << " " << f;
    err << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_bound(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.compare_pavlovskii && cfg.beta != 1.0)
    throw std::invalid_argument("--compare-pavlovskii needs beta = 1");
  BoundCertificate cert;
  try {
    cert = optimize_bound(cfg.order, cfg.beta, cfg.seed, cfg.energy_scale);
  } catch (const OptimizerError& e) {
    err << e.what() << "; best constant " << format_double(e.best().constant) << "\n";
    return kExitOptimizerFailed;
  }
  cert = certify(cert, cfg.samples, cfg.seed);
  const Sharpness sh = sharpness(cert);

  Json j = header(cfg);
  const Json body = to_json(cert);
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  j["sharpness_minimum"] = sh.minimum * cert.beta;
  j["duality_rel_gap"] = std::abs(sh.minimum - cert.constant / cert.beta) / (cert.constant / cert.beta);
  j["bound_energy_b1"] = bound_energy(cert, 1);
  if (cfg.beta == 1.0 || cfg.compare_pavlovskii) {
    const ReferenceComparison mine = compare_reference(cert);
    Json c;
    c["reference"] = mine.reference;
    c["bound"] = mine.bound;
    c["relative_error"] = mine.relative_error;
    j["pavlovskii"] = c;
  }
  emit(out, fs::path(cfg.out) / "certificate.json", j);
  if (!(cert.min_slack && *cert.min_slack >= -1e-12)) {
    err << "bound: negative pointwise slack " << format_double(*cert.min_slack) << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const ModelParams p = model_params(cfg);
  if (p.sector != Sector::Baby2D) throw std::invalid_argument("sweep: baby sector only");
  if (cfg.values.size() < 3) throw std::invalid_argument("sweep: need at least 3 values");
  std::string csv = "parameter,energy,distance_to_limit\n";
  Json j = header(cfg);
  j["axis"] = cfg.axis;
  j["model"] = model_json(cfg, p);
  j["values"] = cfg.values;
  if (cfg.axis == "mu") {
    if (resolved_potential(cfg) != "old:1") throw std::invalid_argument("mu sweep uses the old:1 potential");
    const MuSweep s = small_mu_sweep(p, cfg.values);
    for (std::size_t i = 0; i < s.mu.size(); ++i) csv += format_double(s.mu[i]) + "," + format_double(s.energy[i]) + ",\n";
    j["energy"] = s.energy;
    j["slope"] = s.slope;
    j["expected_slope"] = 2.0 * std::abs(p.charge) / 3.0;
  } else if (cfg.axis == "beta") {
    const PotentialSpec v = parse_potential(resolved_potential(cfg));
    const BetaSweep s = large_beta_sweep(p, v, cfg.values);
    for (std::size_t i = 0; i < s.beta.size(); ++i)
      csv += format_double(s.beta[i]) + "," + format_double(s.energy[i]) + "," + format_double(s.distance[i]) + "\n";
    j["energy"] = s.energy;
    j["distance"] = s.distance;
    j["exponent"] = s.exponent;
  } else {
    throw std::invalid_argument("sweep: --axis must be mu or beta");
  }
  const fs::path dir(cfg.out);
  write_atomic(dir / "sweep.csv", csv);
  emit(out, dir / "sweep.json", j);
  return kExitOk;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const ModelParams p = model_params(cfg);
  const PotentialSpec v = parse_potential(resolved_potential(cfg));
  GridSpec grid;
  grid.samples = cfg.grid;
  const Localization predicted = classify_localization(v.vacuum_exponent, p.sector);
  const TailFit fit = tail_fit(solve_profile(p, v, grid));
  Json j = header(cfg);
  j["model"] = model_json(cfg, p);
  j["vacuum_exponent"] = v.vacuum_exponent;
  j["threshold"] = localization_threshold(p.sector);
  j["predicted"] = to_string(predicted);
  j["empirical"] = to_string(fit.kind);
  j["r2_exponential"] = fit.r2_exponential;
  j["r2_power"] = fit.r2_power;
  j["tail_samples"] = fit.samples_used;
  j["agree"] = predicted == fit.kind;
  emit(out, fs::path(cfg.out) / "classify.json", j);
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"BPS solitons of DBI SDiff models: solve, verify, bound, sweep, classify"};
  app.require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"solve", "solve a profile and report energy, charge and EOM residual"},
      {"verify", "run the invariant suite (baby, or skyrme over --sigma)"},
      {"bound", "optimize and certify the order-N energy bound"},
      {"sweep", "small-mu or large-beta sweep (--axis mu|beta --values ...)"},
      {"classify", "compare predicted and fitted vacuum approach"}};
  std::map<std::string, std::map<std::string, std::string>> text;
  std::map<std::string, std::vector<std::pair<std::string, CLI::Option*>>> opts;
  std::map<std::string, std::string> config_path;
  std::map<std::string, bool> pavlovskii;
  for (const auto& [name, desc] : commands) {
    CLI::App* sub = app.add_subcommand(name, desc);
    auto& store = text[name];
    for (const auto& key : config_keys()) {
      if (key == "command") continue;
      if (key == "compare-pavlovskii") {
        opts[name].emplace_back(key, sub->add_flag("--" + key, pavlovskii[name], "include the reference comparison"));
        continue;
      }
      opts[name].emplace_back(key, sub->add_option("--" + key, store[key]));
    }
    sub->add_option("--config", config_path[name], "key=value file; flags take precedence");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidConfig;
  }
  try {
    const std::string name = app.get_subcommands().front()->get_name();
    RunConfig cfg;
    if (!config_path[name].empty()) cfg = load_config_file(config_path[name], cfg);
    cfg.command = name;
    for (const auto& [key, opt] : opts[name]) {
      if (opt->count() == 0) continue;
      if (key == "compare-pavlovskii") cfg.compare_pavlovskii = pavlovskii[name];
      else apply_setting(cfg, key, text[name][key]);
    }
    if (name == "solve") return cmd_solve(cfg, out, err);
    if (name == "verify") return cmd_verify(cfg, out, err);
    if (name == "bound") return cmd_bound(cfg, out, err);
    if (name == "sweep") return cmd_sweep(cfg, out, err);
    return cmd_classify(cfg, out, err);
  } catch (const NoSolitonError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNoSoliton;
  } catch (const OptimizerError& e) {
    err << "error: " << e.what() << "\n";
    return kExitOptimizerFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidConfig;
  }
}

}  // namespace dbibps
