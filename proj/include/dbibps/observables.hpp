// Energies and charges: quadrature along profiles, closed forms, target
// averages and parameter sweeps.
#pragma once

#include <optional>
#include <vector>

#include "dbibps/model.hpp"
#include "dbibps/profile.hpp"

namespace dbibps {

// prefactor * integral dc [F(B0) + mu^2 V], B0 = kappa J(f)|f'|.
double energy_quadrature(const SolitonProfile& profile, const ModelParams& p, const PotentialSpec& v,
                         double tol = 1e-12);
// n * integral dc J(f)|f'| / volume.
double charge_quadrature(const SolitonProfile& profile, const ModelParams& p, double tol = 1e-12);

double baby_energy_closed(const ModelParams& p);
double skyrme_standard_energy_closed(const ModelParams& p);
// Alternate form (sqrt2 |n| beta/(6 pi sigma))(sqrt(sigma)(12 + sigma(5 + 3 sigma))
// + 3(1 + sigma)(sigma^2 + sigma - 4) atan sqrt(sigma)); it does not match the quadrature.
double skyrme_standard_energy_alternate(const ModelParams& p);
double skyrme_bps_energy_closed(const ModelParams& p);
// Closed form for old:1, standard or bps with the DBI law.
std::optional<double> closed_form_energy(const ModelParams& p, const PotentialSpec& v);

struct PerChargeEnergy {
  double value = 0.0;              // chart factor * (mu/sqrt2) <sqrt(mu^2 V^2/beta^2 + 2V)>
  double sqrt2_mu_prefactor = 0.0;  // same average with sqrt2 mu in front
  bool no_soliton = false;         // mu = 0
};
PerChargeEnergy energy_per_charge_average(const ModelParams& p, const PotentialSpec& v,
                                          const TargetMeasure& measure);

// chart factor * 2a ((2a - 1)/mu^2)^(1/(2a) - 1) <V^(1 - 1/(2a))>, a = alpha_K.
double power_family_energy_per_charge(const ModelParams& p, const PotentialSpec& v,
                                      const TargetMeasure& measure);

struct EnergyReport {
  double energy_quadrature = 0.0;
  std::optional<double> energy_closed_form;
  std::optional<double> energy_per_charge_avg;
  double charge = 0.0;
  std::optional<double> rel_discrepancy_closed;
  std::optional<double> rel_discrepancy_avg;
};
EnergyReport energy_report(const SolitonProfile& profile, const ModelParams& p, const PotentialSpec& v);

struct MuSweep {
  std::vector<double> mu;
  std::vector<double> energy;
  double slope = 0.0;  // least squares through the origin
};
MuSweep small_mu_sweep(const ModelParams& p, const std::vector<double>& mus);

struct BetaSweep {
  std::vector<double> beta;
  std::vector<double> distance;  // sup |h_beta - h_limit|
  std::vector<double> energy;
  double exponent = 0.0;         // fitted d ~ beta^exponent
};
// Baby sector only.  The limit profile solves h_x = -(4 pi mu/|n|) sqrt(V).
BetaSweep large_beta_sweep(const ModelParams& p, const PotentialSpec& v, const std::vector<double>& betas);

}  // namespace dbibps
