#include "dbibps/observables.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dbibps/bps.hpp"
#include "dbibps/numerics.hpp"

namespace dbibps {

namespace {

constexpr double kPi = std::numbers::pi;

void check_sector(const SolitonProfile& profile, const ModelParams& p) {
  if (profile.sector != p.sector) throw std::invalid_argument("profile and model sectors differ");
  if (!profile.curve) throw std::invalid_argument("profile has no continuous curve");
}

void require_mu(const ModelParams& p) {
  if (!(p.mu > 0.0)) throw NoSolitonError("closed-form energy undefined for mu = 0: there is no soliton");
}

}  // namespace

double energy_quadrature(const SolitonProfile& profile, const ModelParams& params, const PotentialSpec& v,
                         double tol) {
  const ModelParams p = validate_params(params);
  check_sector(profile, p);
  const Chart chart = Chart::of(p);
  const double mu2 = p.mu * p.mu;
  auto density = [&](double f, double rate) {
    return kinetic_density(p, chart.kappa * rate) + mu2 * std::max(0.0, v(f));
  };
  return chart.prefactor * profile.curve->integrate(density, profile.extent, tol);
}

double charge_quadrature(const SolitonProfile& profile, const ModelParams& params, double tol) {
  const ModelParams p = validate_params(params);
  check_sector(profile, p);
  const Chart chart = Chart::of(p);
  const double rate_integral = profile.curve->integrate([](double, double rate) { return rate; },
                                                        profile.extent, tol);
  return static_cast<double>(p.charge) * rate_integral / chart.volume;
}

double baby_energy_closed(const ModelParams& p) {
  require_mu(p);
  const double n = std::abs(static_cast<double>(p.charge));
  const double b2 = p.beta * p.beta;
  const double v = 8.0 * kPi * kPi * p.mu * p.mu * p.mu * p.mu / b2;
  const double x0 = baby_old_radius(p) / n;
  const double sv = std::sqrt(v);
  return n * kPi * b2 * (x0 * std::sqrt(1.0 + v * x0 * x0) - std::asinh(sv * x0) / sv);
}

double skyrme_standard_energy_closed(const ModelParams& p) {
  require_mu(p);
  const double n = std::abs(static_cast<double>(p.charge));
  const double s = p.sigma();
  const double rs = std::sqrt(s);
  const double bracket = rs * (1.0 + 2.0 * s / 3.0 + s * s) + (1.0 + s) * (1.0 - s * s) * std::atan(1.0 / rs);
  return std::sqrt(2.0) * n * p.beta / (3.0 * kPi * s) * bracket;
}

double skyrme_standard_energy_alternate(const ModelParams& p) {
  require_mu(p);
  const double n = std::abs(static_cast<double>(p.charge));
  const double s = p.sigma();
  const double rs = std::sqrt(s);
  const double bracket = rs * (12.0 + s * (5.0 + 3.0 * s)) + 3.0 * (1.0 + s) * (s * s + s - 4.0) * std::atan(rs);
  return std::sqrt(2.0) * n * p.beta / (6.0 * kPi * s) * bracket;
}

double skyrme_bps_energy_closed(const ModelParams& p) {
  require_mu(p);
  const double n = std::abs(static_cast<double>(p.charge));
  const double s = p.sigma();
  const double z0 = skyrme_bps_radius(s);
  return std::sqrt(2.0) * p.beta / (6.0 * kPi) * n * (z0 * std::sqrt(1.0 + z0 * z0 / (s * s)) - s * std::asinh(z0 / s));
}

std::optional<double> closed_form_energy(const ModelParams& p, const PotentialSpec& v) {
  if (!has_exact_profile(p, v) || !(p.mu > 0.0)) return std::nullopt;
  if (p.sector == Sector::Baby2D) return baby_energy_closed(p);
  if (v.tag == PotentialTag::SkyrmeStandard) return skyrme_standard_energy_closed(p);
  return skyrme_bps_energy_closed(p);
}

PerChargeEnergy energy_per_charge_average(const ModelParams& params, const PotentialSpec& v,
                                          const TargetMeasure& measure) {
  const ModelParams p = validate_params(params);
  if (!p.is_dbi()) throw std::invalid_argument("energy_per_charge_average needs the DBI law");
  PerChargeEnergy out;
  if (p.mu == 0.0) {
    out.no_soliton = true;
    return out;
  }
  const double k = p.mu * p.mu / (p.beta * p.beta);
  const double avg = measure.average([&](double f) {
    const double value = std::max(0.0, v(f));
    return std::sqrt(k * value * value + 2.0 * value);
  });
  const double factor = Chart::of(p).energy_factor(p.charge);
  out.value = factor * p.mu / std::sqrt(2.0) * avg;
  out.sqrt2_mu_prefactor = factor * std::sqrt(2.0) * p.mu * avg;
  return out;
}

double power_family_energy_per_charge(const ModelParams& params, const PotentialSpec& v,
                                      const TargetMeasure& measure) {
  const ModelParams p = validate_params(params);
  if (p.is_dbi()) throw std::invalid_argument("power_family_energy_per_charge needs a power law");
  const double a = p.power_alpha();
  const double expo = 1.0 - 1.0 / (2.0 * a);
  const double avg = measure.average([&](double f) { return std::pow(std::max(0.0, v(f)), expo); });
  // ((2a-1)/mu^2)^(1/(2a)-1) = (2a-1)^(1/(2a)-1) mu^(2-1/a)
  const double pre = 2.0 * a * std::pow(2.0 * a - 1.0, 1.0 / (2.0 * a) - 1.0) * std::pow(p.mu, 2.0 - 1.0 / a);
  return Chart::of(p).energy_factor(p.charge) * pre * avg;
}

EnergyReport energy_report(const SolitonProfile& profile, const ModelParams& p, const PotentialSpec& v) {
  EnergyReport r;
  r.energy_quadrature = energy_quadrature(profile, p, v);
  r.charge = charge_quadrature(profile, p);
  const double n = std::abs(static_cast<double>(p.charge));
  r.energy_closed_form = closed_form_energy(p, v);
  if (r.energy_closed_form)
    r.rel_discrepancy_closed = std::abs(r.energy_quadrature - *r.energy_closed_form) / std::abs(*r.energy_closed_form);
  const TargetMeasure m = TargetMeasure::for_sector(p.sector);
  if (p.is_dbi()) {
    const PerChargeEnergy avg = energy_per_charge_average(p, v, m);
    if (!avg.no_soliton) r.energy_per_charge_avg = avg.value;
  } else {
    r.energy_per_charge_avg = power_family_energy_per_charge(p, v, m);
  }
  if (r.energy_per_charge_avg) {
    const double per = r.energy_quadrature / n;
    r.rel_discrepancy_avg = std::abs(*r.energy_per_charge_avg - per) / per;
  }
  return r;
}

MuSweep small_mu_sweep(const ModelParams& params, const std::vector<double>& mus) {
  if (mus.size() < 3) throw std::invalid_argument("small_mu_sweep: need at least 3 mu values");
  const PotentialSpec v = make_potential(PotentialTag::OldBabyPower, 1.0);
  MuSweep out;
  for (double mu : mus) {
    ModelParams p = params;
    p.sector = Sector::Baby2D;
    p.mu = mu;
    const SolitonProfile prof = solve_profile(p, v);
    out.mu.push_back(mu);
    out.energy.push_back(energy_quadrature(prof, p, v));
  }
  out.slope = fit_slope_through_origin(out.mu, out.energy);
  return out;
}

BetaSweep large_beta_sweep(const ModelParams& params, const PotentialSpec& v, const std::vector<double>& betas) {
  if (betas.size() < 3) throw std::invalid_argument("large_beta_sweep: need at least 3 beta values");
  if (params.sector != Sector::Baby2D) throw std::invalid_argument("large_beta_sweep: baby sector only");
  // F = B0^2/4 + mu^2 V has the same BPS profile as B0^2 + (2 mu)^2 V.
  ModelParams limit = params;
  limit.kinetic = PowerLaw{1.0};
  limit.mu = 2.0 * params.mu;
  const SolitonProfile ref = solve_profile(limit, v);
  BetaSweep out;
  std::vector<double> lb, ld;
  for (double beta : betas) {
    ModelParams p = params;
    p.kinetic = DbiLaw{};
    p.beta = beta;
    const SolitonProfile prof = solve_profile(p, v);
    double d = 0.0;
    const std::size_t count = 4001;
    const double span = std::max(ref.extent, prof.extent);
    for (std::size_t i = 0; i < count; ++i) {
      const double x = span * static_cast<double>(i) / static_cast<double>(count - 1);
      d = std::max(d, std::abs(prof.curve->field(x) - ref.curve->field(x)));
    }
    out.beta.push_back(beta);
    out.distance.push_back(d);
    out.energy.push_back(energy_quadrature(prof, p, v));
    lb.push_back(std::log(beta));
    ld.push_back(std::log(d));
  }
  out.exponent = fit_line(lb, ld).slope;
  return out;
}

}  // namespace dbibps
