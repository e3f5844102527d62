#include <cmath>
#include <functional>

#include "doctest.h"
#include "dbibps/observables.hpp"
#include "oracles.hpp"

using namespace dbibps;

namespace {

ModelParams skyrme(double sigma, int n = 1) {
  ModelParams p;
  p.sector = Sector::Skyrme3D;
  p.mu = 1.0 / std::sqrt(sigma);
  p.charge = n;
  return p;
}

}  // namespace

TEST_CASE("baby energy at unit couplings") {
  ModelParams p;
  const PotentialSpec v = parse_potential("old:1");
  CHECK(baby_energy_closed(p) == doctest::Approx(oracle::baby_energy_unit()).epsilon(1e-14));
  const double e = energy_quadrature(solve_profile(p, v), p, v);
  CHECK(oracle::rel(e, oracle::baby_energy_unit()) < 1e-10);
}

TEST_CASE("baby energies against the field-space oracle") {
  for (const char* name : {"old:1", "old:2", "old:3"})
    for (double beta : {0.5, 2.0}) {
      ModelParams p;
      p.beta = beta;
      p.mu = 1.5;
      p.charge = 2;
      const PotentialSpec v = parse_potential(name);
      const double ref = oracle::dbi_energy(oracle::baby_geometry(2), beta, 1.5, [&](double h) { return v(h); });
      CAPTURE(name);
      CAPTURE(beta);
      CHECK(oracle::rel(energy_quadrature(solve_profile(p, v), p, v), ref) < 1e-8);
    }
}

TEST_CASE("Skyrme energies against the field-space oracle and closed forms") {
  for (double sigma : {0.25, 1.0, 4.0})
    for (const char* name : {"standard", "bps"}) {
      const ModelParams p = skyrme(sigma);
      const PotentialSpec v = parse_potential(name);
      const double ref = oracle::dbi_energy(oracle::skyrme_geometry(1.0, 1), 1.0, p.mu, [&](double x) { return v(x); });
      CAPTURE(sigma);
      CAPTURE(name);
      CHECK(oracle::rel(*closed_form_energy(p, v), ref) < 1e-10);
      CHECK(oracle::rel(energy_quadrature(solve_profile(p, v), p, v), ref) < 1e-8);
    }
  CHECK(skyrme_standard_energy_closed(skyrme(1.0)) == doctest::Approx(8 * std::sqrt(2.0) / (9 * oracle::pi)).epsilon(1e-14));
  CHECK(skyrme_bps_energy_closed(skyrme(1.0)) == doctest::Approx(0.3369666).epsilon(1e-6));
}

TEST_CASE("alternate standard-potential energy differs from the quadrature") {
  const ModelParams p = skyrme(1.0);
  CHECK(oracle::rel(skyrme_standard_energy_alternate(p), skyrme_standard_energy_closed(p)) > 1e-3);
}

TEST_CASE("power-law energies") {
  ModelParams p;
  p.kinetic = PowerLaw{1.0};
  const PotentialSpec v = parse_potential("old:1");
  const TargetMeasure m = TargetMeasure::for_sector(Sector::Baby2D);
  CHECK(power_family_energy_per_charge(p, v, m) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(oracle::rel(energy_quadrature(solve_profile(p, v), p, v), 4.0 / 3.0) < 1e-9);
  p.kinetic = PowerLaw{1.5};
  p.mu = 0.7;
  const double ref = oracle::power_energy(oracle::baby_geometry(1), 1.5, 0.7, [&](double h) { return v(h); });
  CHECK(oracle::rel(power_family_energy_per_charge(p, v, m), ref) < 1e-9);
}

TEST_CASE("average formula equals the quadrature per charge") {
  for (Sector s : {Sector::Baby2D, Sector::Skyrme3D}) {
    ModelParams p;
    p.sector = s;
    p.beta = 0.8;
    p.mu = 1.3;
    p.charge = 3;
    const PotentialSpec v = parse_potential(s == Sector::Baby2D ? "old:2" : "bps");
    const PerChargeEnergy avg = energy_per_charge_average(p, v, TargetMeasure::for_sector(s));
    const double e = energy_quadrature(solve_profile(p, v), p, v);
    CHECK(oracle::rel(avg.value, e / 3) < 1e-8);
    CHECK(avg.sqrt2_mu_prefactor == doctest::Approx(2 * avg.value));
  }
  ModelParams p;
  p.mu = 0;
  CHECK(energy_per_charge_average(p, parse_potential("old:1"), TargetMeasure::for_sector(Sector::Baby2D)).no_soliton);
}

TEST_CASE("charge quantization") {
  for (int n : {1, -2, 4}) {
    ModelParams p;
    p.charge = n;
    CHECK(charge_quadrature(solve_profile(p, parse_potential("old:3")), p) == doctest::Approx(n).epsilon(1e-9));
    const ModelParams q = skyrme(2.0, n);
    CHECK(charge_quadrature(solve_profile(q, parse_potential("standard")), q) == doctest::Approx(n).epsilon(1e-9));
  }
}

TEST_CASE("small mu and large beta sweeps") {
  ModelParams p;
  const MuSweep m = small_mu_sweep(p, {1e-2, 1e-3, 1e-4});
  CHECK(m.slope == doctest::Approx(2.0 / 3.0).epsilon(1e-3));
  const BetaSweep b = large_beta_sweep(p, parse_potential("old:1"), {10, 100, 1000});
  CHECK(b.exponent == doctest::Approx(-2.0).epsilon(0.02));
  CHECK(b.distance[0] > b.distance[2]);
}
