#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "dbibps/bps.hpp"
#include "dbibps/profile.hpp"
#include "oracles.hpp"

using namespace dbibps;

TEST_CASE("DBI density is the BPS root of W F' - F") {
  ModelParams p;
  p.beta = 0.7;
  p.mu = 1.3;
  for (double v : {1e-12, 1e-4, 0.3, 1.0, 40.0}) {
    const double w = dbi_bps_density(v, p);
    CAPTURE(v);
    const double lhs = w * kinetic_flux(p, w) - kinetic_density(p, w);
    const double q = p.mu * p.mu * v / (p.beta * p.beta) + 1.0;
    CHECK(std::abs(lhs - p.mu * p.mu * v) <= 1e-14 * q * q * (1.0 + p.mu * p.mu * v));
    CHECK(w < std::sqrt(2.0) * p.beta);
  }
  CHECK(dbi_bps_density(0.0, p) == 0.0);
}

TEST_CASE("power density is the BPS root") {
  ModelParams p;
  p.kinetic = PowerLaw{1.5};
  p.mu = 0.8;
  for (double v : {1e-6, 0.5, 2.0}) {
    const double w = power_bps_density(v, p.mu, 1.5);
    CHECK(w * kinetic_flux(p, w) - kinetic_density(p, w) == doctest::Approx(p.mu * p.mu * v).epsilon(1e-13));
  }
}

TEST_CASE("numeric root matches the closed forms") {
  ModelParams p;
  p.beta = 1.2;
  p.mu = 0.9;
  const PotentialSpec v = parse_potential("old:1");
  auto F = [&](double w, double h) { return kinetic_density(p, w) + p.mu * p.mu * v(h); };
  auto dF = [&](double w, double) { return kinetic_flux(p, w); };
  for (double h : {0.01, 0.5, 1.0}) {
    const NumericDensity with = numeric_bps_density(F, h, dF, std::sqrt(2.0) * p.beta);
    CHECK_FALSE(with.finite_difference);
    CHECK(with.value == doctest::Approx(dbi_bps_density(v(h), p)).epsilon(1e-12));
    const NumericDensity fd = numeric_bps_density(F, h, {}, std::sqrt(2.0) * p.beta);
    CHECK(fd.finite_difference);
    CHECK(fd.value == doctest::Approx(dbi_bps_density(v(h), p)).epsilon(1e-7));
  }
  const BpsLaw law = make_bps_law(p, v, true);
  CHECK(law.origin == BpsOrigin::NumericRoot);
  CHECK(law(0.4) == doctest::Approx(make_bps_law(p, v)(0.4)).epsilon(1e-12));
}

TEST_CASE("slopes in each chart") {
  ModelParams p;
  p.charge = 2;
  const PotentialSpec v = parse_potential("old:1");
  const double h = 0.6;
  const double expected = -(2 * std::sqrt(2.0) * oracle::pi / 2) * std::sqrt(1 - std::pow(v(h) + 1, -2));
  CHECK(baby_bps_slope(h, v, p) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(field_slope(p, v, h) == doctest::Approx(expected).epsilon(1e-14));
  p.sector = Sector::Skyrme3D;
  p.beta = 1.5;
  const PotentialSpec s = parse_potential("standard");
  const double xi = 1.1;
  const double w = dbi_bps_density(s(xi), p);
  CHECK(skyrme_bps_slope(xi, s, p) == doctest::Approx(-w / (std::sqrt(2.0) * p.beta)).epsilon(1e-14));
  CHECK(field_slope(p, s, xi) * std::sin(xi) * std::sin(xi) == doctest::Approx(skyrme_bps_slope(xi, s, p)).epsilon(1e-14));
}

TEST_CASE("EOM residual of an exact compacton converges at second order") {
  ModelParams p;
  const PotentialSpec v = parse_potential("old:1");
  GridSpec coarse, fine;
  coarse.spacing = 1e-3;
  fine.spacing = 5e-4;
  const SolitonProfile a = exact_profile(p, v, coarse), b = exact_profile(p, v, fine);
  const EomResidualReport ra = eom_residual(a, v);
  CHECK(ra.max_residual < 1e-3);
  CHECK(eom_richardson_ratio(a, b, v) == doctest::Approx(4.0).epsilon(0.1));
}

TEST_CASE("EOM residual detects a perturbation") {
  ModelParams p;
  const PotentialSpec v = parse_potential("old:1");
  GridSpec g;
  g.spacing = 1e-3;
  SolitonProfile a = exact_profile(p, v, g);
  const double base = eom_residual(a, v).max_residual;
  for (auto& s : a.samples) s.field += 1e-3 * std::exp(-std::pow((s.coordinate - 0.1) / 0.02, 2));
  CHECK(eom_residual(a, v).max_residual > 100 * base);
}

TEST_CASE("EOM residual rejects short grids") {
  ModelParams p;
  GridSpec g;
  g.samples = 50;
  const PotentialSpec v = parse_potential("old:1");
  CHECK_THROWS_AS(eom_residual(solve_profile(p, v, g), v), std::invalid_argument);
}
