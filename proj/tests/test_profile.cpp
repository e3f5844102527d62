#include <cmath>

#include "doctest.h"
#include "dbibps/observables.hpp"
#include "dbibps/profile.hpp"
#include "oracles.hpp"

using namespace dbibps;

TEST_CASE("baby compacton against the test-side closed form") {
  for (double beta : {0.5, 2.0})
    for (double mu : {0.5, 2.0}) {
      ModelParams p;
      p.beta = beta;
      p.mu = mu;
      p.charge = 2;
      const SolitonProfile prof = solve_profile(p, parse_potential("old:1"));
      CAPTURE(beta);
      CAPTURE(mu);
      REQUIRE(prof.compacton_radius);
      CHECK(*prof.compacton_radius == doctest::Approx(oracle::baby_radius(beta, mu, 2)).epsilon(1e-12));
      double sup = 0;
      for (const auto& s : prof.samples) sup = std::max(sup, std::abs(s.field - oracle::baby_profile(s.coordinate, beta, mu, 2)));
      CHECK(sup < 1e-8);
      CHECK(prof.samples.front().field == doctest::Approx(1.0));
      CHECK(prof.samples.back().field == 0.0);
    }
}

TEST_CASE("library closed forms agree with the implicit relations") {
  for (double sigma : {0.25, 1.0, 4.0}) {
    CHECK(skyrme_standard_radius(sigma) == doctest::Approx(oracle::skyrme_standard_radius(sigma)).epsilon(1e-14));
    CHECK(skyrme_bps_radius(sigma) == doctest::Approx(oracle::skyrme_bps_radius(sigma)).epsilon(1e-14));
    for (double z : {0.01, 0.5, 1.0}) {
      const double zz = z * skyrme_standard_radius(sigma);
      const double xi = skyrme_standard_exact(zz, sigma);
      CHECK(std::abs(oracle::skyrme_standard_relation(xi, sigma) - zz) < 1e-10);
      const double zb = z * skyrme_bps_radius(sigma);
      const double w = (skyrme_bps_radius(sigma) - zb) / sigma;
      CHECK(eta_of_xi(skyrme_bps_exact(zb, sigma)) == doctest::Approx(sigma * (std::sqrt(1 + w * w) - 1)).epsilon(1e-12));
    }
  }
  CHECK(skyrme_standard_radius(1.0) == 2.0);
  CHECK(skyrme_bps_eta(0.0, 1.0) == doctest::Approx(oracle::pi / 2).epsilon(1e-14));
}

TEST_CASE("solver reproduces the Skyrme closed-form profiles") {
  for (const char* name : {"standard", "bps"})
    for (double sigma : {0.25, 4.0}) {
      ModelParams p;
      p.sector = Sector::Skyrme3D;
      p.mu = 1.0 / std::sqrt(sigma);
      const PotentialSpec v = parse_potential(name);
      const SolitonProfile prof = solve_profile(p, v);
      const SolitonProfile ex = exact_profile(p, v);
      CAPTURE(name);
      CAPTURE(sigma);
      CHECK(std::abs(*prof.compacton_radius - *ex.compacton_radius) < 1e-8);
      CHECK(sup_field_error(prof, *ex.curve, ex.compacton_radius) < 1e-8);
    }
}

TEST_CASE("forward integration agrees with the inverse-map solver") {
  ModelParams p;
  p.mu = 0.8;
  for (const char* name : {"old:1", "old:2"}) {
    const PotentialSpec v = parse_potential(name);
    const SolitonProfile prof = solve_profile(p, v);
    const ForwardProfile fwd = forward_profile(p, v, 1e-6);
    double sup = 0;
    for (std::size_t i = 0; i < fwd.coordinate.size(); ++i)
      if (fwd.coordinate[i] < prof.extent) sup = std::max(sup, std::abs(fwd.field[i] - prof.curve->field(fwd.coordinate[i])));
    CAPTURE(name);
    CHECK(sup < 1e-6);
  }
}

TEST_CASE("no soliton at zero mass") {
  ModelParams p;
  p.mu = 0.0;
  CHECK_THROWS_AS(solve_profile(p, parse_potential("old:1")), NoSolitonError);
}

TEST_CASE("angular ansatz and coordinate maps") {
  for (double th : {0.3, 1.0, 2.5}) CHECK(angular_bracket(th) == doctest::Approx(0.25).epsilon(1e-13));
  ModelParams p;
  p.sector = Sector::Skyrme3D;
  p.beta = 2.0;
  CHECK(coordinate_map(1.5, Sector::Baby2D, p) == doctest::Approx(1.125));
  CHECK(coordinate_map(1.5, Sector::Skyrme3D, p) ==
        doctest::Approx(2 * std::sqrt(2.0) * 2.0 * oracle::pi * oracle::pi * 3.375).epsilon(1e-14));
}

TEST_CASE("localization thresholds") {
  CHECK(classify_localization(1.0, Sector::Baby2D) == Localization::Compacton);
  CHECK(classify_localization(2.0, Sector::Baby2D) == Localization::Exponential);
  CHECK(classify_localization(3.0, Sector::Baby2D) == Localization::PowerLaw);
  CHECK(classify_localization(2.0, Sector::Skyrme3D) == Localization::Compacton);
  CHECK(classify_localization(6.0, Sector::Skyrme3D) == Localization::Exponential);
  CHECK(classify_localization(7.0, Sector::Skyrme3D) == Localization::PowerLaw);
}

TEST_CASE("tail fits") {
  ModelParams p;
  CHECK(tail_fit(solve_profile(p, parse_potential("old:2"))).kind == Localization::Exponential);
  CHECK(tail_fit(solve_profile(p, parse_potential("old:3"))).kind == Localization::PowerLaw);
  p.sector = Sector::Skyrme3D;
  CHECK(tail_fit(solve_profile(p, parse_potential("pow:8"))).kind == Localization::PowerLaw);
}

TEST_CASE("endpoint asymptotics") {
  const EndpointAsymptotics a = endpoint_asymptotics(1.0);
  CHECK(a.core == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(a.edge == doctest::Approx(1.0));
}
