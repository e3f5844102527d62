#include <cmath>
#include <numeric>

#include "doctest.h"
#include "dbibps/bounds.hpp"

using namespace dbibps;

TEST_CASE("Taylor coefficients of 1 - sqrt(1 - x)") {
  const std::vector<double> c = taylor_coefficients(5);
  CHECK(c[0] == 0.5);
  CHECK(c[1] == 0.125);
  CHECK(c[2] == 0.0625);
  CHECK(c[3] == doctest::Approx(5.0 / 128));
  CHECK(c[4] == doctest::Approx(7.0 / 256));
  const double x = 0.3;
  double s = 0;
  const std::vector<double> cc = taylor_coefficients(40);
  for (std::size_t k = 0; k < cc.size(); ++k) s += cc[k] * std::pow(x, k + 1);
  CHECK(s == doctest::Approx(1 - std::sqrt(1 - x)).epsilon(1e-14));
}

TEST_CASE("two-term bound constant") {
  const BoundCertificate c = optimize_bound(2, 1.0);
  CHECK(c.constant == doctest::Approx(std::pow(3.0, 1.5) / 2).epsilon(1e-15));
  CHECK(c.weights[0] == doctest::Approx(0.5));
}

TEST_CASE("three-term bound") {
  const BoundCertificate c = optimize_bound(3, 1.0, 7);
  REQUIRE(c.alpha);
  CHECK(*c.alpha == doctest::Approx(9.0 / 14).epsilon(1e-7));
  CHECK(c.constant == doctest::Approx(3.5).epsilon(1e-12));
  CHECK(bound_constant_alpha(0.64286) == doctest::Approx(3.5).epsilon(1e-8));
  CHECK(bound_constant_alpha(0.6) < c.constant);
  CHECK(bound_constant_alpha(0.7) < c.constant);
  const Sharpness sh = sharpness(c);
  CHECK(sh.minimum == doctest::Approx(c.constant).epsilon(1e-9));
}

TEST_CASE("weights are feasible and constants increase with order") {
  double prev = 0;
  for (int n = 2; n <= 8; ++n) {
    const BoundCertificate c = optimize_bound(n, 1.0, 3);
    const double sw = std::accumulate(c.weights.begin(), c.weights.end(), 0.0);
    double kw = 0;
    for (std::size_t k = 0; k < c.weights.size(); ++k) kw += (k + 1) * c.weights[k];
    CAPTURE(n);
    CHECK(sw == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(kw == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(c.constant >= prev - 1e-12);
    CHECK(c.constant < 4.0);
    CHECK(sharpness(c).minimum == doctest::Approx(c.constant).epsilon(1e-6));
    prev = c.constant;
  }
}

TEST_CASE("infeasible weights are rejected") {
  CHECK_NOTHROW(bound_constant({0.5, 0.5}));
  CHECK_THROWS_AS(bound_constant({0.3, 0.7}), std::invalid_argument);
  CHECK_THROWS_AS(bound_constant({0.6, 0.6}), std::invalid_argument);
  CHECK_THROWS_AS(optimize_bound(1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(optimize_bound(9, 1.0), std::invalid_argument);
}

TEST_CASE("pointwise slack and certification") {
  BoundCertificate c = optimize_bound(3, 2.0);
  CHECK(c.constant == doctest::Approx(3.5));
  const double l = 0.7;
  const double s = 3 * l * l;
  const double t = 0.5 * s + 0.125 * s * s / 4 + 0.0625 * s * s * s / 16;
  CHECK(pointwise_slack(c, {l, l, l}) == doctest::Approx(t - 3.5 / 2 * l * l * l).epsilon(1e-14));
  c = certify(c, 20000, 11);
  CHECK(*c.min_slack >= -1e-12);
  CHECK(c.samples >= 20000);
  BoundCertificate bad = c;
  bad.constant *= 1.05;
  CHECK(verify_pointwise(bad, 20000, 11).min_slack < 0);
}

TEST_CASE("reference comparison") {
  const ReferenceComparison r = compare_reference_constant(3.5);
  CHECK(r.reference == doctest::Approx(87.638).epsilon(1e-5));
  CHECK(r.bound == doctest::Approx(69.087).epsilon(1e-5));
  CHECK(r.relative_error == doctest::Approx(0.2117).epsilon(1e-3));
  BoundCertificate c = optimize_bound(3, 1.0);
  c.energy_scale = 2.0;
  CHECK(bound_energy(c, 2) == doctest::Approx(2.0 * 3.5 * 2 * M_PI * M_PI * 2));
}

TEST_CASE("optimizer is deterministic in the seed") {
  const BoundCertificate a = optimize_bound(6, 1.0, 42), b = optimize_bound(6, 1.0, 42);
  CHECK(a.weights == b.weights);
  CHECK(a.constant == b.constant);
}
