// Test-side reference values computed without the library's solver paths.
#pragma once

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <functional>

namespace oracle {

inline constexpr double pi = 3.14159265358979323846;

inline double baby_radius(double beta, double mu, int n) {
  return std::abs(n) / (2.0 * pi) * std::sqrt(1.0 / (2.0 * beta * beta) + 1.0 / (mu * mu));
}

// h(x) for V = h from sqrt(q^2 - 1) = c (x0 - x), q = mu^2 h/beta^2 + 1, c = sqrt2 mu^2/(beta kappa).
inline double baby_profile(double x, double beta, double mu, int n) {
  const double x0 = baby_radius(beta, mu, n);
  if (x >= x0) return 0.0;
  const double kappa = std::abs(n) / (2.0 * pi);
  const double u = std::sqrt(2.0) * mu * mu / (beta * kappa) * (x0 - x);
  return beta * beta / (mu * mu) * (std::sqrt(1.0 + u * u) - 1.0);
}

inline double baby_energy_unit() { return std::sqrt(1.5) - std::log(2.0 + std::sqrt(3.0)) / (2.0 * std::sqrt(2.0)); }

// Implicit relation for V = 1 - cos xi in terms of cos xi.
inline double skyrme_standard_relation(double xi, double sigma) {
  const double c = std::cos(xi);
  return 0.5 * (sigma + c) * std::sqrt((1.0 + c) * (1.0 + 2.0 * sigma - c)) +
         (1.0 - sigma * sigma) * std::atan(std::sqrt(1.0 + c) / std::sqrt(1.0 + 2.0 * sigma - c));
}

inline double skyrme_standard_radius(double sigma) {
  return std::sqrt(sigma) * (1.0 + sigma) + (1.0 - sigma * sigma) * std::atan(1.0 / std::sqrt(sigma));
}

inline double skyrme_bps_radius(double sigma) { return std::sqrt(pi * pi / 4.0 + pi * sigma); }

// BPS energy as an integral over the target: on a BPS solution dc = kappa J df / W,
// so E = prefactor * int (F(W) + mu^2 V) kappa J / W df.
struct Geometry {
  double kappa, prefactor, lo, hi;
  std::function<double(double)> jacobian;
};

inline Geometry baby_geometry(int n) {
  return {std::abs(n) / (2.0 * pi), 2.0 * pi, 0.0, 1.0, [](double) { return 1.0; }};
}

inline Geometry skyrme_geometry(double beta, int n) {
  return {std::sqrt(2.0) * beta, std::sqrt(2.0) * std::abs(n) / (3.0 * pi * beta), 0.0, pi,
          [](double xi) { return std::sin(xi) * std::sin(xi); }};
}

inline double dbi_energy(const Geometry& g, double beta, double mu, const std::function<double(double)>& v) {
  auto integrand = [&](double f) {
    const double vv = v(f);
    if (vv <= 0.0) return 0.0;
    const double k = mu * mu * vv / (beta * beta);
    const double w2 = 2.0 * beta * beta * k * (k + 2.0) / ((k + 1.0) * (k + 1.0));
    if (w2 <= 0.0) return 0.0;
    const double fk = beta * beta * (1.0 - std::sqrt(1.0 - w2 / (2.0 * beta * beta)));
    return (fk + mu * mu * vv) * g.kappa * g.jacobian(f) / std::sqrt(w2);
  };
  boost::math::quadrature::tanh_sinh<double> ts;
  return g.prefactor * ts.integrate(integrand, g.lo, g.hi, 1e-14);
}

inline double power_energy(const Geometry& g, double alpha, double mu, const std::function<double(double)>& v) {
  auto integrand = [&](double f) {
    const double vv = v(f);
    if (vv <= 0.0) return 0.0;
    const double w = std::pow(mu * mu * vv / (2.0 * alpha - 1.0), 1.0 / (2.0 * alpha));
    if (w <= 0.0) return 0.0;
    return (std::pow(w, 2.0 * alpha) + mu * mu * vv) * g.kappa * g.jacobian(f) / w;
  };
  boost::math::quadrature::tanh_sinh<double> ts;
  return g.prefactor * ts.integrate(integrand, g.lo, g.hi, 1e-14);
}

inline double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace oracle
