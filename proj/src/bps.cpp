#include "dbibps/bps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dbibps/numerics.hpp"
#include "dbibps/profile.hpp"

namespace dbibps {

namespace {

constexpr double kPi = std::numbers::pi;

double dbi_ceiling(const ModelParams& p) { return std::sqrt(2.0) * p.beta; }

}  // namespace

double kinetic_density(const ModelParams& p, double b0) {
  if (p.is_dbi()) {
    const double x = b0 * b0 / (2.0 * p.beta * p.beta);
    if (x > 1.0) throw std::domain_error("B0 above the DBI ceiling sqrt(2) beta");
    // beta^2 (1 - sqrt(1-x)) without cancellation
    return p.beta * p.beta * x / (1.0 + std::sqrt(1.0 - x));
  }
  return std::pow(b0, 2.0 * p.power_alpha());
}

double kinetic_flux(const ModelParams& p, double b0) {
  if (p.is_dbi()) {
    const double x = b0 * b0 / (2.0 * p.beta * p.beta);
    if (x >= 1.0) throw std::domain_error("B0 at or above the DBI ceiling sqrt(2) beta");
    return 0.5 * b0 / std::sqrt(1.0 - x);
  }
  const double a = p.power_alpha();
  if (b0 == 0.0) return 0.0;
  return 2.0 * a * std::pow(b0, 2.0 * a - 1.0);
}

double dbi_bps_density(double v, const ModelParams& p) {
  if (v < 0.0) throw std::invalid_argument("dbi_bps_density: negative potential value");
  const double e = p.mu * p.mu * v / (p.beta * p.beta);
  // sqrt(1 - (1+e)^-2) = sqrt(e (2+e))/(1+e)
  return std::sqrt(2.0) * p.beta * std::sqrt(e * (2.0 + e)) / (1.0 + e);
}

double power_bps_density(double v, double mu, double alpha_k) {
  if (!(alpha_k > 0.5)) throw std::invalid_argument("power_bps_density: alpha_K must exceed 1/2");
  if (v < 0.0) throw std::invalid_argument("power_bps_density: negative potential value");
  return std::pow(mu * mu * v / (2.0 * alpha_k - 1.0), 1.0 / (2.0 * alpha_k));
}

NumericDensity numeric_bps_density(const std::function<double(double, double)>& F, double field,
                                   const std::function<double(double, double)>& dF, double w_max) {
  NumericDensity out;
  out.finite_difference = !dF;
  auto derivative = [&](double w) {
    if (dF) return dF(w, field);
    // Richardson-extrapolated central difference, one-sided near W = 0 and W_max.
    double h = 1e-3 * std::max(1.0, std::abs(w));
    if (std::isfinite(w_max)) h = std::min(h, 0.25 * w_max);
    if (w - h < 0.0) {
      auto d1 = [&](double s) { return (F(w + s, field) - F(w, field)) / s; };
      return 2.0 * d1(0.5 * h) - d1(h);
    }
    if (w + h > w_max) {
      auto d1 = [&](double s) { return (F(w, field) - F(w - s, field)) / s; };
      return 2.0 * d1(0.5 * h) - d1(h);
    }
    auto d = [&](double s) { return (F(w + s, field) - F(w - s, field)) / (2.0 * s); };
    return (4.0 * d(0.5 * h) - d(h)) / 3.0;
  };
  auto g = [&](double w) { return w * derivative(w) - F(w, field); };

  double lo = 0.0;
  if (g(lo) >= 0.0) return out;  // vacuum root W = 0
  double hi;
  if (std::isfinite(w_max)) {
    hi = w_max * (1.0 - 1e-12);
    if (!(g(hi) > 0.0)) throw std::runtime_error("numeric_bps_density: no sign change on [0, W_max]");
  } else {
    hi = 1.0;
    while (!(g(hi) > 0.0)) {
      lo = hi;
      hi *= 2.0;
      if (hi > 1e12) throw std::runtime_error("numeric_bps_density: no sign change found");
    }
  }
  double w = bisect(g, lo, hi, 0.0);
  // Newton polish, kept only if it lowers |g|.
  const double gw = g(w);
  const double eps = 1e-7 * std::max(1.0, w);
  const double up = std::min(w + eps, hi), down = std::max(0.0, w - eps);
  const double slope = (g(up) - g(down)) / (up - down);
  if (slope != 0.0 && std::isfinite(slope)) {
    const double cand = w - gw / slope;
    if (cand >= 0.0 && cand < hi && std::abs(g(cand)) < std::abs(gw)) w = cand;
  }
  out.value = w;
  return out;
}

BpsLaw make_bps_law(const ModelParams& p, const PotentialSpec& v, bool numeric) {
  BpsLaw law;
  law.sign = -1;
  if (!numeric) {
    if (p.is_dbi()) {
      law.origin = BpsOrigin::ClosedFormDbi;
      law.density = [p, v](double f) { return dbi_bps_density(std::max(0.0, v(f)), p); };
    } else {
      law.origin = BpsOrigin::ClosedFormPower;
      const double a = p.power_alpha();
      law.density = [p, v, a](double f) { return power_bps_density(std::max(0.0, v(f)), p.mu, a); };
    }
    return law;
  }
  law.origin = BpsOrigin::NumericRoot;
  auto F = [p, v](double w, double f) { return kinetic_density(p, w) + p.mu * p.mu * v(f); };
  auto dF = [p](double w, double) { return kinetic_flux(p, w); };
  const double w_max = p.is_dbi() ? dbi_ceiling(p) : std::numeric_limits<double>::infinity();
  law.density = [F, dF, w_max](double f) { return numeric_bps_density(F, f, dF, w_max).value; };
  return law;
}

double field_slope(const ModelParams& p, const PotentialSpec& v, double field) {
  const Chart chart = Chart::of(p);
  const double w = p.is_dbi() ? dbi_bps_density(std::max(0.0, v(field)), p)
                              : power_bps_density(std::max(0.0, v(field)), p.mu, p.power_alpha());
  if (w == 0.0) return 0.0;
  return -w / (chart.kappa * chart.jacobian(field));
}

double baby_bps_slope(double h, const PotentialSpec& v, const ModelParams& p) {
  if (p.sector != Sector::Baby2D) throw std::invalid_argument("baby_bps_slope: sector is not baby");
  if (!(h >= 0.0 && h <= 1.0)) throw std::invalid_argument("baby_bps_slope: h outside [0,1]");
  return field_slope(p, v, h);
}

double skyrme_bps_slope(double xi, const PotentialSpec& v, const ModelParams& p) {
  if (p.sector != Sector::Skyrme3D) throw std::invalid_argument("skyrme_bps_slope: sector is not Skyrme");
  if (!(xi >= 0.0 && xi <= kPi)) throw std::invalid_argument("skyrme_bps_slope: xi outside [0,pi]");
  const double w = p.is_dbi() ? dbi_bps_density(std::max(0.0, v(xi)), p)
                              : power_bps_density(std::max(0.0, v(xi)), p.mu, p.power_alpha());
  return -w / Chart::of(p).kappa;
}

namespace {

struct Segment {
  double start = 0.0;
  double end = 0.0;
};

// Coordinates bounding the samples that are off the vacuum.
Segment live_segment(const SolitonProfile& profile, double vacuum) {
  Segment s;
  const auto& xs = profile.samples;
  s.start = xs.front().coordinate;
  s.end = xs.back().coordinate;
  if (profile.compacton_radius) {
    s.end = *profile.compacton_radius;
  } else {
    for (std::size_t i = xs.size(); i-- > 0;) {
      if (xs[i].field > vacuum) {
        s.end = xs[i].coordinate;
        break;
      }
    }
  }
  return s;
}

}  // namespace

EomResidualReport eom_residual(const SolitonProfile& profile, const PotentialSpec& v, double margin) {
  const auto& xs = profile.samples;
  if (xs.size() < 102) throw std::invalid_argument("eom_residual: need at least 100 interior samples");
  const double delta = profile.spacing();
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double d = xs[i].coordinate - xs[i - 1].coordinate;
    if (std::abs(d - delta) > 1e-9 * delta) throw std::invalid_argument("eom_residual: grid is not uniform");
  }
  if (margin < 0.0) margin = 5.0 * delta;
  const ModelParams& p = profile.params;
  const Chart chart = Chart::of(p);
  const double vacuum = v.vacuum_coordinate;
  const double mu2 = p.mu * p.mu;
  const double scale = p.sector == Sector::Baby2D ? -8.0 * kPi * kPi : 1.0;

  std::vector<double> vol(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) vol[i] = chart.volume_coordinate(xs[i].field);
  auto flux_half = [&](std::size_t i) {  // F'(B0) at i + 1/2
    const double b0 = chart.kappa * std::abs(vol[i + 1] - vol[i]) / delta;
    return kinetic_flux(p, b0);
  };

  const Segment seg = live_segment(profile, vacuum);
  EomResidualReport rep;
  rep.spacing = delta;
  rep.residuals.assign(xs.size() - 2, 0.0);
  bool any = false;
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    const bool at_vacuum = xs[i - 1].field <= vacuum && xs[i].field <= vacuum && xs[i + 1].field <= vacuum;
    double r = 0.0;
    if (!at_vacuum) {
      const double dflux = (flux_half(i) - flux_half(i - 1)) / delta;
      r = scale * (chart.kappa * chart.jacobian(xs[i].field) * dflux + mu2 * v.derivative(xs[i].field));
    }
    rep.residuals[i - 1] = r;
    const double c = xs[i].coordinate;
    if (c < seg.start + margin || c > seg.end - margin) continue;
    if (!any) rep.first_checked = i - 1;
    rep.last_checked = i - 1;
    any = true;
    rep.max_residual = std::max(rep.max_residual, std::abs(r));
  }
  if (!any) throw std::invalid_argument("eom_residual: no samples left after the edge margin");
  return rep;
}

double eom_richardson_ratio(const SolitonProfile& coarse, const SolitonProfile& fine, const PotentialSpec& v) {
  const double margin = 5.0 * coarse.spacing();
  const double a = eom_residual(coarse, v, margin).max_residual;
  const double b = eom_residual(fine, v, margin).max_residual;
  return a / b;
}

}  // namespace dbibps
