#include "dbibps/model.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "dbibps/numerics.hpp"

namespace dbibps {

namespace {

constexpr double kPi = std::numbers::pi;

// (xi - sin xi cos xi)/2, with the series near zero where the difference cancels.
double eta_value(double xi) {
  if (std::abs(xi) < 0.25) {
    const double t = 2.0 * xi;
    const double t2 = t * t;
    double term = t * t2 / 6.0;  // (2xi)^3/3!
    double sum = 0.0;
    for (int k = 1; k < 30; ++k) {
      sum += term;
      term *= -t2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return 0.25 * sum;
  }
  return 0.5 * (xi - std::sin(xi) * std::cos(xi));
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  // Shortest form that still parses back exactly.
  for (int prec = 1; prec < 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) return buf;
  }
  return s;
}

bool same_interval(const Interval& a, const Interval& b) {
  return std::abs(a.lo - b.lo) <= 1e-12 && std::abs(a.hi - b.hi) <= 1e-12;
}

}  // namespace

double eta_of_xi(double xi) { return eta_value(xi); }

std::string to_string(Sector s) { return s == Sector::Baby2D ? "baby" : "skyrme"; }

Sector parse_sector(const std::string& text) {
  if (text == "baby" || text == "Baby2D") return Sector::Baby2D;
  if (text == "skyrme" || text == "Skyrme3D") return Sector::Skyrme3D;
  throw std::invalid_argument("unknown sector '" + text + "' (expected baby or skyrme)");
}

Interval sector_domain(Sector s) {
  return s == Sector::Baby2D ? Interval{0.0, 1.0} : Interval{0.0, kPi};
}

Sector PotentialSpec::sector() const {
  if (same_interval(domain, sector_domain(Sector::Baby2D))) return Sector::Baby2D;
  if (same_interval(domain, sector_domain(Sector::Skyrme3D))) return Sector::Skyrme3D;
  throw std::invalid_argument("potential domain matches neither the baby nor the Skyrme chart");
}

std::string PotentialSpec::name() const {
  switch (tag) {
    case PotentialTag::OldBabyPower: return "old:" + format_number(parameter);
    case PotentialTag::SkyrmeStandard: return "standard";
    case PotentialTag::BpsPotential: return "bps";
    case PotentialTag::SkyrmePower: return "pow:" + format_number(parameter);
    case PotentialTag::Custom: return "custom";
  }
  return "custom";
}

PotentialSpec make_potential(PotentialTag tag, double exponent) {
  PotentialSpec v;
  v.tag = tag;
  v.vacuum_coordinate = 0.0;
  switch (tag) {
    case PotentialTag::OldBabyPower: {
      if (!(exponent > 0.0) || !std::isfinite(exponent))
        throw std::invalid_argument("old-baby-power needs a positive exponent");
      const double a = exponent;
      v.evaluate = [a](double h) { return h <= 0.0 ? 0.0 : std::pow(h, a); };
      v.derivative = [a](double h) {
        if (h <= 0.0) return a < 1.0 ? std::numeric_limits<double>::infinity() : (a == 1.0 ? 1.0 : 0.0);
        return a * std::pow(h, a - 1.0);
      };
      v.domain = sector_domain(Sector::Baby2D);
      v.vacuum_exponent = a;
      v.parameter = a;
      return v;
    }
    case PotentialTag::SkyrmeStandard: {
      v.evaluate = [](double xi) {
        const double s = std::sin(0.5 * xi);
        return 2.0 * s * s;
      };
      v.derivative = [](double xi) { return std::sin(xi); };
      v.domain = sector_domain(Sector::Skyrme3D);
      v.vacuum_exponent = 2.0;
      return v;
    }
    case PotentialTag::BpsPotential: {
      v.evaluate = [](double xi) { return eta_value(xi); };
      v.derivative = [](double xi) {
        const double s = std::sin(xi);
        return s * s;
      };
      v.domain = sector_domain(Sector::Skyrme3D);
      v.vacuum_exponent = 3.0;
      return v;
    }
    case PotentialTag::SkyrmePower: {
      if (!(exponent > 0.0) || !std::isfinite(exponent))
        throw std::invalid_argument("skyrme-power needs a positive exponent");
      const double a = exponent;
      v.evaluate = [a](double xi) { return xi <= 0.0 ? 0.0 : std::pow(2.0 * std::sin(0.5 * xi), a); };
      v.derivative = [a](double xi) {
        if (xi <= 0.0) return a < 1.0 ? std::numeric_limits<double>::infinity() : (a == 1.0 ? 1.0 : 0.0);
        return a * std::pow(2.0 * std::sin(0.5 * xi), a - 1.0) * std::cos(0.5 * xi);
      };
      v.domain = sector_domain(Sector::Skyrme3D);
      v.vacuum_exponent = a;
      v.parameter = a;
      return v;
    }
    case PotentialTag::Custom:
      throw std::invalid_argument("custom potentials are built with make_custom_potential");
  }
  throw std::invalid_argument("unknown potential tag");
}

PotentialSpec parse_potential(const std::string& text) {
  auto number_after = [&](std::size_t pos) {
    const std::string tail = text.substr(pos);
    std::size_t used = 0;
    double a = 0.0;
    try {
      a = std::stod(tail, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad potential exponent in '" + text + "'");
    }
    if (used != tail.size()) throw std::invalid_argument("bad potential exponent in '" + text + "'");
    return a;
  };
  if (text.rfind("old:", 0) == 0) return make_potential(PotentialTag::OldBabyPower, number_after(4));
  if (text.rfind("pow:", 0) == 0) return make_potential(PotentialTag::SkyrmePower, number_after(4));
  if (text == "standard") return make_potential(PotentialTag::SkyrmeStandard);
  if (text == "bps") return make_potential(PotentialTag::BpsPotential);
  throw std::invalid_argument("unknown potential '" + text + "' (expected old:a, standard, bps or pow:a)");
}

double fit_vacuum_exponent(const PotentialSpec& v) {
  std::vector<double> lx, ly;
  const double w = v.domain.width();
  for (int i = 0; i <= 6; ++i) {
    const double d = w * std::pow(10.0, -7.0 + 0.5 * i);
    const double value = v.evaluate(v.vacuum_coordinate + d);
    if (!(value > 0.0)) throw std::invalid_argument("potential vanishes next to its vacuum");
    lx.push_back(std::log(d));
    ly.push_back(std::log(value));
  }
  return fit_line(lx, ly).slope;
}

PotentialSpec make_custom_potential(std::function<double(double)> evaluate,
                                    std::function<double(double)> derivative, Interval domain,
                                    double vacuum_coordinate, double vacuum_exponent) {
  PotentialSpec v;
  v.evaluate = std::move(evaluate);
  v.derivative = std::move(derivative);
  v.domain = domain;
  v.vacuum_coordinate = vacuum_coordinate;
  v.vacuum_exponent = vacuum_exponent;
  v.tag = PotentialTag::Custom;
  (void)v.sector();
  if (!(vacuum_exponent > 0.0)) throw std::invalid_argument("vacuum exponent must be positive");
  if (vacuum_coordinate != domain.lo)
    throw std::invalid_argument("the vacuum must sit at the lower end of the chart");
  if (std::abs(v.evaluate(vacuum_coordinate)) > 1e-14)
    throw std::invalid_argument("potential does not vanish at the declared vacuum");
  for (int i = 0; i <= 1000; ++i) {
    const double s = domain.lo + domain.width() * i / 1000.0;
    if (v.evaluate(s) < 0.0) throw std::invalid_argument("potential is negative inside the chart");
  }
  const double fitted = fit_vacuum_exponent(v);
  if (std::abs(fitted - vacuum_exponent) > 0.02 * vacuum_exponent) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "declared vacuum exponent %.6g disagrees with log-log fit %.6g",
                  vacuum_exponent, fitted);
    throw std::invalid_argument(buf);
  }
  return v;
}

double ModelParams::power_alpha() const {
  if (const auto* p = std::get_if<PowerLaw>(&kinetic)) return p->alpha;
  throw std::logic_error("kinetic law is DBI, not a power law");
}

ModelParams validate_params(const ModelParams& p) {
  if (!(p.beta > 0.0) || !std::isfinite(p.beta)) throw std::invalid_argument("beta must be positive and finite");
  if (!(p.mu >= 0.0) || !std::isfinite(p.mu)) throw std::invalid_argument("mu must be non-negative and finite");
  if (p.charge == 0) throw std::invalid_argument("charge n = 0 carries no topology");
  if (!(p.energy_scale > 0.0) || !std::isfinite(p.energy_scale))
    throw std::invalid_argument("energy_scale must be positive");
  if (const auto* law = std::get_if<PowerLaw>(&p.kinetic)) {
    if (!(law->alpha > 0.5) || !std::isfinite(law->alpha))
      throw std::invalid_argument(
          "power kinetic law requires alpha_K > 1/2 (otherwise the BPS density "
          "(mu^2 V/(2 alpha_K - 1))^(1/(2 alpha_K)) is undefined)");
  }
  return p;
}

Chart Chart::of(const ModelParams& p) {
  Chart c;
  c.sector = p.sector;
  c.domain = sector_domain(p.sector);
  const double n = std::abs(static_cast<double>(p.charge));
  if (p.sector == Sector::Baby2D) {
    c.kappa = n / (2.0 * kPi);
    c.prefactor = 2.0 * kPi;
    c.volume = 1.0;
  } else {
    c.kappa = std::sqrt(2.0) * p.beta;
    c.prefactor = std::sqrt(2.0) * n / (3.0 * kPi * p.beta);
    c.volume = 0.5 * kPi;
  }
  return c;
}

double Chart::jacobian(double f) const {
  if (sector == Sector::Baby2D) return 1.0;
  const double s = std::sin(f);
  return s * s;
}

double Chart::volume_coordinate(double f) const {
  return sector == Sector::Baby2D ? f : eta_value(f);
}

double Chart::energy_factor(int charge) const {
  return prefactor * kappa * volume / std::abs(static_cast<double>(charge));
}

TargetMeasure TargetMeasure::for_sector(Sector s) {
  TargetMeasure m;
  m.domain = sector_domain(s);
  if (s == Sector::Baby2D) {
    m.weight = [](double) { return 1.0; };
  } else {
    m.weight = [](double xi) {
      const double sn = std::sin(xi);
      return (2.0 / kPi) * sn * sn;
    };
  }
  return m;
}

double TargetMeasure::average(const std::function<double(double)>& g) const {
  return integrate([&](double s) { return weight(s) * g(s); }, domain.lo, domain.hi, 1e-14);
}

double TargetMeasure::mass() const {
  return average([](double) { return 1.0; });
}

}  // namespace dbibps
