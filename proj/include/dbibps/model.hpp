// Potentials, couplings and target-space geometry for the baby (h chart)
// and Skyrme (xi chart) sectors.
#pragma once

#include <functional>
#include <limits>
#include <string>
#include <variant>

namespace dbibps {

enum class Sector { Baby2D, Skyrme3D };

std::string to_string(Sector s);
Sector parse_sector(const std::string& text);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x, double slack = 0.0) const { return x >= lo - slack && x <= hi + slack; }
  double width() const { return hi - lo; }
};

// Target chart of a sector: h in [0,1] (baby) or xi in [0,pi] (Skyrme).
Interval sector_domain(Sector s);

enum class PotentialTag { OldBabyPower, SkyrmeStandard, BpsPotential, SkyrmePower, Custom };

struct PotentialSpec {
  std::function<double(double)> evaluate;
  std::function<double(double)> derivative;
  Interval domain;
  double vacuum_coordinate = 0.0;
  double vacuum_exponent = 1.0;
  PotentialTag tag = PotentialTag::Custom;
  double parameter = std::numeric_limits<double>::quiet_NaN();  // power for the power families

  double operator()(double s) const { return evaluate(s); }
  // Sector whose chart this potential lives on.
  Sector sector() const;
  // Short CLI form: old:1, standard, bps, pow:1.5, custom.
  std::string name() const;
};

// old-baby-power(a): V = h^a on [0,1]
// skyrme-standard:   V = 1 - cos xi
// bps-potential:     V = (xi - cos xi sin xi)/2
// skyrme-power(a):   V = (2 sin(xi/2))^a, i.e. xi^a near the vacuum
PotentialSpec make_potential(PotentialTag tag, double exponent = std::numeric_limits<double>::quiet_NaN());

// Parses old:a, standard, bps, pow:a.
PotentialSpec parse_potential(const std::string& text);

// Custom potential with a declared vacuum exponent.  The declaration is
// checked against a log-log fit near the vacuum (relative tolerance 2%).
PotentialSpec make_custom_potential(std::function<double(double)> evaluate,
                                    std::function<double(double)> derivative, Interval domain,
                                    double vacuum_coordinate, double vacuum_exponent);

// eta(xi) = (xi - sin xi cos xi)/2, accurate near xi = 0.
double eta_of_xi(double xi);

// Slope of log V against log(distance to vacuum) over distances [1e-7, 1e-4] of the domain width.
double fit_vacuum_exponent(const PotentialSpec& v);

struct DbiLaw {};
struct PowerLaw {
  double alpha = 1.0;
};
using KineticLaw = std::variant<DbiLaw, PowerLaw>;

struct ModelParams {
  double beta = 1.0;
  double mu = 1.0;
  int charge = 1;
  Sector sector = Sector::Baby2D;
  KineticLaw kinetic = DbiLaw{};
  double energy_scale = 1.0;

  bool is_dbi() const { return std::holds_alternative<DbiLaw>(kinetic); }
  double power_alpha() const;
  double sigma() const { return beta * beta / (mu * mu); }
};

// Throws std::invalid_argument on beta <= 0, mu < 0, n = 0, energy_scale <= 0,
// or a power law with alpha_K <= 1/2.
ModelParams validate_params(const ModelParams& p);

// Reduced radial geometry.  With f the chart field and c the reduced
// coordinate (x or z), the topological density is
//   B0 = kappa * J(f) * |df/dc|,
// the energy is  prefactor * integral dc [F(B0) + mu^2 V(f)],
// and the charge is  n * integral dc J(f)|df/dc| / volume.
struct Chart {
  Sector sector = Sector::Baby2D;
  double kappa = 1.0;
  double prefactor = 1.0;
  Interval domain;
  double volume = 1.0;

  static Chart of(const ModelParams& p);

  double jacobian(double f) const;
  // Integral of the jacobian from the vacuum to f: h, or eta = (xi - sin xi cos xi)/2.
  double volume_coordinate(double f) const;
  // prefactor * kappa * volume / |n|: 1 for baby, 1/3 for Skyrme.
  double energy_factor(int charge) const;
  const char* coordinate_name() const { return sector == Sector::Baby2D ? "x" : "z"; }
};

// Unit-mass measure on the target chart: 1 on [0,1], or (2/pi) sin^2 xi on [0,pi].
struct TargetMeasure {
  std::function<double(double)> weight;
  Interval domain;

  static TargetMeasure for_sector(Sector s);

  double average(const std::function<double(double)>& g) const;
  double mass() const;
};

}  // namespace dbibps
