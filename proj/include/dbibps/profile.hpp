// Soliton profiles: inverse-map solver, closed-form evaluators and
// localization classification.
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dbibps/model.hpp"

namespace dbibps {

class NoSolitonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Continuous profile field(c) on the reduced coordinate c (x or z).
class ProfileCurve {
 public:
  explicit ProfileCurve(const Chart& chart) : chart_(chart) {}
  virtual ~ProfileCurve() = default;

  virtual double field(double c) const = 0;
  virtual double derivative(double c) const = 0;
  // J(f)|f'|, the rate of the chart volume coordinate.
  virtual double volume_rate(double c) const;
  // Integral over [0, min(upto, extent)] of h(field, volume_rate) dc.
  virtual double integrate(const std::function<double(double, double)>& h, double upto, double tol) const;
  // Coordinate where the field reaches the vacuum or the tail cut.
  virtual double extent() const = 0;

  const Chart& chart() const { return chart_; }

 protected:
  Chart chart_;
};

struct ProfileSample {
  double coordinate = 0.0;
  double field = 0.0;
  double derivative = 0.0;
  double energy_density = 0.0;
  double charge_density = 0.0;
};

struct SolitonProfile {
  Sector sector = Sector::Baby2D;
  std::string coordinate_name = "x";
  std::vector<ProfileSample> samples;
  std::optional<double> compacton_radius;
  double extent = 0.0;
  ModelParams params;
  std::shared_ptr<const ProfileCurve> curve;

  double spacing() const;
};

// Either a sample count over [0, extent] or a fixed spacing from 0.
// Compactons get `padding` extra vacuum samples beyond the radius.
struct GridSpec {
  int samples = 1000;
  double spacing = 0.0;
  int padding = 10;
};

// Solves the BPS law by quadrature of the inverse map c(field) from the
// anti-vacuum, resampled on a uniform grid.  Non-compact tails are cut at
// field 1e-9 above the vacuum.
SolitonProfile solve_profile(const ModelParams& p, const PotentialSpec& v, const GridSpec& grid = {});

// Samples an arbitrary curve on the grid, filling the densities.
SolitonProfile sample_profile(const ModelParams& p, const PotentialSpec& v,
                              std::shared_ptr<const ProfileCurve> curve, std::optional<double> radius,
                              const GridSpec& grid = {});

// Keeps the samples with field >= field_min; the result has no compacton radius.
SolitonProfile truncate_profile(const SolitonProfile& profile, double field_min);

// Sup over the samples of |field - reference(coordinate)|.  Samples within
// 1e-12 (relative) of either compacton radius are skipped: at a square-root
// edge one ulp in the radius moves the field by ~1e-8.  Compare the radii
// separately.
double sup_field_error(const SolitonProfile& profile, const ProfileCurve& reference,
                       std::optional<double> reference_radius);

// Closed forms.
double baby_old_radius(const ModelParams& p);
double baby_old_exact(double x, const ModelParams& p);
double skyrme_standard_lhs(double xi, double sigma);
double skyrme_standard_radius(double sigma);
double skyrme_standard_exact(double z, double sigma);
double skyrme_bps_radius(double sigma);
double skyrme_bps_eta(double z, double sigma);
double skyrme_bps_exact(double z, double sigma);

// Closed-form profile for old:1 (baby), standard or bps (Skyrme) with the DBI law.
SolitonProfile exact_profile(const ModelParams& p, const PotentialSpec& v, const GridSpec& grid = {});
bool has_exact_profile(const ModelParams& p, const PotentialSpec& v);

// Forward adaptive Runge-Kutta integration of the BPS law in the chart
// volume coordinate, stopped when the field drops below stop_field.
struct ForwardProfile {
  std::vector<double> coordinate;
  std::vector<double> field;
  double end_coordinate = 0.0;
};
ForwardProfile forward_profile(const ModelParams& p, const PotentialSpec& v, double stop_field = 1e-10);

double angular_profile(double theta);
// g g_theta/((1 + g^2)^2 sin theta), identically 1/4.
double angular_bracket(double theta);

double coordinate_map(double r, Sector sector, const ModelParams& p);

enum class Localization { Compacton, Exponential, PowerLaw, Ambiguous };
std::string to_string(Localization l);

// Vacuum exponent at which the BPS law stops producing compactons:
// 2 in h (baby), 6 in xi (Skyrme).
double localization_threshold(Sector sector);
Localization classify_localization(double vacuum_exponent, Sector sector);

struct TailFit {
  Localization kind = Localization::Compacton;
  double r2_exponential = 0.0;
  double r2_power = 0.0;
  std::size_t samples_used = 0;
};
// Compacton when the profile has a radius; otherwise compares log f
// against c and against log c over the samples with 0 < f - vacuum <= 1e-3.
TailFit tail_fit(const SolitonProfile& profile);

struct EndpointAsymptotics {
  double edge = 0.0;  // xi ~ edge * sqrt(2 (z0 - z))
  double core = 0.0;  // xi ~ pi - core * z^(1/3)
};
EndpointAsymptotics endpoint_asymptotics(double sigma);

}  // namespace dbibps
