// First-order BPS law B0 = W(field) and second-order residual checks.
#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "dbibps/model.hpp"

namespace dbibps {

struct SolitonProfile;

// Kinetic energy density F(B0) and its derivative dF/dB0.
// DBI: beta^2 (1 - sqrt(1 - B0^2/(2 beta^2))).  Power: B0^(2 alpha_K).
double kinetic_density(const ModelParams& p, double b0);
double kinetic_flux(const ModelParams& p, double b0);

// sqrt(2) beta sqrt(1 - (mu^2 V/beta^2 + 1)^-2)
double dbi_bps_density(double v, const ModelParams& p);
// (mu^2 V/(2 alpha_K - 1))^(1/(2 alpha_K))
double power_bps_density(double v, double mu, double alpha_k);

struct NumericDensity {
  double value = 0.0;
  bool finite_difference = false;  // dF/dW was not supplied
};

// Root W >= 0 of W dF/dW - F = 0 with F = F(W, field), the full static
// density.  The bracket is [0, w_max] when w_max is finite, otherwise it is
// grown from [0,1] by doubling.
NumericDensity numeric_bps_density(const std::function<double(double, double)>& F, double field,
                                   const std::function<double(double, double)>& dF = {},
                                   double w_max = std::numeric_limits<double>::infinity());

enum class BpsOrigin { ClosedFormDbi, ClosedFormPower, NumericRoot };

struct BpsLaw {
  std::function<double(double)> density;  // field -> B0
  int sign = -1;
  BpsOrigin origin = BpsOrigin::ClosedFormDbi;

  double operator()(double field) const { return density(field); }
};

BpsLaw make_bps_law(const ModelParams& p, const PotentialSpec& v, bool numeric = false);

// d(field)/dc from the BPS law in the chart of p.
double field_slope(const ModelParams& p, const PotentialSpec& v, double field);

// h_x = -(2 sqrt(2) pi beta/|n|) sqrt(1 - (mu^2 V/beta^2 + 1)^-2)
double baby_bps_slope(double h, const PotentialSpec& v, const ModelParams& p);
// sin^2 xi * xi_z = -B0/(sqrt(2) beta)
double skyrme_bps_slope(double xi, const PotentialSpec& v, const ModelParams& p);

struct EomResidualReport {
  double spacing = 0.0;
  double max_residual = 0.0;
  std::vector<double> residuals;  // one per interior sample
  std::size_t first_checked = 0;  // indices into residuals
  std::size_t last_checked = 0;
};

// Reduced Euler-Lagrange residual kappa J(f) d/dc F'(B0) + mu^2 V'(f) by
// central differences, with B0 at half steps from differences of the
// chart volume coordinate.  The baby residual is scaled by -8 pi^2 to read
//   n^2 d/dx[h_x/sqrt(1 - n^2 h_x^2/(8 pi^2 beta^2))] - 8 pi^2 mu^2 V'(h).
// Samples closer than `margin` (default 5 spacings) to either end of the
// non-vacuum segment are not checked.
EomResidualReport eom_residual(const SolitonProfile& profile, const PotentialSpec& v,
                               double margin = -1.0);

// max residual(coarse)/max residual(fine) with both checked on the margin of the coarse grid.
double eom_richardson_ratio(const SolitonProfile& coarse, const SolitonProfile& fine,
                            const PotentialSpec& v);

}  // namespace dbibps
