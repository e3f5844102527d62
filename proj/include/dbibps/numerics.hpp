// Quadrature, root finding and fitting helpers.
#pragma once

#include <functional>
#include <vector>

namespace dbibps {

// Adaptive Gauss-Kronrod (15/31 point) on [a,b]; tol is relative to the L1 norm.
double integrate(const std::function<double(double)>& f, double a, double b, double tol = 1e-13);

// Adaptive Gauss-Kronrod with the integrand split at interior points.
double integrate_split(const std::function<double(double)>& f, std::vector<double> points,
                       double tol = 1e-13);

// Bisection for a sign change of f on [lo,hi] until the bracket is below tol
// or stops shrinking.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tol = 0.0);

// Golden-section maximization of a unimodal function on [lo,hi].
struct GoldenResult {
  double x = 0.0;
  double value = 0.0;
  int iterations = 0;
};
GoldenResult golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                                double tol = 1e-12);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Least-squares slope of y = k x.
double fit_slope_through_origin(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace dbibps
