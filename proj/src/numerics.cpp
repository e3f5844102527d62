#include "dbibps/numerics.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dbibps {

namespace {

// One 15/31-point rule on [a,b]; error and L1 rescaled to the interval.
double gk_rule(const std::function<double(double)>& f, double a, double b, double* err, double* l1) {
  double e = 0.0, l = 0.0;
  const double r = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 0, 0.0, &e, &l);
  *err = e * 0.5 * std::abs(b - a);
  *l1 = l;
  return r;
}

double adapt(const std::function<double(double)>& f, double a, double b, double whole, double err,
             double l1, double abs_tol, int depth) {
  if (err <= abs_tol || err <= 50.0 * std::numeric_limits<double>::epsilon() * l1 || depth == 0) return whole;
  const double mid = 0.5 * (a + b);
  if (mid <= a || mid >= b) return whole;
  double e1, e2, l1a, l1b;
  const double left = gk_rule(f, a, mid, &e1, &l1a);
  const double right = gk_rule(f, mid, b, &e2, &l1b);
  return adapt(f, a, mid, left, e1, l1a, 0.5 * abs_tol, depth - 1) +
         adapt(f, mid, b, right, e2, l1b, 0.5 * abs_tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  double err = 0.0, l1 = 0.0;
  const double whole = gk_rule(f, a, b, &err, &l1);
  return adapt(f, a, b, whole, err, l1, tol * l1, 40);
}

double integrate_split(const std::function<double(double)>& f, std::vector<double> points,
                       double tol) {
  std::sort(points.begin(), points.end());
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) sum += integrate(f, points[i], points[i + 1], tol);
  return sum;
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double tol) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0) == (fhi > 0)) throw std::runtime_error("bisect: no sign change on bracket");
  for (int it = 0; it < 2000; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= std::min(lo, hi) || mid >= std::max(lo, hi) || std::abs(hi - lo) <= tol) break;
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

GoldenResult golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                                double tol) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  int it = 0;
  while (b - a > tol && it < 500) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
    ++it;
  }
  GoldenResult r;
  r.x = fc >= fd ? c : d;
  r.value = std::max(fc, fd);
  r.iterations = it;
  return r;
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_line: need >= 2 paired points");
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

double fit_slope_through_origin(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.empty()) throw std::invalid_argument("fit_slope_through_origin: bad input");
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += x[i] * y[i];
    sxx += x[i] * x[i];
  }
  return sxy / sxx;
}

}  // namespace dbibps
