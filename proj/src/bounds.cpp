#include "dbibps/bounds.hpp"

#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "dbibps/numerics.hpp"

namespace dbibps {

namespace {

constexpr double kPi = std::numbers::pi;

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double log_constant(const std::vector<double>& a, const std::vector<double>& w) {
  double s = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k] > 0.0) s += w[k] * (std::log(a[k]) - std::log(w[k]));
  return s;
}

// a_k = c_k 3^k
std::vector<double> am_gm_terms(int n) {
  std::vector<double> c = taylor_coefficients(n);
  for (int k = 0; k < n; ++k) c[k] *= std::pow(3.0, k + 1);
  return c;
}

// Weights from the free variables w_3..w_N.
std::vector<double> complete_weights(const std::vector<double>& free) {
  std::vector<double> w(free.size() + 2);
  double s1 = 0.0, s2 = 0.0;
  for (std::size_t j = 0; j < free.size(); ++j) {
    const double k = static_cast<double>(j + 3);
    w[j + 2] = free[j];
    s1 += (k - 1.0) * free[j];
    s2 += (k - 2.0) * free[j];
  }
  w[0] = 0.5 + s2;
  w[1] = std::max(0.0, 0.5 - s1);
  return w;
}

}  // namespace

std::vector<double> taylor_coefficients(int n) {
  if (n < 1) throw std::invalid_argument("taylor_coefficients: N must be >= 1");
  std::vector<double> c(static_cast<std::size_t>(n));
  // c_1 = 1/2, c_{k+1} = c_k (2k - 1)/(2k + 2)
  c[0] = 0.5;
  for (int k = 1; k < n; ++k) c[k] = c[k - 1] * (2.0 * k - 1.0) / (2.0 * k + 2.0);
  return c;
}

double bound_constant(const std::vector<double>& weights) {
  if (weights.size() < 2) throw std::invalid_argument("bound_constant: need at least two weights");
  double s = 0.0, m = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights[k] < -1e-10) throw std::invalid_argument("bound_constant: negative weight");
    s += weights[k];
    m += static_cast<double>(k + 1) * weights[k];
  }
  if (std::abs(s - 1.0) > 1e-10) throw std::invalid_argument("bound_constant: weights do not sum to 1");
  if (std::abs(m - 1.5) > 1e-10)
    throw std::invalid_argument("bound_constant: eigenvalue-product exponent differs from 1");
  std::vector<double> w(weights);
  for (double& x : w) x = std::max(0.0, x);
  return std::exp(log_constant(am_gm_terms(static_cast<int>(w.size())), w));
}

std::vector<double> three_term_weights(double alpha) {
  if (!(alpha >= 0.5 && alpha <= 0.75)) throw std::invalid_argument("alpha must lie in [1/2, 3/4]");
  return {alpha, 1.5 - 2.0 * alpha, alpha - 0.5};
}

double bound_constant_alpha(double alpha) { return bound_constant(three_term_weights(alpha)); }

BoundCertificate optimize_bound(int order, double beta, std::uint64_t seed, double energy_scale) {
  if (order < 2 || order > 8) throw std::invalid_argument("optimize_bound: order must be in 2..8");
  if (!(beta > 0.0)) throw std::invalid_argument("optimize_bound: beta must be positive");
  BoundCertificate cert;
  cert.order = order;
  cert.beta = beta;
  cert.energy_scale = energy_scale;
  cert.seed = seed;
  if (order == 2) {
    cert.weights = {0.5, 0.5};
    cert.constant = 1.5 * std::sqrt(3.0);
    return cert;
  }
  if (order == 3) {
    const GoldenResult r = golden_section_max(
        [](double a) { return std::log(bound_constant_alpha(a)); }, 0.5 + 1e-9, 0.75 - 1e-9, 1e-12);
    cert.alpha = r.x;
    cert.weights = three_term_weights(r.x);
    cert.constant = bound_constant(cert.weights);
    cert.optimizer_sweeps = r.iterations;
    return cert;
  }
  const std::vector<double> a = am_gm_terms(order);
  const std::size_t dim = static_cast<std::size_t>(order - 2);
  auto objective = [&](const std::vector<double>& free) { return log_constant(a, complete_weights(free)); };
  std::mt19937_64 rng(seed);
  std::vector<double> best_free;
  double best_value = -std::numeric_limits<double>::infinity();
  int best_sweeps = 0;
  bool all_converged = true;
  for (int start = 0; start < 10; ++start) {
    // Feasible start: sum (k-1) w_k <= 1/2 with w_k >= 0.
    std::vector<double> free(dim);
    double budget = 0.5 * unit_draw(rng);
    for (std::size_t j = 0; j < dim; ++j) {
      const double share = budget * unit_draw(rng) / static_cast<double>(dim - j);
      free[j] = share / static_cast<double>(j + 2);
      budget -= share;
    }
    double value = objective(free);
    bool converged = false;
    int sweeps = 0;
    for (; sweeps < 20000 && !converged; ++sweeps) {
      const double before = value;
      double moved = 0.0;
      for (std::size_t j = 0; j < dim; ++j) {
        double used = 0.0;
        for (std::size_t i = 0; i < dim; ++i)
          if (i != j) used += static_cast<double>(i + 2) * free[i];
        const double upper = std::max(0.0, (0.5 - used) / static_cast<double>(j + 2));
        std::vector<double> trial = free;
        const GoldenResult r = golden_section_max(
            [&](double x) {
              trial[j] = x;
              return objective(trial);
            },
            0.0, upper, 1e-13);
        if (r.value >= value) {
          moved = std::max(moved, std::abs(r.x - free[j]));
          free[j] = r.x;
          value = r.value;
        }
      }
      converged = value - before <= 1e-15 && moved <= 1e-10;
    }
    all_converged = all_converged && converged;
    if (value > best_value) {
      best_value = value;
      best_free = free;
      best_sweeps = sweeps;
    }
  }
  cert.weights = complete_weights(best_free);
  cert.constant = std::exp(best_value);
  cert.optimizer_sweeps = best_sweeps;
  if (!all_converged) throw OptimizerError("optimize_bound: coordinate ascent did not converge", cert);
  return cert;
}

double pointwise_slack(const BoundCertificate& cert, const EigenvalueTriple& t) {
  const std::vector<double> c = taylor_coefficients(cert.order);
  const double s = t.l1 * t.l1 + t.l2 * t.l2 + t.l3 * t.l3;
  const double b2 = cert.beta * cert.beta;
  double lhs = 0.0;
  double term = s;  // s^k / beta^(2k-2)
  for (int k = 0; k < cert.order; ++k) {
    lhs += c[k] * term;
    term *= s / b2;
  }
  return lhs - cert.constant / cert.beta * t.l1 * t.l2 * t.l3;
}

SlackScan verify_pointwise(const BoundCertificate& cert, std::size_t samples, std::uint64_t seed) {
  SlackScan scan;
  scan.min_slack = std::numeric_limits<double>::infinity();
  auto visit = [&](const EigenvalueTriple& t) {
    const double slack = pointwise_slack(cert, t);
    ++scan.samples;
    if (slack < scan.min_slack) {
      scan.min_slack = slack;
      scan.argmin = t;
    }
  };
  std::mt19937_64 rng(seed);
  auto draw = [&] { return std::pow(10.0, -3.0 + 6.0 * unit_draw(rng)); };
  for (std::size_t i = 0; i < samples; ++i) {
    EigenvalueTriple t;
    t.l1 = draw();
    t.l2 = draw();
    t.l3 = draw();
    visit(t);
  }
  for (int i = 0; i <= 2000; ++i) {
    const double l = std::pow(10.0, -3.0 + 6.0 * i / 2000.0);
    visit({l, l, l});
    visit({0.0, l, l});
    visit({0.0, 0.0, l});
  }
  const double l = std::sqrt(sharpness(cert).s_star / 3.0);
  visit({l, l, l});
  return scan;
}

BoundCertificate certify(const BoundCertificate& cert, std::size_t samples, std::uint64_t seed) {
  BoundCertificate out = cert;
  const SlackScan scan = verify_pointwise(cert, samples, seed);
  out.samples = scan.samples;
  out.min_slack = scan.min_slack;
  out.seed = seed;
  return out;
}

Sharpness sharpness(const BoundCertificate& cert) {
  const std::vector<double> c = taylor_coefficients(cert.order);
  const double b2 = cert.beta * cert.beta;
  auto ratio = [&](double u) {
    const double s = std::exp(u);
    double lhs = 0.0, term = s;
    for (int k = 0; k < cert.order; ++k) {
      lhs += c[k] * term;
      term *= s / b2;
    }
    return lhs / std::pow(s / 3.0, 1.5);
  };
  const double centre = std::log(b2);
  const auto r = boost::math::tools::brent_find_minima(ratio, centre - 40.0, centre + 40.0, 52);
  Sharpness out;
  out.s_star = std::exp(r.first);
  out.minimum = r.second;
  return out;
}

double bound_energy(const BoundCertificate& cert, long charge) {
  return cert.energy_scale * cert.constant / cert.beta * 2.0 * kPi * kPi * std::abs(static_cast<double>(charge));
}

ReferenceComparison compare_reference_constant(double constant) {
  ReferenceComparison r;
  r.reference = 8.0 * kPi * 3.487;
  r.bound = constant * 2.0 * kPi * kPi;
  r.relative_error = (r.reference - r.bound) / r.reference;
  return r;
}

ReferenceComparison compare_reference(const BoundCertificate& cert) {
  if (cert.beta != 1.0) throw std::invalid_argument("compare_reference: the reference value is for beta = 1");
  ReferenceComparison r = compare_reference_constant(cert.constant);
  r.bound = bound_energy(cert, 1);
  r.relative_error = (r.reference - r.bound) / r.reference;
  return r;
}

}  // namespace dbibps
