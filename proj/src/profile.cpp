#include "dbibps/profile.hpp"

#include <algorithm>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <numbers>

#include "dbibps/bps.hpp"
#include "dbibps/numerics.hpp"

namespace dbibps {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTailCut = 1e-9;

double bps_density(const ModelParams& p, double v) {
  v = std::max(0.0, v);
  return p.is_dbi() ? dbi_bps_density(v, p) : power_bps_density(v, p.mu, p.power_alpha());
}

// Inverse map of the BPS law.  The field is parameterized as
//   compact:     f = vacuum + t^power, t in [0, t_top]
//   non-compact: f = vacuum + exp(u), u in [log(tail cut), log(top - vacuum)]
// and c(tau) = integral from tau to tau_top of g, g = |dc/dtau|.
class InverseMapCurve : public ProfileCurve {
 public:
  InverseMapCurve(const ModelParams& p, const PotentialSpec& v) : ProfileCurve(Chart::of(p)), p_(p), v_(v) {
    vacuum_ = v.vacuum_coordinate;
    top_ = v.domain.hi;
    const double w = top_ - vacuum_;
    const double r1 = 1.0 / std::abs(slope(vacuum_ + 1e-6 * w));
    const double r2 = 1.0 / std::abs(slope(vacuum_ + 1e-9 * w));
    if (!std::isfinite(r1) || !std::isfinite(r2))
      throw NoSolitonError("non-integrable slope singularity: the BPS slope vanishes next to the vacuum");
    const double gamma = -(std::log(r2) - std::log(r1)) / (std::log(1e-9) - std::log(1e-6));
    compact_ = gamma < 0.98;
    if (compact_) {
      power_ = gamma <= 0.0 ? 2.0 : std::max(2.0, std::ceil(1.0 / (1.0 - gamma) - 0.05));
      tau_lo_ = 0.0;
      tau_hi_ = std::pow(w, 1.0 / power_);
    } else {
      power_ = 0.0;
      tau_lo_ = std::log(kTailCut);
      tau_hi_ = std::log(w);
    }
    // Interior zeros of the slope make the inverse map diverge.
    for (int i = 1; i <= 2000; ++i) {
      const double f = vacuum_ + w * i / 2000.0;
      if (!(bps_density(p_, v_(f)) > 0.0))
        throw NoSolitonError("non-integrable slope singularity: the potential vanishes away from the vacuum");
    }
    const int pieces = 32;
    extent_ = 0.0;
    for (int i = 0; i < pieces; ++i) {
      const double a = tau_lo_ + (tau_hi_ - tau_lo_) * i / pieces;
      const double b = tau_lo_ + (tau_hi_ - tau_lo_) * (i + 1) / pieces;
      extent_ += span(a, b);
    }
    if (!std::isfinite(extent_)) throw NoSolitonError("non-integrable slope singularity: infinite extent");
  }

  bool compact() const { return compact_; }
  double extent() const override { return extent_; }

  double field(double c) const override { return field_at(tau_at(c)); }
  double derivative(double c) const override { return slope(field(c)); }
  double volume_rate(double c) const override {
    return bps_density(p_, v_(field(c))) / chart_.kappa;
  }
  double integrate(const std::function<double(double, double)>& h, double upto, double tol) const override {
    auto integrand = [&](double tau) {
      const double f = field_at(tau);
      return g(tau) * h(f, bps_density(p_, v_(f)) / chart_.kappa);
    };
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < nodes_tau_.size(); ++k) {
      if (nodes_c_[k] >= upto) break;
      const double lo = nodes_c_[k + 1] <= upto ? nodes_tau_[k + 1] : tau_at(upto);
      sum += dbibps::integrate(integrand, lo, nodes_tau_[k], tol);
    }
    return sum;
  }

  // Solves c(tau) = target on the grid c_k and stores the nodes.
  std::vector<double> build_nodes(const std::vector<double>& targets) {
    nodes_c_ = {0.0};
    nodes_tau_ = {tau_hi_};
    std::vector<double> fields;
    fields.push_back(field_at(tau_hi_));
    for (double target : targets) {
      if (target <= 0.0) continue;
      double tau;
      double c;
      if (target >= extent_) {
        tau = tau_lo_;
        c = extent_;
      } else {
        tau = solve(target, nodes_c_.back(), nodes_tau_.back(), tau_lo_, &c);
      }
      nodes_c_.push_back(c);
      nodes_tau_.push_back(tau);
      fields.push_back(c >= extent_ && compact_ ? vacuum_ : field_at(tau));
      if (target >= extent_) break;
    }
    if (nodes_c_.back() < extent_) {
      nodes_c_.push_back(extent_);
      nodes_tau_.push_back(tau_lo_);
    }
    return fields;
  }

 private:
  double slope(double f) const {
    const double w = bps_density(p_, v_(f));
    if (w == 0.0) return 0.0;
    return -w / (chart_.kappa * chart_.jacobian(f));
  }
  double field_at(double tau) const {
    if (compact_) return tau <= 0.0 ? vacuum_ : std::min(top_, vacuum_ + std::pow(tau, power_));
    return std::min(top_, vacuum_ + std::exp(tau));
  }
  double g(double tau) const {
    double df;
    if (compact_) {
      if (tau <= 0.0) return 0.0;
      df = power_ * std::pow(tau, power_ - 1.0);
    } else {
      df = std::exp(tau);
    }
    const double f = field_at(tau);
    const double w = bps_density(p_, v_(f));
    if (w == 0.0) return std::numeric_limits<double>::infinity();
    return df * chart_.kappa * chart_.jacobian(f) / w;
  }
  double span(double a, double b) const {
    return dbibps::integrate([this](double t) { return g(t); }, a, b, 1e-14);
  }
  // Finds tau in [lo, from_tau] with c(tau) = target, given c(from_tau) = from_c.
  double solve(double target, double from_c, double from_tau, double lo, double* c_out) const {
    double hi = from_tau;
    double tau = from_tau;
    const double g0 = g(from_tau);
    if (g0 > 0.0 && std::isfinite(g0)) tau = from_tau - (target - from_c) / g0;
    if (!(tau > lo && tau < hi)) tau = 0.5 * (lo + hi);
    double c = from_c;
    for (int it = 0; it < 200; ++it) {
      c = from_c + span(tau, from_tau);
      const double res = c - target;
      if (res > 0.0) lo = tau; else hi = tau;
      if (std::abs(res) <= 2e-15 * std::max(1.0, target)) break;
      const double gt = g(tau);
      double next = gt > 0.0 && std::isfinite(gt) ? tau + res / gt : 0.5 * (lo + hi);
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (next == tau || hi - lo <= 4e-16 * std::max(1.0, std::abs(tau))) break;
      tau = next;
    }
    *c_out = c;
    return tau;
  }
  double tau_at(double c) const {
    if (c <= 0.0) return tau_hi_;
    if (c >= extent_) return tau_lo_;
    auto it = std::upper_bound(nodes_c_.begin(), nodes_c_.end(), c);
    const std::size_t k = static_cast<std::size_t>(it - nodes_c_.begin()) - 1;
    double dummy;
    return solve(c, nodes_c_[k], nodes_tau_[k], nodes_tau_[k + 1], &dummy);
  }

  ModelParams p_;
  PotentialSpec v_;
  double vacuum_ = 0.0;
  double top_ = 1.0;
  bool compact_ = true;
  double power_ = 2.0;
  double tau_lo_ = 0.0;
  double tau_hi_ = 1.0;
  double extent_ = 0.0;
  std::vector<double> nodes_c_;
  std::vector<double> nodes_tau_;
};

std::vector<double> grid_coordinates(double extent, bool compact, const GridSpec& grid) {
  std::vector<double> cs;
  double delta;
  std::size_t count;
  if (grid.spacing > 0.0) {
    delta = grid.spacing;
    count = static_cast<std::size_t>(std::floor(extent / delta * (1.0 + 1e-12))) + 1;
  } else {
    if (grid.samples < 2) throw std::invalid_argument("grid needs at least 2 samples");
    count = static_cast<std::size_t>(grid.samples);
    delta = extent / static_cast<double>(count - 1);
  }
  const std::size_t pad = compact ? static_cast<std::size_t>(std::max(0, grid.padding)) : 0;
  for (std::size_t k = 0; k < count + pad; ++k) cs.push_back(static_cast<double>(k) * delta);
  if (grid.spacing <= 0.0) cs[count - 1] = extent;
  return cs;
}

void fill_densities(SolitonProfile& prof, const PotentialSpec& v) {
  const ModelParams& p = prof.params;
  const Chart chart = Chart::of(p);
  const double n = std::abs(static_cast<double>(p.charge));
  for (auto& s : prof.samples) {
    const double rate = s.field <= v.vacuum_coordinate ? 0.0 : prof.curve->volume_rate(s.coordinate);
    const double b0 = chart.kappa * rate;
    s.energy_density = chart.prefactor * (kinetic_density(p, b0) + p.mu * p.mu * std::max(0.0, v(s.field)));
    s.charge_density = n * rate / chart.volume;
  }
}

class BabyOldCurve : public ProfileCurve {
 public:
  explicit BabyOldCurve(const ModelParams& p)
      : ProfileCurve(Chart::of(p)), p_(p), x0_(baby_old_radius(p)) {}
  double field(double x) const override { return baby_old_exact(x, p_); }
  double derivative(double x) const override {
    if (x >= x0_) return 0.0;
    const double n2 = static_cast<double>(p_.charge) * p_.charge;
    const double mu2 = p_.mu * p_.mu;
    const double a = 8.0 * kPi * kPi * mu2 * mu2 * (x - x0_) * (x - x0_) / (n2 * p_.beta * p_.beta);
    return 8.0 * kPi * kPi * mu2 * (x - x0_) / (n2 * std::sqrt(1.0 + a));
  }
  double extent() const override { return x0_; }

 private:
  ModelParams p_;
  double x0_;
};

class SkyrmeStandardCurve : public ProfileCurve {
 public:
  explicit SkyrmeStandardCurve(const ModelParams& p)
      : ProfileCurve(Chart::of(p)), sigma_(p.sigma()), z0_(skyrme_standard_radius(p.sigma())) {}
  double field(double z) const override { return skyrme_standard_exact(z, sigma_); }
  double derivative(double z) const override {
    if (z >= z0_) return 0.0;
    const double xi = field(z);
    const double s = std::sin(0.5 * xi), k = std::cos(0.5 * xi);
    return -std::sqrt(sigma_ + s * s) / (2.0 * s * k * k * (sigma_ + 2.0 * s * s));
  }
  double volume_rate(double z) const override {
    if (z >= z0_) return 0.0;
    const double s = std::sin(0.5 * field(z));
    return 2.0 * s * std::sqrt(sigma_ + s * s) / (sigma_ + 2.0 * s * s);
  }
  double extent() const override { return z0_; }

 private:
  double sigma_;
  double z0_;
};

class SkyrmeBpsCurve : public ProfileCurve {
 public:
  explicit SkyrmeBpsCurve(const ModelParams& p)
      : ProfileCurve(Chart::of(p)), sigma_(p.sigma()), z0_(skyrme_bps_radius(p.sigma())) {}
  double field(double z) const override { return skyrme_bps_exact(z, sigma_); }
  double derivative(double z) const override {
    if (z >= z0_) return 0.0;
    const double s = std::sin(field(z));
    return -volume_rate(z) / (s * s);
  }
  double volume_rate(double z) const override {
    if (z >= z0_) return 0.0;
    const double w = (z0_ - z) / sigma_;
    return w / std::sqrt(1.0 + w * w);
  }
  double extent() const override { return z0_; }

 private:
  double sigma_;
  double z0_;
};

}  // namespace

double ProfileCurve::volume_rate(double c) const {
  return chart_.jacobian(field(c)) * std::abs(derivative(c));
}

double ProfileCurve::integrate(const std::function<double(double, double)>& h, double upto,
                               double tol) const {
  auto integrand = [&](double c) { return h(field(c), volume_rate(c)); };
  const double e = std::min(upto, extent());
  std::vector<double> cuts;
  for (int i = 0; i <= 16; ++i) cuts.push_back(e * i / 16.0);
  return integrate_split(integrand, cuts, tol);
}

double SolitonProfile::spacing() const {
  if (samples.size() < 2) return 0.0;
  return samples[1].coordinate - samples[0].coordinate;
}

SolitonProfile sample_profile(const ModelParams& p, const PotentialSpec& v,
                              std::shared_ptr<const ProfileCurve> curve, std::optional<double> radius,
                              const GridSpec& grid) {
  SolitonProfile prof;
  prof.sector = p.sector;
  prof.coordinate_name = Chart::of(p).coordinate_name();
  prof.params = p;
  prof.curve = curve;
  prof.compacton_radius = radius;
  prof.extent = curve->extent();
  for (double c : grid_coordinates(prof.extent, radius.has_value(), grid)) {
    ProfileSample s;
    s.coordinate = c;
    s.field = curve->field(c);
    s.derivative = curve->derivative(c);
    prof.samples.push_back(s);
  }
  fill_densities(prof, v);
  return prof;
}

SolitonProfile solve_profile(const ModelParams& params, const PotentialSpec& v, const GridSpec& grid) {
  const ModelParams p = validate_params(params);
  if (v.sector() != p.sector) throw std::invalid_argument("potential chart does not match the model sector");
  if (p.mu == 0.0)
    throw NoSolitonError(
        "no soliton for mu = 0: the BPS law reduces to a vanishing slope, so the field stays at the "
        "anti-vacuum and cannot reach the vacuum continuously");
  auto curve = std::make_shared<InverseMapCurve>(p, v);
  const std::vector<double> cs = grid_coordinates(curve->extent(), curve->compact(), grid);
  const std::vector<double> fields = curve->build_nodes(cs);

  SolitonProfile prof;
  prof.sector = p.sector;
  prof.coordinate_name = Chart::of(p).coordinate_name();
  prof.params = p;
  prof.curve = curve;
  prof.extent = curve->extent();
  if (curve->compact()) prof.compacton_radius = curve->extent();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    ProfileSample s;
    s.coordinate = cs[k];
    s.field = k < fields.size() ? fields[k] : v.vacuum_coordinate;
    s.derivative = s.field <= v.vacuum_coordinate ? 0.0 : field_slope(p, v, s.field);
    prof.samples.push_back(s);
  }
  fill_densities(prof, v);
  return prof;
}

double sup_field_error(const SolitonProfile& profile, const ProfileCurve& reference,
                       std::optional<double> reference_radius) {
  auto near = [](double c, const std::optional<double>& r) {
    return r && std::abs(c - *r) <= 1e-12 * *r;
  };
  double sup = 0.0;
  for (const auto& s : profile.samples) {
    if (near(s.coordinate, profile.compacton_radius) || near(s.coordinate, reference_radius)) continue;
    sup = std::max(sup, std::abs(s.field - reference.field(s.coordinate)));
  }
  return sup;
}

SolitonProfile truncate_profile(const SolitonProfile& profile, double field_min) {
  SolitonProfile out = profile;
  out.samples.clear();
  out.compacton_radius.reset();
  for (const auto& s : profile.samples) {
    if (s.field < field_min) break;
    out.samples.push_back(s);
  }
  if (out.samples.empty()) throw std::invalid_argument("truncate_profile: nothing left above the cut");
  out.extent = out.samples.back().coordinate;
  return out;
}

double baby_old_radius(const ModelParams& p) {
  if (!(p.mu > 0.0)) throw NoSolitonError("no compacton radius for mu = 0");
  const double n = std::abs(static_cast<double>(p.charge));
  return n / (2.0 * kPi) * std::sqrt(1.0 / (2.0 * p.beta * p.beta) + 1.0 / (p.mu * p.mu));
}

double baby_old_exact(double x, const ModelParams& p) {
  const double x0 = baby_old_radius(p);
  if (x >= x0) return 0.0;
  const double n2 = static_cast<double>(p.charge) * p.charge;
  const double mu2 = p.mu * p.mu;
  const double a = 8.0 * kPi * kPi * mu2 * mu2 * (x - x0) * (x - x0) / (n2 * p.beta * p.beta);
  // sqrt(1+a) - 1 = a/(sqrt(1+a) + 1)
  return p.beta * p.beta / mu2 * a / (std::sqrt(1.0 + a) + 1.0);
}

double skyrme_standard_lhs(double xi, double sigma) {
  const double s = std::sin(0.5 * xi), k = std::cos(0.5 * xi);
  const double c = 1.0 - 2.0 * s * s;
  const double root = std::sqrt(sigma + s * s);
  return (sigma + c) * k * root + (1.0 - sigma * sigma) * std::atan(k / root);
}

double skyrme_standard_radius(double sigma) {
  const double r = std::sqrt(sigma);
  return r * (1.0 + sigma) + (1.0 - sigma * sigma) * std::atan(1.0 / r);
}

double skyrme_standard_exact(double z, double sigma) {
  if (z <= 0.0) return kPi;
  if (z >= skyrme_standard_radius(sigma)) return 0.0;
  return bisect([&](double xi) { return skyrme_standard_lhs(xi, sigma) - z; }, 0.0, kPi, 0.0);
}

double skyrme_bps_radius(double sigma) { return 0.5 * std::sqrt(kPi) * std::sqrt(kPi + 4.0 * sigma); }

double skyrme_bps_eta(double z, double sigma) {
  const double z0 = skyrme_bps_radius(sigma);
  if (z >= z0) return 0.0;
  const double w = (z0 - std::max(0.0, z)) / sigma;
  return sigma * w * w / (std::sqrt(1.0 + w * w) + 1.0);
}

double skyrme_bps_exact(double z, double sigma) {
  if (z <= 0.0) return kPi;
  const double eta = skyrme_bps_eta(z, sigma);
  if (eta <= 0.0) return 0.0;
  if (eta >= 0.5 * kPi) return kPi;
  return bisect([&](double xi) { return eta_of_xi(xi) - eta; }, 0.0, kPi, 0.0);
}

bool has_exact_profile(const ModelParams& p, const PotentialSpec& v) {
  if (!p.is_dbi()) return false;
  if (p.sector == Sector::Baby2D) return v.tag == PotentialTag::OldBabyPower && v.parameter == 1.0;
  return v.tag == PotentialTag::SkyrmeStandard || v.tag == PotentialTag::BpsPotential;
}

SolitonProfile exact_profile(const ModelParams& params, const PotentialSpec& v, const GridSpec& grid) {
  const ModelParams p = validate_params(params);
  if (!has_exact_profile(p, v)) throw std::invalid_argument("no closed-form profile for this model");
  if (p.mu == 0.0) throw NoSolitonError("no soliton for mu = 0");
  std::shared_ptr<const ProfileCurve> curve;
  if (p.sector == Sector::Baby2D) {
    curve = std::make_shared<BabyOldCurve>(p);
  } else if (v.tag == PotentialTag::SkyrmeStandard) {
    curve = std::make_shared<SkyrmeStandardCurve>(p);
  } else {
    curve = std::make_shared<SkyrmeBpsCurve>(p);
  }
  return sample_profile(p, v, curve, curve->extent(), grid);
}

ForwardProfile forward_profile(const ModelParams& params, const PotentialSpec& v, double stop_field) {
  namespace ode = boost::numeric::odeint;
  const ModelParams p = validate_params(params);
  if (p.mu == 0.0) throw NoSolitonError("no soliton for mu = 0");
  const Chart chart = Chart::of(p);
  const double vacuum = v.vacuum_coordinate;
  auto field_of = [&](double vol) {
    if (vol <= 0.0) return vacuum;
    if (chart.sector == Sector::Baby2D) return std::min(vol, chart.domain.hi);
    if (vol >= chart.volume) return chart.domain.hi;
    return bisect([&](double xi) { return eta_of_xi(xi) - vol; }, 0.0, kPi, 0.0);
  };
  using State = std::array<double, 1>;
  auto rhs = [&](const State& y, State& dy, double) {
    dy[0] = -bps_density(p, v(field_of(y[0]))) / chart.kappa;
  };
  auto stepper = ode::make_controlled(1e-12, 1e-12, ode::runge_kutta_dopri5<State>());
  ForwardProfile out;
  State y{chart.volume_coordinate(chart.domain.hi)};
  double c = 0.0;
  double dc = 1e-4;
  out.coordinate.push_back(c);
  out.field.push_back(field_of(y[0]));
  for (int steps = 0; steps < 10000000; ++steps) {
    const State prev = y;
    const double c_prev = c;
    if (stepper.try_step(rhs, y, c, dc) != ode::success) continue;
    const double f = field_of(y[0]);
    if (f - vacuum < stop_field) {
      const double f_prev = field_of(prev[0]);
      const double frac = (f_prev - vacuum - stop_field) / (f_prev - f);
      out.end_coordinate = c_prev + frac * (c - c_prev);
      out.coordinate.push_back(out.end_coordinate);
      out.field.push_back(vacuum + stop_field);
      return out;
    }
    out.coordinate.push_back(c);
    out.field.push_back(f);
  }
  throw std::runtime_error("forward_profile: vacuum not reached");
}

double angular_profile(double theta) {
  if (!(theta >= 0.0 && theta < kPi)) throw std::domain_error("angular_profile: theta must lie in [0, pi)");
  return std::tan(0.5 * theta);
}

double angular_bracket(double theta) {
  if (!(theta > 0.0 && theta < kPi)) throw std::domain_error("angular_bracket: theta must lie in (0, pi)");
  const double g = angular_profile(theta);
  const double g_theta = 0.5 * (1.0 + g * g);
  const double q = 1.0 + g * g;
  return g * g_theta / (q * q * std::sin(theta));
}

double coordinate_map(double r, Sector sector, const ModelParams& p) {
  if (sector == Sector::Baby2D) return 0.5 * r * r;
  const double n = std::abs(static_cast<double>(p.charge));
  return 2.0 * std::sqrt(2.0) * p.beta * kPi * kPi / n * r * r * r;
}

std::string to_string(Localization l) {
  switch (l) {
    case Localization::Compacton: return "Compacton";
    case Localization::Exponential: return "Exponential";
    case Localization::PowerLaw: return "PowerLaw";
    case Localization::Ambiguous: return "Ambiguous";
  }
  return "Ambiguous";
}

double localization_threshold(Sector sector) { return sector == Sector::Baby2D ? 2.0 : 6.0; }

Localization classify_localization(double vacuum_exponent, Sector sector) {
  if (!(vacuum_exponent > 0.0)) throw std::invalid_argument("vacuum exponent must be positive");
  const double t = localization_threshold(sector);
  if (std::abs(vacuum_exponent - t) <= 1e-12 * t) return Localization::Exponential;
  return vacuum_exponent < t ? Localization::Compacton : Localization::PowerLaw;
}

TailFit tail_fit(const SolitonProfile& profile) {
  TailFit fit;
  if (profile.compacton_radius) {
    fit.kind = Localization::Compacton;
    return fit;
  }
  const double vacuum = 0.0;
  std::vector<double> c, lc, lf;
  for (const auto& s : profile.samples) {
    const double d = s.field - vacuum;
    if (d > 0.0 && d <= 1e-3 && s.coordinate > 0.0) {
      c.push_back(s.coordinate);
      lc.push_back(std::log(s.coordinate));
      lf.push_back(std::log(d));
    }
  }
  if (c.size() < 10) throw std::invalid_argument("tail_fit: fewer than 10 samples with field below 1e-3");
  fit.samples_used = c.size();
  fit.r2_exponential = fit_line(c, lf).r2;
  fit.r2_power = fit_line(lc, lf).r2;
  if (std::abs(fit.r2_exponential - fit.r2_power) < 1e-3) {
    fit.kind = Localization::Ambiguous;
  } else {
    fit.kind = fit.r2_exponential > fit.r2_power ? Localization::Exponential : Localization::PowerLaw;
  }
  return fit;
}

EndpointAsymptotics endpoint_asymptotics(double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("endpoint_asymptotics: sigma must be positive");
  EndpointAsymptotics a;
  a.edge = std::pow(sigma, -0.25);
  a.core = std::cbrt(6.0) * std::pow(1.0 + sigma, 1.0 / 6.0) / std::cbrt(2.0 + sigma);
  return a;
}

}  // namespace dbibps
