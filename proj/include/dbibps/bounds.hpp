// Topological energy bounds for the DBI Skyrme model from a truncated
// Taylor series of the energy density and weighted AM-GM.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace dbibps {

// c_1..c_N of 1 - sqrt(1 - x) = sum c_k x^k.
std::vector<double> taylor_coefficients(int n);

struct EigenvalueTriple {
  double l1 = 0.0, l2 = 0.0, l3 = 0.0;
};

struct BoundCertificate {
  int order = 2;
  std::vector<double> weights;  // w_1..w_N
  std::optional<double> alpha;  // N = 3 only: alpha = w_1
  double constant = 0.0;
  double beta = 1.0;
  double energy_scale = 1.0;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::optional<double> min_slack;
  int optimizer_sweeps = 0;
};

// prod_k (c_k 3^k / w_k)^w_k; zero weights contribute 1.  Throws when
// sum w != 1 or sum k w != 3/2 by more than 1e-10.
double bound_constant(const std::vector<double>& weights);
// N = 3 weights (alpha, 3/2 - 2 alpha, alpha - 1/2), alpha in [1/2, 3/4].
std::vector<double> three_term_weights(double alpha);
double bound_constant_alpha(double alpha);

class OptimizerError : public std::runtime_error {
 public:
  OptimizerError(const std::string& what, BoundCertificate best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const BoundCertificate& best() const { return best_; }

 private:
  BoundCertificate best_;
};

// N in 2..8.  N = 3 by golden section in alpha; N > 3 by coordinate
// ascent over w_3..w_N from 10 random feasible starts drawn with `seed`.
BoundCertificate optimize_bound(int order, double beta, std::uint64_t seed = 0, double energy_scale = 1.0);

// sum_k c_k s^k / beta^(2k-2) - (C/beta) l1 l2 l3, s = l1^2 + l2^2 + l3^2.
double pointwise_slack(const BoundCertificate& cert, const EigenvalueTriple& t);

struct SlackScan {
  double min_slack = 0.0;
  EigenvalueTriple argmin;
  std::size_t samples = 0;
};
// `samples` log-uniform triples in [1e-3, 1e3]^3 plus the equal-eigenvalue
// ray and axis-degenerate triples.
SlackScan verify_pointwise(const BoundCertificate& cert, std::size_t samples, std::uint64_t seed);
// Copy of cert with samples and min_slack filled in.
BoundCertificate certify(const BoundCertificate& cert, std::size_t samples, std::uint64_t seed);

struct Sharpness {
  double minimum = 0.0;  // min over s of T(s)/(s/3)^(3/2)
  double s_star = 0.0;
};
Sharpness sharpness(const BoundCertificate& cert);

// f_pi^2 (C/beta) 2 pi^2 |B|
double bound_energy(const BoundCertificate& cert, long charge);

struct ReferenceComparison {
  double reference = 0.0;  // 8 pi * 3.487
  double bound = 0.0;
  double relative_error = 0.0;
};
ReferenceComparison compare_reference(const BoundCertificate& cert);
ReferenceComparison compare_reference_constant(double constant);

}  // namespace dbibps
