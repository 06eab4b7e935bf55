#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mfpce {

// A point in physical input space, one coordinate per input variable.
using Sample = std::vector<double>;

enum class Family { Uniform, Gaussian, Lognormal, Gumbel };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// One independent input variable. The two parameters are family-specific:
//   Uniform   : p1 = lower, p2 = upper        (p2 > p1)
//   Gaussian  : p1 = mean,  p2 = std          (p2 > 0)
//   Lognormal : p1 = lambda (log-mean), p2 = zeta (log-std > 0)
//   Gumbel    : p1 = location, p2 = scale     (p2 > 0)
struct Marginal {
  Family family = Family::Uniform;
  double p1 = 0.0;
  double p2 = 1.0;

  static Marginal uniform(double lower, double upper);
  static Marginal gaussian(double mean, double stdev);
  static Marginal lognormal(double lambda, double zeta);
  static Marginal gumbel(double location, double scale);

  // Matches the first two moments exactly. Supported for Gaussian,
  // Lognormal (mean > 0) and Gumbel; std must be positive.
  static Marginal from_moments(Family f, double mean, double stdev);

  double cdf(double x) const;
  double quantile(double p) const;  // p in (0, 1)
  double mean() const;
  double stdev() const;
  bool in_support(double x) const;

  // True if the variable standardizes to uniform on [-1, 1] (Legendre
  // basis); otherwise it standardizes to a standard normal (Hermite basis).
  bool uniform_standard() const { return family == Family::Uniform; }

  // Isoprobabilistic map to/from the standard variable. Round-trips to
  // near machine precision across the realistic sampling range.
  double to_standard(double x) const;
  double from_standard(double u) const;

  bool operator==(const Marginal&) const = default;
};

// Independent input vector (joint density is the product of the marginals).
struct RandomVector {
  std::vector<Marginal> marginals;

  RandomVector() = default;
  explicit RandomVector(std::vector<Marginal> m) : marginals(std::move(m)) {}

  std::size_t dim() const { return marginals.size(); }
  bool in_support(const Sample& x) const;
  std::vector<double> to_standard(const Sample& x) const;
  Sample from_standard(const std::vector<double>& u) const;

  bool operator==(const RandomVector&) const = default;
};

// Latin hypercube design: for every coordinate, exactly one point falls in
// each of the n equiprobable strata of that marginal. Points are placed
// uniformly at random within their stratum. Deterministic given the seed.
std::vector<Sample> lhs_sample(const RandomVector& rv, std::size_t n,
                               std::uint64_t seed);

}  // namespace mfpce
