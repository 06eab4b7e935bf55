#include "mfpce/input_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "mfpce/normal.hpp"
#include "mfpce/rng.hpp"

namespace mfpce {

namespace {
constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kPi = 3.14159265358979323846;

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}
}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Uniform: return "uniform";
    case Family::Gaussian: return "gaussian";
    case Family::Lognormal: return "lognormal";
    case Family::Gumbel: return "gumbel";
  }
  throw std::logic_error("family_name: unknown family");
}

Family family_from_name(const std::string& name) {
  if (name == "uniform") return Family::Uniform;
  if (name == "gaussian") return Family::Gaussian;
  if (name == "lognormal") return Family::Lognormal;
  if (name == "gumbel") return Family::Gumbel;
  throw std::invalid_argument("unknown marginal family: " + name);
}

Marginal Marginal::uniform(double lower, double upper) {
  require(upper > lower, "uniform: upper must exceed lower");
  return {Family::Uniform, lower, upper};
}

Marginal Marginal::gaussian(double mean, double stdev) {
  require(stdev > 0.0, "gaussian: std must be positive");
  return {Family::Gaussian, mean, stdev};
}

Marginal Marginal::lognormal(double lambda, double zeta) {
  require(zeta > 0.0, "lognormal: zeta must be positive");
  return {Family::Lognormal, lambda, zeta};
}

Marginal Marginal::gumbel(double location, double scale) {
  require(scale > 0.0, "gumbel: scale must be positive");
  return {Family::Gumbel, location, scale};
}

Marginal Marginal::from_moments(Family f, double mean, double stdev) {
  require(stdev > 0.0, "from_moments: std must be positive");
  switch (f) {
    case Family::Gaussian:
      return gaussian(mean, stdev);
    case Family::Lognormal: {
      require(mean > 0.0, "from_moments: lognormal requires mean > 0");
      const double zeta2 = std::log1p((stdev / mean) * (stdev / mean));
      return lognormal(std::log(mean) - 0.5 * zeta2, std::sqrt(zeta2));
    }
    case Family::Gumbel: {
      const double scale = stdev * std::sqrt(6.0) / kPi;
      return gumbel(mean - kEulerGamma * scale, scale);
    }
    case Family::Uniform:
      throw std::invalid_argument("from_moments: not defined for uniform");
  }
  throw std::logic_error("from_moments: unknown family");
}

double Marginal::cdf(double x) const {
  switch (family) {
    case Family::Uniform:
      if (x <= p1) return 0.0;
      if (x >= p2) return 1.0;
      return (x - p1) / (p2 - p1);
    case Family::Gaussian:
      return normal_cdf((x - p1) / p2);
    case Family::Lognormal:
      if (x <= 0.0) return 0.0;
      return normal_cdf((std::log(x) - p1) / p2);
    case Family::Gumbel:
      return std::exp(-std::exp(-(x - p1) / p2));
  }
  throw std::logic_error("cdf: unknown family");
}

double Marginal::quantile(double p) const {
  require(p > 0.0 && p < 1.0, "quantile: p must lie in (0, 1)");
  switch (family) {
    case Family::Uniform:
      return p1 + (p2 - p1) * p;
    case Family::Gaussian:
      return p1 + p2 * normal_quantile(p);
    case Family::Lognormal:
      return std::exp(p1 + p2 * normal_quantile(p));
    case Family::Gumbel:
      // -log(-log p); use log1p on the upper tail to keep precision.
      if (p > 0.5) return p1 - p2 * std::log(-std::log1p(p - 1.0));
      return p1 - p2 * std::log(-std::log(p));
  }
  throw std::logic_error("quantile: unknown family");
}

double Marginal::mean() const {
  switch (family) {
    case Family::Uniform: return 0.5 * (p1 + p2);
    case Family::Gaussian: return p1;
    case Family::Lognormal: return std::exp(p1 + 0.5 * p2 * p2);
    case Family::Gumbel: return p1 + kEulerGamma * p2;
  }
  throw std::logic_error("mean: unknown family");
}

double Marginal::stdev() const {
  switch (family) {
    case Family::Uniform: return (p2 - p1) / std::sqrt(12.0);
    case Family::Gaussian: return p2;
    case Family::Lognormal:
      return mean() * std::sqrt(std::expm1(p2 * p2));
    case Family::Gumbel: return p2 * kPi / std::sqrt(6.0);
  }
  throw std::logic_error("stdev: unknown family");
}

bool Marginal::in_support(double x) const {
  if (!std::isfinite(x)) return false;
  switch (family) {
    case Family::Uniform: return x >= p1 && x <= p2;
    case Family::Lognormal: return x > 0.0;
    case Family::Gaussian:
    case Family::Gumbel: return true;
  }
  return false;
}

double Marginal::to_standard(double x) const {
  if (!in_support(x)) {
    throw std::domain_error("to_standard: point outside marginal support");
  }
  switch (family) {
    case Family::Uniform:
      return 2.0 * (x - p1) / (p2 - p1) - 1.0;
    case Family::Gaussian:
      return (x - p1) / p2;
    case Family::Lognormal:
      return (std::log(x) - p1) / p2;
    case Family::Gumbel: {
      const double t = (x - p1) / p2;
      const double log_cdf = -std::exp(-t);  // log F(x), in (-inf, 0)
      if (log_cdf > -0.6931471805599453) {
        // Upper half: pass the survival probability to keep tail accuracy.
        return -normal_quantile(-std::expm1(log_cdf));
      }
      return normal_quantile(std::exp(log_cdf));
    }
  }
  throw std::logic_error("to_standard: unknown family");
}

double Marginal::from_standard(double u) const {
  switch (family) {
    case Family::Uniform:
      return p1 + 0.5 * (u + 1.0) * (p2 - p1);
    case Family::Gaussian:
      return p1 + p2 * u;
    case Family::Lognormal:
      return std::exp(p1 + p2 * u);
    case Family::Gumbel: {
      // -log F from whichever normal tail is computed with full accuracy.
      double neg_log_cdf;
      if (u > 0.0) {
        neg_log_cdf = -std::log1p(-normal_sf(u));
      } else {
        neg_log_cdf = -std::log(normal_cdf(u));
      }
      return p1 - p2 * std::log(neg_log_cdf);
    }
  }
  throw std::logic_error("from_standard: unknown family");
}

bool RandomVector::in_support(const Sample& x) const {
  if (x.size() != marginals.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!marginals[i].in_support(x[i])) return false;
  }
  return true;
}

std::vector<double> RandomVector::to_standard(const Sample& x) const {
  require(x.size() == marginals.size(), "to_standard: dimension mismatch");
  std::vector<double> u(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) u[i] = marginals[i].to_standard(x[i]);
  return u;
}

Sample RandomVector::from_standard(const std::vector<double>& u) const {
  require(u.size() == marginals.size(), "from_standard: dimension mismatch");
  Sample x(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) x[i] = marginals[i].from_standard(u[i]);
  return x;
}

std::vector<Sample> lhs_sample(const RandomVector& rv, std::size_t n,
                               std::uint64_t seed) {
  require(n >= 1, "lhs_sample: n must be at least 1");
  require(rv.dim() >= 1, "lhs_sample: empty random vector");
  Rng rng = Rng::stream(seed, 0x1b5);

  std::vector<Sample> out(n, Sample(rv.dim()));
  std::vector<std::uint32_t> strata(n);
  for (std::size_t d = 0; d < rv.dim(); ++d) {
    std::iota(strata.begin(), strata.end(), 0u);
    for (std::size_t i = n - 1; i > 0; --i) {
      std::swap(strata[i], strata[rng.below(i + 1)]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double p = (static_cast<double>(strata[i]) + rng.uniform01()) /
                       static_cast<double>(n);
      out[i][d] = rv.marginals[d].quantile(p);
    }
  }
  return out;
}

}  // namespace mfpce
