#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <limits>
#include <vector>

#include "mfpce/input_model.hpp"

namespace mfpce {

// Exponent vector of one multivariate basis polynomial.
struct MultiIndex {
  std::vector<int> exponents;

  int total_degree() const {
    int d = 0;
    for (int e : exponents) d += e;
    return d;
  }
  bool is_zero() const {
    for (int e : exponents) {
      if (e != 0) return false;
    }
    return true;
  }
  bool operator==(const MultiIndex&) const = default;
};

// q-norm (hyperbolic) truncation: alpha is admitted iff
// (sum_i alpha_i^q)^(1/q) <= max_degree. q = 1 is total-degree truncation.
struct TruncationScheme {
  int max_degree = 0;
  double q_norm = 1.0;

  bool admits(const MultiIndex& idx) const;
};

// All admitted indices for dimension m, sorted by (total degree, exponents
// lexicographically descending). Deterministic.
std::vector<MultiIndex> enumerate_indices(std::size_t m,
                                          const TruncationScheme& scheme);

// Training data: inputs in physical space plus scalar responses.
struct ExperimentalDesign {
  std::vector<Sample> inputs;
  std::vector<double> outputs;

  std::size_t size() const { return inputs.size(); }
};

// Orthonormal univariate basis values psi_0..psi_max_degree at the standard
// coordinate of x: normalized Legendre on [-1, 1] (weight 1/2) for uniform
// marginals, normalized probabilists' Hermite for the rest. Three-term
// recurrences throughout.
void univariate_basis(const Marginal& marginal, double x, int max_degree,
                      double* values);

// Product of univariate orthonormal polynomials per the multi-index.
double eval_basis(const RandomVector& rv, const MultiIndex& index,
                  const Sample& x);

// Design matrix Psi_ij = Psi_{alpha_j}(x_i).
Eigen::MatrixXd build_design_matrix(const RandomVector& rv,
                                    const std::vector<MultiIndex>& indices,
                                    const std::vector<Sample>& points);

// Sparse expansion on an orthonormal basis. Indices and coefficients have
// equal length; the all-zero index (if present) carries the mean.
struct PceModel {
  RandomVector rv;
  std::vector<MultiIndex> indices;
  std::vector<double> coefficients;
  double loo_error = std::numeric_limits<double>::infinity();
  int degree_used = 0;

  double mean() const;
  double variance() const;
  double evaluate(const Sample& x) const;
};

// Mean and variance of the expansion: (c_0, sum of squared non-constant
// coefficients).
std::pair<double, double> moments(const PceModel& model);

double predict(const PceModel& model, const Sample& x);

// One point of the LARS path: active columns plus their hybrid
// (OLS-refitted) coefficients, and the corrected leave-one-out error of
// that refit.
struct LarsStep {
  std::vector<int> active;
  Eigen::VectorXd coefficients;
  double loo = std::numeric_limits<double>::infinity();
};

struct LarsPath {
  std::vector<LarsStep> steps;
  bool truncated = false;  // rank deficiency cut the path short
};

struct LarsConfig {
  // Upper bound on active set size; <= 0 means min(N - 1, P).
  int max_active = -1;
  // Stop the path after this many consecutive steps without LOO
  // improvement; 0 runs the full path.
  int patience = 0;
};

// Standard least-angle regression on the raw columns of the design matrix
// (one predictor enters per step, equiangular moves in between), with an
// OLS refit on every active set. The path ends when min(N-1, P) predictors
// are active, the residual is numerically zero, or a rank-deficient step is
// hit (the path is truncated there).
LarsPath lars_path(const Eigen::MatrixXd& design, const Eigen::VectorXd& y,
                   const LarsConfig& config = {});

// Corrected leave-one-out error via the hat-matrix identity:
//   eLOO = (1/N) sum_i [(y_i - yhat_i) / (1 - h_i)]^2 / Var(y) * T(N, k),
//   T(N, k) = N / (N - k) * (1 + trace((Psi^T Psi)^-1) / N).
// Returns +inf when N <= k or any leverage reaches 1.
double loo_error(const Eigen::MatrixXd& active_design, const Eigen::VectorXd& y,
                 const Eigen::VectorXd& coefficients);

struct PceTrainConfig {
  int degree_min = 1;
  int degree_max = 15;
  double q_norm = 1.0;
  // Stop raising the degree after this many consecutive degrees without LOO
  // improvement.
  int degree_patience = 2;
  LarsConfig lars;
};

// Degree-adaptive sparse training: for every candidate degree, enumerate
// the basis, run the LARS path and keep the path point with the smallest
// corrected LOO; the best LOO across degrees wins (ties go to the lower
// degree). Degenerate designs fall back to the constant-only model.
PceModel train_adaptive(const ExperimentalDesign& ed, const RandomVector& rv,
                        const PceTrainConfig& config);

// Shared univariate-value cache for evaluating many expansions on a fixed
// point set (bootstrap ensembles, validation grids).
class PceBatchEvaluator {
 public:
  PceBatchEvaluator(const RandomVector& rv, const std::vector<Sample>& points,
                    int max_degree);

  // Predictions of the model at every cached point. The model's rv must
  // match the evaluator's and its degree must not exceed max_degree.
  Eigen::VectorXd evaluate(const PceModel& model) const;

  std::size_t n_points() const { return n_points_; }

 private:
  std::size_t n_points_;
  std::size_t dim_;
  int max_degree_;
  // values_[d] is n_points x (max_degree + 1) for dimension d.
  std::vector<Eigen::MatrixXd> values_;
};

}  // namespace mfpce
