#pragma once

#include <vector>

#include "lsc/band_matrix.hpp"
#include "lsc/discrete_operator.hpp"

namespace lsc {

struct InertiaResult {
  double mu = 0.0;            // requested shift
  std::int64_t count = 0;     // eigenvalues <= mu
  double pivot_min_abs = 0.0; // smallest pivot magnitude of the accepted run
  int retries = 0;            // shift perturbations applied
};

inline constexpr double kPivotRelThreshold = 1e-12;
inline constexpr double kShiftRelPerturbation = 1e-10;
inline constexpr int kMaxShiftRetries = 3;

// Eigenvalue count <= mu by Sylvester inertia: negative pivots of the
// root-free factorization of A - mu I. A pivot below 1e-12*|A|_inf bumps mu
// up by retry*1e-10*|A|_inf, at most three times; counting is for the closed
// interval (-inf, mu], ties resolved by the upward perturbation.
template <BandedSource S>
InertiaResult inertia_count(const S& a, double mu) {
  const double norm = a.inf_norm();
  const double threshold = kPivotRelThreshold * norm;
  InertiaResult res;
  res.mu = mu;
  for (int retry = 0; retry <= kMaxShiftRetries; ++retry) {
    const double shifted = mu + kShiftRelPerturbation * norm * retry;
    const PivotScan scan = band_pivot_scan(a, shifted, threshold);
    if (!scan.breakdown) {
      res.count = scan.negative;
      res.pivot_min_abs = scan.min_abs;
      res.retries = retry;
      return res;
    }
  }
  throw NumericError("inertia_count: pivot breakdown after retries; mu sits on an eigenvalue "
                     "cluster (mu = " +
                     std::to_string(mu) + ")");
}

// Tridiagonal specialization via the Sturm pivot recurrence; arithmetic
// matches the banded path operation for operation, so the two agree exactly.
InertiaResult sturm_count(const DiscreteOperator& op, double mu);
InertiaResult sturm_count(std::span<const double> diag, std::span<const double> sub, double mu);

// Independent counts over a strictly increasing grid of shifts; the
// resulting counts are checked to be nondecreasing.
template <BandedSource S>
std::vector<InertiaResult> count_sweep(const S& a, std::span<const double> mu_grid) {
  for (size_t i = 1; i < mu_grid.size(); ++i)
    if (!(mu_grid[i] > mu_grid[i - 1]))
      throw ConfigError("count_sweep: mu grid must be strictly increasing");
  std::vector<InertiaResult> out;
  out.reserve(mu_grid.size());
  for (double mu : mu_grid) out.push_back(inertia_count(a, mu));
  for (size_t i = 1; i < out.size(); ++i)
    if (out[i].count < out[i - 1].count)
      throw NumericError("count_sweep: counts decreased along the sweep");
  return out;
}

inline constexpr std::int64_t kDenseEigGuard = 2500;

// Full symmetric eigendecomposition (test oracle), ascending eigenvalues.
std::vector<double> dense_eigs(const BandMatrix& a);
std::vector<double> dense_eigs(const DiscreteOperator& a);

// Smallest eigenvalue of a positive definite operator by inverse iteration
// on the banded Cholesky factor; deterministic all-ones start.
double smallest_eigenvalue(const DiscreteOperator& op, double rel_tol = 1e-10,
                           int max_iterations = 500);

} // namespace lsc
