#include "lsc/spectra.hpp"

#include <cmath>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace lsc {

namespace {

PivotScan sturm_pivot_scan(std::span<const double> diag, std::span<const double> sub, double mu,
                           double threshold) {
  PivotScan scan;
  scan.min_abs = std::numeric_limits<double>::infinity();
  const std::int64_t n = static_cast<std::int64_t>(diag.size());
  double prev = 0.0;
  for (std::int64_t j = 0; j < n; ++j) {
    double d = diag[j] - mu;
    if (j > 0) {
      const double b = sub[j - 1];
      const double f = b / prev;
      d -= f * b;
    }
    const double ad = std::abs(d);
    if (ad < scan.min_abs) scan.min_abs = ad;
    if (ad < threshold) {
      scan.breakdown = true;
      return scan;
    }
    if (d < 0) ++scan.negative;
    prev = d;
  }
  return scan;
}

InertiaResult sturm_with_retries(std::span<const double> diag, std::span<const double> sub,
                                 double mu, double norm) {
  const double threshold = kPivotRelThreshold * norm;
  InertiaResult res;
  res.mu = mu;
  for (int retry = 0; retry <= kMaxShiftRetries; ++retry) {
    const double shifted = mu + kShiftRelPerturbation * norm * retry;
    const PivotScan scan = sturm_pivot_scan(diag, sub, shifted, threshold);
    if (!scan.breakdown) {
      res.count = scan.negative;
      res.pivot_min_abs = scan.min_abs;
      res.retries = retry;
      return res;
    }
  }
  throw NumericError("sturm_count: pivot breakdown after retries (mu = " + std::to_string(mu) +
                     ")");
}

} // namespace

InertiaResult sturm_count(std::span<const double> diag, std::span<const double> sub, double mu) {
  if (sub.size() + 1 != diag.size())
    throw ConfigError("sturm_count: off-diagonal length must be n-1");
  double norm = 0.0;
  const std::int64_t n = static_cast<std::int64_t>(diag.size());
  for (std::int64_t i = 0; i < n; ++i) {
    double row = std::abs(diag[i]);
    if (i > 0) row += std::abs(sub[i - 1]);
    if (i + 1 < n) row += std::abs(sub[i]);
    norm = std::max(norm, row);
  }
  return sturm_with_retries(diag, sub, mu, norm);
}

InertiaResult sturm_count(const DiscreteOperator& op, double mu) {
  if (op.grid().dimension() != 1)
    throw ConfigError("sturm_count: operator must be one-dimensional (tridiagonal)");
  const std::int64_t n = op.size();
  std::vector<double> diag(n), sub(n - 1);
  for (std::int64_t i = 0; i < n; ++i) diag[i] = op.diagonal(i);
  for (std::int64_t i = 0; i + 1 < n; ++i) sub[i] = op.off_diagonal();
  return sturm_with_retries(diag, sub, mu, op.inf_norm());
}

namespace {

template <class S>
std::vector<double> dense_eigs_impl(const S& a) {
  const std::int64_t n = a.size();
  if (n > kDenseEigGuard)
    throw ConfigError("dense_eigs: order exceeds the dense-oracle guard (2500)");
  const int bw = a.bandwidth();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  std::vector<double> col(bw + 1);
  for (std::int64_t j = 0; j < n; ++j) {
    a.fill_column(j, std::span<double>(col.data(), col.size()));
    m(j, j) = col[0];
    for (int t = 1; t <= bw && j + t < n; ++t) {
      m(j + t, j) = col[t];
      m(j, j + t) = col[t];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericError("dense_eigs: eigendecomposition failed");
  std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  return ev;
}

} // namespace

std::vector<double> dense_eigs(const BandMatrix& a) { return dense_eigs_impl(a); }
std::vector<double> dense_eigs(const DiscreteOperator& a) { return dense_eigs_impl(a); }

double smallest_eigenvalue(const DiscreteOperator& op, double rel_tol, int max_iterations) {
  const std::int64_t n = op.size();
  BandCholesky chol(op);
  std::vector<double> v(n, 1.0 / std::sqrt(double(n))), av(n);
  double lambda = 0.0, prev = std::numeric_limits<double>::infinity();
  for (int it = 0; it < max_iterations; ++it) {
    chol.solve(std::span<double>(v.data(), v.size()));
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;
    op.apply(v, av);
    double rq = 0.0;
    for (std::int64_t i = 0; i < n; ++i) rq += v[i] * av[i];
    lambda = rq;
    if (std::abs(lambda - prev) <= rel_tol * std::abs(lambda)) break;
    prev = lambda;
  }
  return lambda;
}

} // namespace lsc
