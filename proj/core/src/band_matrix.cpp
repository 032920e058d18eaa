#include "lsc/band_matrix.hpp"

#include <cmath>
#include <cstring>

namespace lsc {

BandMatrix::BandMatrix(std::int64_t n, int bandwidth) : n_(n) {
  if (n < 1) throw ConfigError("BandMatrix: order must be >= 1");
  if (bandwidth < 0) throw ConfigError("BandMatrix: bandwidth must be >= 0");
  bw_ = static_cast<int>(std::min<std::int64_t>(bandwidth, n - 1));
  a_.assign(static_cast<size_t>(n_) * (bw_ + 1), 0.0);
}

void BandMatrix::fill_column(std::int64_t j, std::span<double> out) const {
  std::memcpy(out.data(), column(j), sizeof(double) * (bw_ + 1));
}

double BandMatrix::entry(std::int64_t i, std::int64_t j) const {
  if (i < j) std::swap(i, j);
  const std::int64_t depth = i - j;
  if (depth > bw_) return 0.0;
  return at(j, static_cast<int>(depth));
}

double BandMatrix::inf_norm() const {
  double norm = 0.0;
  for (std::int64_t i = 0; i < n_; ++i) {
    double row = 0.0;
    for (int t = 0; t <= bw_; ++t) {
      if (i - t >= 0) row += std::abs(at(i - t, t));           // entries left of the diagonal
      if (t > 0 && i + t < n_) row += std::abs(at(i, t));      // symmetric right side
    }
    norm = std::max(norm, row);
  }
  return norm;
}

BandCholesky::BandCholesky(BandMatrix a) : l_(std::move(a)) {
  const std::int64_t n = l_.size();
  const int bw = l_.bandwidth();
  for (std::int64_t j = 0; j < n; ++j) {
    double* col = l_.column(j);
    const double d = col[0];
    if (!(d > 0.0))
      throw NumericError("banded Cholesky: nonpositive pivot at column " + std::to_string(j));
    const double r = std::sqrt(d);
    col[0] = r;
    const int m = static_cast<int>(std::min<std::int64_t>(bw, n - 1 - j));
    const double inv = 1.0 / r;
    for (int t = 1; t <= m; ++t) col[t] *= inv;
    for (int q = 1; q <= m; ++q) {
      const double f = col[q];
      if (f == 0.0) continue;
      double* dst = l_.column(j + q);
      const int lim = m - q;
      for (int t = 0; t <= lim; ++t) dst[t] -= f * col[q + t];
    }
  }
}

void BandCholesky::solve(std::span<double> x) const {
  const std::int64_t n = l_.size();
  const int bw = l_.bandwidth();
  if (static_cast<std::int64_t>(x.size()) != n)
    throw ConfigError("BandCholesky::solve: size mismatch");
  // L y = b, column sweep.
  for (std::int64_t j = 0; j < n; ++j) {
    const double* col = l_.column(j);
    const double yj = x[j] / col[0];
    x[j] = yj;
    const int m = static_cast<int>(std::min<std::int64_t>(bw, n - 1 - j));
    for (int t = 1; t <= m; ++t) x[j + t] -= col[t] * yj;
  }
  // L^T x = y, dot products against stored columns.
  for (std::int64_t j = n - 1; j >= 0; --j) {
    const double* col = l_.column(j);
    const int m = static_cast<int>(std::min<std::int64_t>(bw, n - 1 - j));
    double s = x[j];
    for (int t = 1; t <= m; ++t) s -= col[t] * x[j + t];
    x[j] = s / col[0];
  }
}

} // namespace lsc
