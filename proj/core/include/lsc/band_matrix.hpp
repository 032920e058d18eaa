#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "lsc/errors.hpp"

namespace lsc {

// Anything that can hand out columns of a symmetric banded matrix: column j
// holds the entries (j+t, j) for depths t = 0..bandwidth, zero-padded past
// the matrix edge.
template <class S>
concept BandedSource = requires(const S& s, std::int64_t j, std::span<double> col) {
  { s.size() } -> std::convertible_to<std::int64_t>;
  { s.bandwidth() } -> std::convertible_to<int>;
  { s.inf_norm() } -> std::convertible_to<double>;
  s.fill_column(j, col);
};

// Symmetric banded matrix, lower band stored column-major: column j occupies
// depths 0..bw, depth t holding entry (j+t, j).
class BandMatrix {
public:
  BandMatrix(std::int64_t n, int bandwidth);

  std::int64_t size() const { return n_; }
  int bandwidth() const { return bw_; }

  double& at(std::int64_t j, int depth) { return a_[j * (bw_ + 1) + depth]; }
  double at(std::int64_t j, int depth) const { return a_[j * (bw_ + 1) + depth]; }
  double* column(std::int64_t j) { return a_.data() + j * (bw_ + 1); }
  const double* column(std::int64_t j) const { return a_.data() + j * (bw_ + 1); }

  void fill_column(std::int64_t j, std::span<double> out) const;
  double inf_norm() const;

  // Entry (i, j) for |i - j| <= bandwidth, symmetric completion.
  double entry(std::int64_t i, std::int64_t j) const;

private:
  std::int64_t n_;
  int bw_;
  std::vector<double> a_;
};

// Materializes a band source; throws ConfigError when (bw+1)*n exceeds the
// entry cap (default 2e8 entries).
inline constexpr std::int64_t kDefaultBandEntryCap = 200'000'000;

template <BandedSource S>
BandMatrix materialize_band(const S& src, std::int64_t entry_cap = kDefaultBandEntryCap) {
  const std::int64_t n = src.size();
  const int bw = src.bandwidth();
  if ((bw + 1) * n > entry_cap)
    throw ConfigError("band storage exceeds the configured entry cap");
  BandMatrix b(n, bw);
  for (std::int64_t j = 0; j < n; ++j)
    src.fill_column(j, std::span<double>(b.column(j), bw + 1));
  return b;
}

// In-place banded Cholesky A = L L^T; throws NumericError on a nonpositive
// pivot. The factor overwrites the band.
class BandCholesky {
public:
  explicit BandCholesky(BandMatrix a);

  template <BandedSource S>
  explicit BandCholesky(const S& src, std::int64_t entry_cap = kDefaultBandEntryCap)
      : BandCholesky(materialize_band(src, entry_cap)) {}

  std::int64_t size() const { return l_.size(); }

  // Solves A x = b in place.
  void solve(std::span<double> x) const;

private:
  BandMatrix l_;
};

struct PivotScan {
  std::int64_t negative = 0;
  double min_abs = 0.0;
  bool breakdown = false; // a pivot fell below the threshold
};

// Root-free factorization of (A - mu I) through a sliding window of
// (bw+1)^2 entries; only pivot signs are kept. Stops early on breakdown.
template <BandedSource S>
PivotScan band_pivot_scan(const S& src, double mu, double pivot_threshold) {
  const std::int64_t n = src.size();
  const int bw = src.bandwidth();
  const int k = bw + 1;
  std::vector<double> window(static_cast<size_t>(k) * k, 0.0);
  auto slot = [&](std::int64_t c) { return window.data() + (c % k) * k; };

  const std::int64_t preload = std::min<std::int64_t>(n, k);
  for (std::int64_t c = 0; c < preload; ++c) {
    src.fill_column(c, std::span<double>(slot(c), k));
    slot(c)[0] -= mu;
  }

  PivotScan scan;
  scan.min_abs = std::numeric_limits<double>::infinity();
  for (std::int64_t j = 0; j < n; ++j) {
    double* p = slot(j);
    const double d = p[0];
    const double ad = d < 0 ? -d : d;
    if (ad < scan.min_abs) scan.min_abs = ad;
    if (ad < pivot_threshold) {
      scan.breakdown = true;
      return scan;
    }
    if (d < 0) ++scan.negative;

    const int m = static_cast<int>(std::min<std::int64_t>(bw, n - 1 - j));
    for (int q = 1; q <= m; ++q) {
      const double f = p[q] / d;
      if (f == 0.0) continue;
      double* dst = slot(j + q);
      const int lim = m - q;
      for (int t = 0; t <= lim; ++t) dst[t] -= f * p[q + t];
    }
    const std::int64_t incoming = j + k;
    if (incoming < n) {
      src.fill_column(incoming, std::span<double>(slot(incoming), k));
      slot(incoming)[0] -= mu;
    }
  }
  return scan;
}

} // namespace lsc
