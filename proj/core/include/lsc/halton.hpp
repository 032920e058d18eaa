#pragma once

#include <span>
#include <vector>

namespace lsc {

// Van der Corput radical inverse; bases 2, 3, 5 cover the supported dims.
inline double radical_inverse(unsigned base, unsigned long long i) {
  double f = 1.0, r = 0.0;
  while (i > 0) {
    f /= base;
    r += f * (i % base);
    i /= base;
  }
  return r;
}

// k-th Halton point in [-half_width, half_width]^dim (k starts at 0; the
// index is offset to skip the degenerate origin).
inline void halton_point(int dim, unsigned long long k, double half_width,
                         std::span<double> out) {
  static constexpr unsigned bases[3] = {2, 3, 5};
  for (int a = 0; a < dim; ++a)
    out[a] = (2.0 * radical_inverse(bases[a], k + 1) - 1.0) * half_width;
}

inline std::vector<std::vector<double>> halton_box(int dim, int count, double half_width) {
  std::vector<std::vector<double>> pts(count, std::vector<double>(dim));
  for (int k = 0; k < count; ++k) halton_point(dim, k, half_width, pts[k]);
  return pts;
}

} // namespace lsc
