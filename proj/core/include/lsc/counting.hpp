#pragma once

#include <span>
#include <vector>

#include "lsc/grid.hpp"

namespace lsc {

// Axis-aligned partition of the interior subdomain into closed boxes of
// sidelength mu^(-1/2); only boxes fully inside the subdomain are kept.
// Nodes on shared faces belong to every adjacent box (box interiors are
// pairwise disjoint, the boxes themselves are closed).
class BoxPartition {
public:
  BoxPartition(const Grid& grid, double mu, std::span<const double> anchor);

  double sidelength() const { return side_; }
  std::int64_t box_count() const { return total_; }

  // Node index range [lo, hi] of box k along one axis; empty when lo > hi.
  struct AxisRange {
    int lo, hi;
  };
  AxisRange node_range(int axis, std::int64_t k) const;
  std::int64_t boxes_along(int axis) const { return kmax_[axis] - kmin_[axis] + 1; }
  std::int64_t first_box(int axis) const { return kmin_[axis]; }

private:
  const Grid* grid_;
  double side_;
  std::array<double, 3> anchor_{0.0, 0.0, 0.0};
  std::array<std::int64_t, 3> kmin_{0, 0, 0}, kmax_{-1, -1, -1};
  std::int64_t total_ = 0;
};

// h^d-weighted count of interior nodes with field value <= mu.
double sublevel_volume(const ScalarField& field, double mu);

struct CoarseCounts {
  std::int64_t N = 0; // boxes whose node-minimum is <= mu
  std::int64_t n = 0; // boxes whose node-maximum is <= mu
  std::int64_t boxes_total = 0;
};

// Requires the box sidelength mu^(-1/2) to be at least 3 grid spacings.
CoarseCounts coarse_counts(const ScalarField& field, double mu, std::span<const double> anchor);

struct CountRow {
  double mu = 0.0;
  double volume = 0.0;
  std::int64_t N = 0;
  std::int64_t n = 0;
  std::int64_t boxes_total = 0;
};

std::vector<CountRow> count_curve(const ScalarField& field, std::span<const double> mu_grid,
                                  std::span<const double> anchor);

// n(mu) <= mu^(d/2) V(mu) <= N(mu) <= n(C_H mu) on the discrete field. The
// mu^(d/2) prefactor follows the box-volume accounting (each box of
// sidelength mu^(-1/2) has volume mu^(-d/2)); for d != 2 the plain mu-scaled
// middle term is reported alongside.
struct ChainCheck {
  double mu = 0.0;
  double c_h = 1.0;
  std::int64_t n_mu = 0;
  double volume_term = 0.0; // mu^(d/2) * V(mu)
  std::int64_t N_mu = 0;
  std::int64_t n_chmu = 0;
  double volume_term_linear_mu = 0.0; // mu * V(mu), reported for d != 2
  bool lower_ok = false;              // n(mu) <= mu^(d/2) V(mu)
  bool middle_ok = false;             // mu^(d/2) V(mu) <= N(mu)
  bool upper_ok = false;              // N(mu) <= n(C_H mu)
  bool all_ok() const { return lower_ok && middle_ok && upper_ok; }
};

ChainCheck chain_check(const ScalarField& field, double mu, double c_h,
                       std::span<const double> anchor);

} // namespace lsc
