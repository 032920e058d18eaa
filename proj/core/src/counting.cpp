#include "lsc/counting.hpp"

#include <cmath>

namespace lsc {

namespace {
constexpr double kSnap = 1e-9; // index-space snap for nodes on box faces
}

BoxPartition::BoxPartition(const Grid& grid, double mu, std::span<const double> anchor)
    : grid_(&grid) {
  if (!(mu > 0.0)) throw ConfigError("BoxPartition: mu must be > 0");
  side_ = 1.0 / std::sqrt(mu);
  if (side_ < 3.0 * grid.spacing())
    throw ConfigError("coarse_counts: box sidelength mu^(-1/2) below 3 grid spacings");
  const int d = grid.dimension();
  if (!anchor.empty() && static_cast<int>(anchor.size()) != d)
    throw ConfigError("BoxPartition: anchor dimension mismatch");
  const double iw = grid.interior_half_width();
  total_ = 1;
  for (int a = 0; a < d; ++a) {
    anchor_[a] = anchor.empty() ? 0.0 : anchor[a];
    kmin_[a] = static_cast<std::int64_t>(std::ceil((-iw - anchor_[a]) / side_ - kSnap));
    kmax_[a] = static_cast<std::int64_t>(std::floor((iw - anchor_[a]) / side_ + kSnap)) - 1;
    total_ *= std::max<std::int64_t>(0, kmax_[a] - kmin_[a] + 1);
  }
}

BoxPartition::AxisRange BoxPartition::node_range(int axis, std::int64_t k) const {
  const double lo = anchor_[axis] + k * side_;
  const double hi = lo + side_;
  const double L = grid_->half_width();
  const double h = grid_->spacing();
  const int n = grid_->nodes_per_side();
  // Node i sits at -L + (i+1) h; closed boxes include face nodes.
  int ilo = static_cast<int>(std::ceil((lo + L) / h - 1.0 - kSnap));
  int ihi = static_cast<int>(std::floor((hi + L) / h - 1.0 + kSnap));
  ilo = std::max(ilo, 0);
  ihi = std::min(ihi, n - 1);
  return {ilo, ihi};
}

double sublevel_volume(const ScalarField& field, double mu) {
  std::int64_t count = 0;
  for (std::int64_t i : restrict_interior(field))
    if (field.values[i] <= mu) ++count;
  double cell = 1.0;
  for (int a = 0; a < field.grid.dimension(); ++a) cell *= field.grid.spacing();
  return cell * count;
}

CoarseCounts coarse_counts(const ScalarField& field, double mu, std::span<const double> anchor) {
  const Grid& g = field.grid;
  const int d = g.dimension();
  BoxPartition part(g, mu, anchor);

  CoarseCounts out;
  out.boxes_total = part.box_count();
  if (out.boxes_total == 0) return out;

  std::array<std::int64_t, 3> k{0, 0, 0};
  for (int a = 0; a < d; ++a) k[a] = part.first_box(a);
  while (true) {
    std::array<BoxPartition::AxisRange, 3> r{};
    bool empty = false;
    for (int a = 0; a < d; ++a) {
      r[a] = part.node_range(a, k[a]);
      if (r[a].lo > r[a].hi) empty = true;
    }
    if (!empty) {
      double vmin = std::numeric_limits<double>::infinity();
      double vmax = -vmin;
      std::array<int, 3> t{r[0].lo, r[1].lo, r[2].lo};
      while (true) {
        const double v = field.values[g.pack(t)];
        vmin = std::min(vmin, v);
        vmax = std::max(vmax, v);
        int a = d - 1;
        while (a >= 0) {
          if (++t[a] <= r[a].hi) break;
          t[a] = r[a].lo;
          --a;
        }
        if (a < 0) break;
      }
      if (vmin <= mu) ++out.N;
      if (vmax <= mu) ++out.n;
    }
    // Advance the box tuple.
    int a = d - 1;
    while (a >= 0) {
      if (++k[a] <= part.first_box(a) + part.boxes_along(a) - 1) break;
      k[a] = part.first_box(a);
      --a;
    }
    if (a < 0) break;
  }
  return out;
}

std::vector<CountRow> count_curve(const ScalarField& field, std::span<const double> mu_grid,
                                  std::span<const double> anchor) {
  std::vector<CountRow> rows;
  rows.reserve(mu_grid.size());
  const double guard = 1.0 / (9.0 * field.grid.spacing() * field.grid.spacing());
  for (double mu : mu_grid) {
    CountRow row{mu, sublevel_volume(field, mu), 0, 0, 0};
    // Box counts are only resolvable while the sidelength mu^(-1/2) spans at
    // least 3 grid spacings; beyond that the row keeps zero boxes.
    if (mu <= guard) {
      const CoarseCounts cc = coarse_counts(field, mu, anchor);
      row.N = cc.N;
      row.n = cc.n;
      row.boxes_total = cc.boxes_total;
    }
    rows.push_back(row);
  }
  return rows;
}

ChainCheck chain_check(const ScalarField& field, double mu, double c_h,
                       std::span<const double> anchor) {
  if (!(c_h >= 1.0)) throw ConfigError("chain_check: C_H must be >= 1");
  const int d = field.grid.dimension();
  ChainCheck chk;
  chk.mu = mu;
  chk.c_h = c_h;
  const CoarseCounts at_mu = coarse_counts(field, mu, anchor);
  const CoarseCounts at_chmu = coarse_counts(field, c_h * mu, anchor);
  const double vol = sublevel_volume(field, mu);
  chk.n_mu = at_mu.n;
  chk.N_mu = at_mu.N;
  chk.n_chmu = at_chmu.n;
  chk.volume_term = std::pow(mu, 0.5 * d) * vol;
  chk.volume_term_linear_mu = mu * vol;
  chk.lower_ok = static_cast<double>(chk.n_mu) <= chk.volume_term;
  chk.middle_ok = chk.volume_term <= static_cast<double>(chk.N_mu);
  chk.upper_ok = chk.N_mu <= chk.n_chmu;
  return chk;
}

} // namespace lsc
