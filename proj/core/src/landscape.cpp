#include "lsc/landscape.hpp"

#include <chrono>
#include <cmath>

namespace lsc {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<double> indicator_rhs(const Grid& grid, double radius) {
  if (!(radius > 0.0)) throw ConfigError("indicator rhs: radius must be > 0");
  if (!(radius < grid.half_width()))
    throw ConfigError("indicator rhs: radius must be below the grid half-width");
  std::vector<double> rhs(grid.node_count(), 0.0);
  const double r2 = radius * radius;
  std::array<double, 3> p{};
  bool any = false;
  for (std::int64_t i = 0; i < grid.node_count(); ++i) {
    grid.node_point(i, std::span<double>(p.data(), grid.dimension()));
    double s = 0.0;
    for (int a = 0; a < grid.dimension(); ++a) s += p[a] * p[a];
    if (s <= r2) {
      rhs[i] = 1.0;
      any = true;
    }
  }
  if (!any) throw ConfigError("indicator rhs: ball contains no grid node");
  return rhs;
}

} // namespace

LandscapeSolver::LandscapeSolver(const DiscreteOperator& op, std::int64_t band_entry_cap)
    : op_(&op), chol_([&] {
        const auto t0 = std::chrono::steady_clock::now();
        BandCholesky c(op, band_entry_cap);
        factor_seconds_ = seconds_since(t0);
        return c;
      }()) {}

LandscapeSolution LandscapeSolver::run(std::vector<double> rhs, RhsKind kind,
                                       double radius) const {
  const auto t0 = std::chrono::steady_clock::now();
  const std::int64_t n = op_->size();
  std::vector<double> u = rhs;
  chol_.solve(std::span<double>(u.data(), u.size()));

  // Residual check with one refinement pass before giving up.
  std::vector<double> work(n);
  int refinements = 0;
  double res = 0.0;
  for (int attempt = 0;; ++attempt) {
    op_->apply(u, work);
    res = 0.0;
    for (std::int64_t i = 0; i < n; ++i) res = std::max(res, std::abs(work[i] - rhs[i]));
    if (res <= kResidualTolerance) break;
    if (attempt >= 2)
      throw NumericError("solve_landscape: residual " + std::to_string(res) +
                         " above tolerance after refinement");
    for (std::int64_t i = 0; i < n; ++i) work[i] = rhs[i] - work[i];
    chol_.solve(std::span<double>(work.data(), work.size()));
    for (std::int64_t i = 0; i < n; ++i) u[i] += work[i];
    ++refinements;
  }

  for (std::int64_t i = 0; i < n; ++i)
    if (!(u[i] > 0.0))
      throw NumericError("solve_landscape: nonpositive landscape value at node " +
                         std::to_string(i));

  LandscapeSolution sol{ScalarField(op_->grid(), std::move(u)), kind, radius, {}};
  sol.stats.residual_inf = res;
  sol.stats.refinement_steps = refinements;
  sol.stats.factor_seconds = factor_seconds_;
  sol.stats.solve_seconds = seconds_since(t0);
  return sol;
}

LandscapeSolution LandscapeSolver::solve_full() const {
  return run(std::vector<double>(op_->size(), 1.0), RhsKind::Full, 0.0);
}

LandscapeSolution LandscapeSolver::solve_indicator(double radius) const {
  return run(indicator_rhs(op_->grid(), radius), RhsKind::Indicator, radius);
}

LandscapeSolution solve_landscape(const DiscreteOperator& op, RhsKind kind,
                                  double indicator_radius) {
  LandscapeSolver solver(op);
  return kind == RhsKind::Full ? solver.solve_full() : solver.solve_indicator(indicator_radius);
}

std::vector<LandscapeSolution> landscape_sequence(const DiscreteOperator& op,
                                                  std::span<const double> radii) {
  for (size_t i = 1; i < radii.size(); ++i)
    if (!(radii[i] > radii[i - 1]))
      throw ConfigError("landscape_sequence: radii must be increasing");
  LandscapeSolver solver(op);
  std::vector<LandscapeSolution> out;
  out.reserve(radii.size());
  for (double r : radii) out.push_back(solver.solve_indicator(r));
  return out;
}

ScalarField effective_potential(const LandscapeSolution& sol) {
  ScalarField w = sol.u;
  for (double& v : w.values) {
    if (!(v > 0.0)) throw NumericError("effective_potential: nonpositive landscape value");
    v = 1.0 / v;
  }
  return w;
}

HarnackReport harnack_constant(const LandscapeSolution& sol, int max_samples) {
  if (max_samples < 1) throw ConfigError("harnack_constant: need at least one sample");
  const Grid& g = sol.u.grid;
  const auto interior = restrict_interior(sol.u);
  const std::int64_t stride =
      std::max<std::int64_t>(1, static_cast<std::int64_t>(interior.size()) / max_samples);

  const double iw = g.interior_half_width();
  const double h = g.spacing();
  const int d = g.dimension();
  HarnackReport report;

  for (size_t s = 0; s < interior.size(); s += static_cast<size_t>(stride)) {
    const std::int64_t idx = interior[s];
    const auto center = g.unpack(idx);
    const double half_side = std::sqrt(sol.u.values[idx]); // box Q(x, 2 sqrt(u))

    std::array<int, 3> lo{0, 0, 0}, hi{0, 0, 0};
    bool clipped = false;
    std::int64_t nodes = 1;
    for (int a = 0; a < d; ++a) {
      const double x = g.coord(center[a]);
      double blo = x - half_side, bhi = x + half_side;
      if (blo < -iw) {
        blo = -iw;
        clipped = true;
      }
      if (bhi > iw) {
        bhi = iw;
        clipped = true;
      }
      lo[a] = std::max(0, static_cast<int>(std::ceil((blo + g.half_width()) / h - 1.0 - 1e-9)));
      hi[a] = std::min(g.nodes_per_side() - 1,
                       static_cast<int>(std::floor((bhi + g.half_width()) / h - 1.0 + 1e-9)));
      nodes *= std::max(0, hi[a] - lo[a] + 1);
    }
    if (nodes < 4) {
      ++report.skipped_small_boxes;
      continue;
    }
    if (clipped) ++report.clipped_boxes;

    double umin = std::numeric_limits<double>::infinity(), umax = 0.0;
    std::array<int, 3> t = lo;
    while (true) {
      const double v = sol.u.values[g.pack(t)];
      umin = std::min(umin, v);
      umax = std::max(umax, v);
      int a = d - 1;
      while (a >= 0) {
        if (++t[a] <= hi[a]) break;
        t[a] = lo[a];
        --a;
      }
      if (a < 0) break;
    }
    ++report.samples_used;
    const double ratio = umax / umin;
    if (ratio > report.c_h) {
      report.c_h = ratio;
      for (int a = 0; a < d; ++a) report.worst_x[a] = g.coord(center[a]);
    }
  }
  if (report.samples_used == 0)
    throw NumericError("harnack_constant: every sampled box had fewer than 4 nodes");
  return report;
}

} // namespace lsc
