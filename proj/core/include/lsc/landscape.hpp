#pragma once

#include <memory>
#include <optional>

#include "lsc/discrete_operator.hpp"

namespace lsc {

enum class RhsKind { Full, Indicator };

struct SolveStats {
  double residual_inf = 0.0; // |A u - rhs|_inf / |rhs|_inf
  int refinement_steps = 0;
  double factor_seconds = 0.0; // in-memory only; never serialized
  double solve_seconds = 0.0;
};

struct LandscapeSolution {
  ScalarField u;
  RhsKind rhs_kind = RhsKind::Full;
  double indicator_radius = 0.0;
  SolveStats stats;
};

inline constexpr double kResidualTolerance = 1e-10;

// One factorization serving many right-hand sides.
class LandscapeSolver {
public:
  explicit LandscapeSolver(const DiscreteOperator& op,
                           std::int64_t band_entry_cap = kDefaultBandEntryCap);

  LandscapeSolution solve_full() const;
  LandscapeSolution solve_indicator(double radius) const;

  const DiscreteOperator& op() const { return *op_; }

private:
  const DiscreteOperator* op_;
  double factor_seconds_ = 0.0; // written while chol_ is built below
  BandCholesky chol_;

  LandscapeSolution run(std::vector<double> rhs, RhsKind kind, double radius) const;
};

LandscapeSolution solve_landscape(const DiscreteOperator& op, RhsKind kind,
                                  double indicator_radius = 0.0);

// Indicator right-hand sides 1_B(0,L) for increasing radii, one shared
// factorization; all radii must be below the grid half-width.
std::vector<LandscapeSolution> landscape_sequence(const DiscreteOperator& op,
                                                  std::span<const double> radii);

// W = 1/u, node-wise.
ScalarField effective_potential(const LandscapeSolution& sol);

struct HarnackReport {
  double c_h = 1.0; // >= 1
  int samples_used = 0;
  int skipped_small_boxes = 0; // fewer than 4 nodes after clipping
  int clipped_boxes = 0;       // boxes cut by the interior boundary
  std::array<double, 3> worst_x{0.0, 0.0, 0.0};
};

// C_H estimate: max over sampled interior x of max/min of u over the cube of
// sidelength 2 sqrt(u(x)) centered at x, clipped to the interior subdomain.
// Node extrema stand in for the essential extrema.
HarnackReport harnack_constant(const LandscapeSolution& sol, int max_samples = 256);

} // namespace lsc
