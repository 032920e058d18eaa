#pragma once

#include "lsc/band_matrix.hpp"
#include "lsc/grid.hpp"
#include "lsc/potential.hpp"

namespace lsc {

// Finite-difference matrix of -Laplacian + V on a grid with Dirichlet
// truncation: diagonal 2d/h^2 + V(node), off-diagonal -1/h^2 at axis
// neighbors. Stored as the diagonal plus the stencil rule; band columns are
// generated on demand, so the matrix is exactly symmetric by construction.
class DiscreteOperator {
public:
  DiscreteOperator(const Grid& grid, std::vector<double> node_potential);

  const Grid& grid() const { return grid_; }
  std::int64_t size() const { return grid_.node_count(); }
  int bandwidth() const { return static_cast<int>(grid_.stride(0)); }
  double off_diagonal() const { return off_; }
  double diagonal(std::int64_t i) const { return diag_[i]; }

  void fill_column(std::int64_t j, std::span<double> out) const;
  double inf_norm() const;

  // y = A x.
  void apply(std::span<const double> x, std::span<double> y) const;

private:
  Grid grid_;
  std::vector<double> diag_;
  double off_;
};

DiscreteOperator assemble(const Potential& pot, const Grid& grid);
DiscreteOperator assemble(const ScalarField& node_potential);

} // namespace lsc
