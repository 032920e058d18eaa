#include "lsc/discrete_operator.hpp"

#include <cmath>
#include <cstring>

namespace lsc {

DiscreteOperator::DiscreteOperator(const Grid& grid, std::vector<double> node_potential)
    : grid_(grid), diag_(std::move(node_potential)) {
  if (static_cast<std::int64_t>(diag_.size()) != grid_.node_count())
    throw ConfigError("DiscreteOperator: potential sample count does not match grid");
  const double h = grid_.spacing();
  const double lap = 2.0 * grid_.dimension() / (h * h);
  for (std::int64_t i = 0; i < grid_.node_count(); ++i) {
    if (diag_[i] < 0.0)
      throw ConfigError("DiscreteOperator: negative potential sample at a node");
    diag_[i] += lap;
  }
  off_ = -1.0 / (h * h);
}

void DiscreteOperator::fill_column(std::int64_t j, std::span<double> out) const {
  std::memset(out.data(), 0, sizeof(double) * (bandwidth() + 1));
  out[0] = diag_[j];
  const auto t = grid_.unpack(j);
  const int n = grid_.nodes_per_side();
  const int d = grid_.dimension();
  for (int a = 0; a < d; ++a)
    if (t[a] + 1 < n) out[grid_.stride(a)] = off_;
}

double DiscreteOperator::inf_norm() const {
  const int d = grid_.dimension();
  const int n = grid_.nodes_per_side();
  double norm = 0.0;
  for (std::int64_t i = 0; i < grid_.node_count(); ++i) {
    const auto t = grid_.unpack(i);
    int neighbors = 0;
    for (int a = 0; a < d; ++a) {
      if (t[a] > 0) ++neighbors;
      if (t[a] + 1 < n) ++neighbors;
    }
    norm = std::max(norm, diag_[i] + neighbors * std::abs(off_));
  }
  return norm;
}

void DiscreteOperator::apply(std::span<const double> x, std::span<double> y) const {
  const std::int64_t total = size();
  if (static_cast<std::int64_t>(x.size()) != total || static_cast<std::int64_t>(y.size()) != total)
    throw ConfigError("DiscreteOperator::apply: size mismatch");
  const int d = grid_.dimension();
  const int n = grid_.nodes_per_side();
  for (std::int64_t i = 0; i < total; ++i) {
    double s = diag_[i] * x[i];
    const auto t = grid_.unpack(i);
    for (int a = 0; a < d; ++a) {
      const std::int64_t str = grid_.stride(a);
      if (t[a] > 0) s += off_ * x[i - str];
      if (t[a] + 1 < n) s += off_ * x[i + str];
    }
    y[i] = s;
  }
}

DiscreteOperator assemble(const Potential& pot, const Grid& grid) {
  if (dimension(pot) != grid.dimension())
    throw ConfigError("assemble: potential and grid dimension mismatch");
  return DiscreteOperator(grid, sample_on_grid(pot, grid).values);
}

DiscreteOperator assemble(const ScalarField& node_potential) {
  return DiscreteOperator(node_potential.grid, node_potential.values);
}

} // namespace lsc
