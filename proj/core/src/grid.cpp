#include "lsc/grid.hpp"

#include <algorithm>
#include <cmath>

namespace lsc {

Grid::Grid(int dim, double half_width, int nodes_per_side, double margin_fraction)
    : dim_(dim), half_width_(half_width), n_(nodes_per_side), margin_(margin_fraction) {
  if (dim < 1 || dim > 3) throw ConfigError("Grid: dimension must be 1..3");
  if (!(half_width > 0.0)) throw ConfigError("Grid: half_width must be > 0");
  if (nodes_per_side < 3) throw ConfigError("Grid: nodes_per_side must be >= 3");
  if (dim == 3 && nodes_per_side > 48)
    throw ConfigError("Grid: 3D grids are limited to 48 nodes per side");
  if (margin_fraction < 0.0 || margin_fraction > 0.45)
    throw ConfigError("Grid: margin_fraction must be in [0, 0.45]");
  h_ = 2.0 * half_width_ / (n_ + 1);
  count_ = 1;
  for (int a = 0; a < dim_; ++a) count_ *= n_;
  for (int a = 0; a < dim_; ++a) {
    std::int64_t s = 1;
    for (int b = a + 1; b < dim_; ++b) s *= n_;
    strides_[a] = s;
  }
}

std::vector<std::int64_t> interior_node_indices(const Grid& grid) {
  std::vector<std::int64_t> idx;
  const std::int64_t total = grid.node_count();
  idx.reserve(static_cast<size_t>(total));
  for (std::int64_t i = 0; i < total; ++i)
    if (grid.is_interior(grid.unpack(i))) idx.push_back(i);
  return idx;
}

std::vector<std::int64_t> restrict_interior(const ScalarField& field) {
  auto idx = interior_node_indices(field.grid);
  if (idx.empty()) throw ConfigError("restrict_interior: empty interior subdomain");
  return idx;
}

namespace {

template <class F>
void for_scope(const ScalarField& field, Scope scope, F&& f) {
  if (scope == Scope::FullBox) {
    for (std::int64_t i = 0; i < field.grid.node_count(); ++i) f(field.values[i]);
  } else {
    for (std::int64_t i : restrict_interior(field)) f(field.values[i]);
  }
}

} // namespace

double field_min(const ScalarField& field, Scope scope) {
  double m = std::numeric_limits<double>::infinity();
  for_scope(field, scope, [&](double v) { m = std::min(m, v); });
  return m;
}

double field_max(const ScalarField& field, Scope scope) {
  double m = -std::numeric_limits<double>::infinity();
  for_scope(field, scope, [&](double v) { m = std::max(m, v); });
  return m;
}

double field_integral(const ScalarField& field, Scope scope) {
  double s = 0.0;
  for_scope(field, scope, [&](double v) { s += v; });
  double cell = 1.0;
  for (int a = 0; a < field.grid.dimension(); ++a) cell *= field.grid.spacing();
  return s * cell;
}

} // namespace lsc
