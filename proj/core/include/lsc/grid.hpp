#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "lsc/errors.hpp"

namespace lsc {

// Tensor grid of interior nodes on the box (-half_width, half_width)^d with
// the Dirichlet boundary nodes eliminated: per axis, x_i = -L + i*h for
// i = 1..n, h = 2L/(n+1). Node ordering is lexicographic by (x_1,...,x_d),
// the last coordinate varying fastest.
class Grid {
public:
  Grid(int dim, double half_width, int nodes_per_side, double margin_fraction);

  int dimension() const { return dim_; }
  double half_width() const { return half_width_; }
  int nodes_per_side() const { return n_; }
  double margin_fraction() const { return margin_; }
  double spacing() const { return h_; }
  std::int64_t node_count() const { return count_; }
  std::int64_t stride(int axis) const { return strides_[axis]; }

  double coord(int i) const { return -half_width_ + (i + 1) * h_; }

  std::array<int, 3> unpack(std::int64_t idx) const {
    std::array<int, 3> t{0, 0, 0};
    for (int a = dim_ - 1; a >= 0; --a) {
      t[a] = static_cast<int>(idx % n_);
      idx /= n_;
    }
    return t;
  }
  std::int64_t pack(const std::array<int, 3>& t) const {
    std::int64_t idx = 0;
    for (int a = 0; a < dim_; ++a) idx = idx * n_ + t[a];
    return idx;
  }

  void node_point(std::int64_t idx, std::span<double> out) const {
    const auto t = unpack(idx);
    for (int a = 0; a < dim_; ++a) out[a] = coord(t[a]);
  }

  // Margin-restricted statistics subdomain: |x_a| <= half_width*(1-2*margin).
  double interior_half_width() const { return half_width_ * (1.0 - 2.0 * margin_); }
  bool is_interior(const std::array<int, 3>& t) const {
    const double iw = interior_half_width() + 1e-12 * half_width_;
    for (int a = 0; a < dim_; ++a)
      if (coord(t[a]) < -iw || coord(t[a]) > iw) return false;
    return true;
  }

  friend bool operator==(const Grid&, const Grid&) = default;

private:
  int dim_;
  double half_width_;
  int n_;
  double margin_;
  double h_;
  std::int64_t count_;
  std::array<std::int64_t, 3> strides_{0, 0, 0};
};

inline Grid build_grid(int dim, double half_width, int nodes_per_side, double margin_fraction) {
  return Grid(dim, half_width, nodes_per_side, margin_fraction);
}

// One real value per grid node.
struct ScalarField {
  Grid grid;
  std::vector<double> values;

  ScalarField(const Grid& g, std::vector<double> v) : grid(g), values(std::move(v)) {
    if (static_cast<std::int64_t>(values.size()) != grid.node_count())
      throw ConfigError("ScalarField: value count does not match grid");
  }
  ScalarField(const Grid& g, double fill) : grid(g), values(g.node_count(), fill) {}
};

enum class Scope { Interior, FullBox };

// Indices of nodes in the margin-restricted interior subdomain.
std::vector<std::int64_t> interior_node_indices(const Grid& grid);

// Keeps nodes whose every coordinate is at distance >= margin_fraction *
// 2 * half_width from the box boundary; errors if that set is empty.
std::vector<std::int64_t> restrict_interior(const ScalarField& field);

double field_min(const ScalarField& field, Scope scope = Scope::Interior);
double field_max(const ScalarField& field, Scope scope = Scope::Interior);
// h^d-weighted sum over the scope.
double field_integral(const ScalarField& field, Scope scope = Scope::Interior);

} // namespace lsc
