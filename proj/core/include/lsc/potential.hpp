#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>

#include "lsc/grid.hpp"
#include "lsc/polynomial.hpp"

namespace lsc {

// Nonnegative polynomial potential. Nonnegativity is sampled at quasi-random
// probe points in a box, not proven; a negative sample aborts construction.
class PolynomialPotential {
public:
  static constexpr int kDefaultProbes = 10'000;

  PolynomialPotential(Polynomial poly, double probe_half_width, int probes = kDefaultProbes);

  int dimension() const { return poly_.dimension(); }
  int total_degree() const { return poly_.total_degree(); }
  const Polynomial& poly() const { return poly_; }

  double eval(std::span<const double> point) const { return poly_.eval(point); }

private:
  Polynomial poly_;
};

// Nonnegative scalar field sampled on a grid; evaluated between nodes by
// multilinear interpolation (coordinates clamped to the node hull).
class SampledPotential {
public:
  SampledPotential(Grid grid, std::vector<double> values);

  int dimension() const { return grid_.dimension(); }
  const Grid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }

  double eval(std::span<const double> point) const;

private:
  Grid grid_;
  std::vector<double> values_;
};

using Potential = std::variant<PolynomialPotential, SampledPotential>;

int dimension(const Potential& pot);
double eval(const Potential& pot, std::span<const double> point);

bool derivative_vanishes_identically(const PolynomialPotential& pot, int axis);

// Cylindrical extension V~(x, t) = V(x); polynomial potentials only.
Potential lift_potential(const Potential& pot, int extra_dims);

// Builtin names: "harmonic" (|x|^2), "simon" (x^2 y^2, 2D only), "const:<c>".
// A polynomial literal is parsed separately in config.
Potential make_builtin_potential(const std::string& name, int dim, double probe_half_width);

Polynomial harmonic_polynomial(int dim);
Polynomial simon_polynomial();
Polynomial constant_polynomial(int dim, double c);

// Node-sampled values of a potential on a grid (exact at nodes).
ScalarField sample_on_grid(const Potential& pot, const Grid& grid);

} // namespace lsc
