#include "lsc/potential.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>

#include "lsc/halton.hpp"

namespace lsc {

PolynomialPotential::PolynomialPotential(Polynomial poly, double probe_half_width, int probes)
    : poly_(std::move(poly)) {
  if (poly_.is_zero()) throw ConfigError("PolynomialPotential: V must not be identically zero");
  if (!(probe_half_width > 0.0))
    throw ConfigError("PolynomialPotential: probe box must have positive half-width");
  const int d = poly_.dimension();
  std::vector<double> p(d);
  for (int k = 0; k < probes; ++k) {
    halton_point(d, static_cast<unsigned long long>(k), probe_half_width, p);
    const double v = poly_.eval(p);
    if (v < 0.0)
      throw ConfigError("PolynomialPotential: negative value " + std::to_string(v) +
                        " sampled; V must be nonnegative");
  }
}

SampledPotential::SampledPotential(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (static_cast<std::int64_t>(values_.size()) != grid_.node_count())
    throw ConfigError("SampledPotential: value count does not match grid");
  for (double v : values_)
    if (!(v >= 0.0)) throw ConfigError("SampledPotential: values must be nonnegative");
}

double SampledPotential::eval(std::span<const double> point) const {
  const int d = grid_.dimension();
  if (static_cast<int>(point.size()) != d)
    throw ConfigError("SampledPotential::eval: point dimension mismatch");
  const double L = grid_.half_width();
  const double h = grid_.spacing();
  const int n = grid_.nodes_per_side();
  std::array<int, 3> base{0, 0, 0};
  std::array<double, 3> frac{0.0, 0.0, 0.0};
  for (int a = 0; a < d; ++a) {
    if (point[a] < -L || point[a] > L)
      throw ConfigError("SampledPotential::eval: point outside sampled domain");
    // Clamp to the node hull [x_1, x_n], then locate the cell.
    double s = (point[a] - grid_.coord(0)) / h;
    s = std::clamp(s, 0.0, double(n - 1));
    int i = std::min(static_cast<int>(s), n - 2);
    if (n == 1) i = 0;
    base[a] = i;
    frac[a] = std::clamp(s - i, 0.0, 1.0);
  }
  double sum = 0.0;
  const int corners = 1 << d;
  for (int c = 0; c < corners; ++c) {
    double w = 1.0;
    std::array<int, 3> t = base;
    for (int a = 0; a < d; ++a) {
      const bool hi = (c >> a) & 1;
      w *= hi ? frac[a] : 1.0 - frac[a];
      if (hi) t[a] = std::min(t[a] + 1, n - 1);
    }
    sum += w * values_[grid_.pack(t)];
  }
  return sum;
}

int dimension(const Potential& pot) {
  return std::visit([](const auto& p) { return p.dimension(); }, pot);
}

double eval(const Potential& pot, std::span<const double> point) {
  if (static_cast<int>(point.size()) != dimension(pot))
    throw ConfigError("eval: point dimension mismatch");
  return std::visit([&](const auto& p) { return p.eval(point); }, pot);
}

bool derivative_vanishes_identically(const PolynomialPotential& pot, int axis) {
  return pot.poly().partial_derivative(axis).is_zero();
}

Potential lift_potential(const Potential& pot, int extra_dims) {
  const auto* poly = std::get_if<PolynomialPotential>(&pot);
  if (!poly) throw ConfigError("lift_potential: only polynomial potentials can be lifted");
  // Nonnegativity is inherited from the base polynomial; re-sampling in the
  // lifted box would probe the same values.
  Polynomial lifted = poly->poly().lift(extra_dims);
  return PolynomialPotential(std::move(lifted), 1.0, 1);
}

Polynomial harmonic_polynomial(int dim) {
  Polynomial p(dim);
  for (int a = 0; a < dim; ++a) {
    MultiIndex alpha = MultiIndex::zero(dim);
    alpha.e[a] = 2;
    p.set_term(alpha, 1.0);
  }
  return p;
}

Polynomial simon_polynomial() {
  Polynomial p(2);
  p.set_term(MultiIndex{2, 2}, 1.0);
  return p;
}

Polynomial constant_polynomial(int dim, double c) {
  Polynomial p(dim);
  p.set_term(MultiIndex::zero(dim), c);
  return p;
}

Potential make_builtin_potential(const std::string& name, int dim, double probe_half_width) {
  if (name == "harmonic")
    return PolynomialPotential(harmonic_polynomial(dim), probe_half_width);
  if (name == "simon") {
    if (dim != 2) throw ConfigError("builtin 'simon' is two-dimensional");
    return PolynomialPotential(simon_polynomial(), probe_half_width);
  }
  if (name.rfind("const:", 0) == 0) {
    const std::string num = name.substr(6);
    double c = 0.0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), c);
    if (ec != std::errc{} || ptr != num.data() + num.size())
      throw ConfigError("builtin 'const:<c>': could not parse constant '" + num + "'");
    if (!(c > 0.0)) throw ConfigError("builtin 'const:<c>' requires c > 0");
    return PolynomialPotential(constant_polynomial(dim, c), probe_half_width);
  }
  throw ConfigError("unknown builtin potential '" + name + "'");
}

ScalarField sample_on_grid(const Potential& pot, const Grid& grid) {
  if (dimension(pot) != grid.dimension())
    throw ConfigError("sample_on_grid: dimension mismatch");
  ScalarField f(grid, 0.0);
  std::array<double, 3> p{};
  for (std::int64_t i = 0; i < grid.node_count(); ++i) {
    grid.node_point(i, std::span<double>(p.data(), grid.dimension()));
    f.values[i] = eval(pot, std::span<const double>(p.data(), grid.dimension()));
  }
  return f;
}

} // namespace lsc
