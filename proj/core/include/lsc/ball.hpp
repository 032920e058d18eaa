#pragma once

#include <span>
#include <vector>

#include "lsc/potential.hpp"

namespace lsc {

// Integral of y^alpha over the unit ball in alpha.dim dimensions; zero
// whenever any exponent is odd.
double unit_ball_moment(const MultiIndex& alpha);

// Integral of V over the Euclidean ball B(center, radius). Polynomials are
// integrated exactly (recentred expansion + even moments); sampled potentials
// by the cell-midpoint rule with coverage-weighted boundary cells.
double ball_integral(const Potential& pot, std::span<const double> center, double radius);

// radius^(2-d) * ball_integral.
double avg_functional(const Potential& pot, std::span<const double> center, double radius);

// Exact radial profile of the averaging functional of a polynomial about a
// fixed center: F(r) = sum_k coeff[k] * r^(k+2).
class AvgProfile {
public:
  AvgProfile(const Polynomial& poly, std::span<const double> center);

  double operator()(double r) const;
  const std::vector<double>& coefficients() const { return coeff_; }

private:
  std::vector<double> coeff_;
};

} // namespace lsc
