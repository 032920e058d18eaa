#pragma once

#include <map>
#include <span>
#include <vector>

#include "lsc/multi_index.hpp"

namespace lsc {

// Signed polynomial in d in {1,2,3} variables, stored as multi-index ->
// coefficient. Derivatives of potentials live here; they may take negative
// values, unlike a Potential.
class Polynomial {
public:
  explicit Polynomial(int dim);
  Polynomial(int dim, std::map<MultiIndex, double> terms);

  int dimension() const { return dim_; }
  int total_degree() const { return total_degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<MultiIndex, double>& terms() const { return terms_; }

  void set_term(const MultiIndex& alpha, double coeff);

  double eval(std::span<const double> point) const;

  // Exact coefficient-level differentiation along one axis.
  Polynomial partial_derivative(int axis) const;

  // Arbitrary-order derivative, one axis order per component of alpha.
  Polynomial derivative(const MultiIndex& alpha) const;

  // Coefficients of y -> p(center + y); exact binomial recentering.
  Polynomial recenter(std::span<const double> center) const;

  // Same terms with zero exponents on extra_dims appended axes.
  Polynomial lift(int extra_dims) const;

  // p_lambda(x) = lambda^2 p(lambda x).
  Polynomial parabolic_rescale(double lambda) const;

  Polynomial operator*(double s) const;

private:
  int dim_;
  int total_degree_ = 0;
  std::map<MultiIndex, double> terms_; // zero coefficients are never stored

  void recompute_degree();
};

} // namespace lsc
