#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lsc/ball.hpp"
#include "lsc/potential.hpp"

namespace lsc {

struct MaximalMResult {
  double value = 0.0;  // m(x, V)
  double r_star = 0.0; // located sup radius, value = 1/r_star
  // True when infeasible radii were scanned below the chosen sup; the
  // defining set need not be an interval for general Kato potentials.
  bool feasible_set_noncontiguous = false;
};

struct MaximalSearchParams {
  double r_min = 1e-6;
  double r_max = 1e6;
  int scan_points = 120;
  double rel_tol = 1e-9;
};

// Fefferman-Phong-Shen maximal function: value = 1/r*, r* the largest radius
// with radius^(2-d) * integral_B(x,r) V <= 1, located by a logarithmic scan
// refined by bisection.
MaximalMResult maximal_m(const Potential& pot, std::span<const double> x,
                         MaximalSearchParams params = {});

// Smith-Zhong polynomial maximal function: sum over |alpha| <= total degree
// of |d^alpha V(x)|^(1/(|alpha|+2)), alpha = 0 included.
class SmithZhongEvaluator {
public:
  explicit SmithZhongEvaluator(const Polynomial& poly);
  double operator()(std::span<const double> x) const;

private:
  int dim_;
  std::vector<std::pair<int, Polynomial>> derivatives_; // (|alpha|, d^alpha V)
};

double maximal_M(const PolynomialPotential& pot, std::span<const double> x);

enum class ConditionKind { Kato, Doubling };

struct ConditionWorstCase {
  std::vector<double> x;
  double r = 0.0;
  double R = 0.0; // Kato only
};

struct ConditionReport {
  ConditionKind kind = ConditionKind::Kato;
  double constant_estimate = 0.0; // C_K or C_D
  double delta = 0.0;             // Kato only
  ConditionWorstCase worst_case;
  int samples = 0;
};

struct ConditionSampleSpec {
  std::vector<std::vector<double>> centers;
  std::vector<double> radii; // Kato uses all ordered pairs r < R
  double delta = 2.0;        // polynomial default; required input otherwise
};

ConditionSampleSpec default_condition_samples(int dim, double box_half_width, int n_centers = 10,
                                              int n_radii = 6, double r_min = 0.1,
                                              double r_max = 100.0);

ConditionReport check_condition(const Potential& pot, ConditionKind kind,
                                const ConditionSampleSpec& spec);

} // namespace lsc
