#pragma once

#include <string>
#include <vector>

#include "lsc/counting.hpp"
#include "lsc/landscape.hpp"
#include "lsc/maximal.hpp"
#include "lsc/spectra.hpp"

namespace lsc {

struct SandwichRow {
  double mu = 0.0;
  std::int64_t count = 0; // eigenvalues <= mu of the discretized operator
};

struct SandwichParams {
  double c_min = 1e-3;
  double c_max = 1e3; // upper scan endpoint for C
  int points_per_decade = 200;
};

// Two-sided volume bound: largest c in (0,1] with (c mu)^(d/2) V(c mu) <=
// count(mu) at every grid mu, and smallest C in [1, c_max] with the reversed
// inequality. Both scans walk a logarithmic grid; monotonicity of
// s -> (s mu)^(d/2) V(s mu) makes the first hit the extremal constant.
struct SandwichReport {
  int dimension = 1;
  std::vector<SandwichRow> rows;
  bool lower_found = false;
  bool upper_found = false;
  double c_est = 0.0;
  double C_est = 0.0;
  bool domain_adequate = false;
  double adequacy_level = 0.0; // C_est * mu_max, the probed sublevel height
  double c_h = 1.0;
  // Proof-structure thresholds, logged only, never asserted.
  double upper_lemma_threshold = 0.0;     // max(2, 2d/pi^2)
  double lower_lemma_threshold = 0.0;     // 1 + (4 C_H)^2
  bool upper_consistent_with_lemma = false; // C_est <= upper threshold
  bool lower_consistent_with_lemma = false; // 1/c_est <= lower threshold
};

SandwichReport sandwich_constants(const std::vector<SandwichRow>& rows,
                                  const ScalarField& effective_potential, double c_h,
                                  SandwichParams params = {});

enum class EquivalenceKind { UVsM, MVsSmithZhong, MLift, MGrowth };

std::string to_string(EquivalenceKind kind);

struct EquivalenceReport {
  EquivalenceKind kind = EquivalenceKind::UVsM;
  double ratio_min = 0.0;
  double ratio_max = 0.0;
  double spread = 0.0; // ratio_max / ratio_min
  int samples = 0;
  int noncontiguous_m_samples = 0;
  // Growth-bound fit only: smallest-squares slope k and envelope constant C
  // such that m(x) <= C m(y) (1 + |x-y| m(y))^k on all sampled pairs.
  double fitted_exponent = 0.0;
  double fitted_constant = 0.0;
};

// Ratios u(x) m(x,V)^2 over strided interior nodes.
EquivalenceReport equivalence_u_m(const LandscapeSolution& sol, const PolynomialPotential& pot,
                                  int max_samples = 400);

// Ratios m/M over quasi-random samples in a box.
EquivalenceReport equivalence_m_M(const PolynomialPotential& pot, double box_half_width,
                                  int samples);

// Ratios m(x,V) / m((x,0),lifted V) over quasi-random samples.
EquivalenceReport equivalence_m_lift(const PolynomialPotential& pot, double box_half_width,
                                     int samples);

// Empirical growth-bound fit over sampled pairs (empirical stand-in for the
// existence exponent; reported, never asserted).
EquivalenceReport growth_fit(const PolynomialPotential& pot, double box_half_width, int samples);

// Taylor-type bound for the polynomial maximal function: the single constant
// C with M(y) <= C M(x) (1 + |x-y| M(x))^(D/2) over all sampled pairs.
double taylor_bound_constant(const PolynomialPotential& pot, double box_half_width, int samples);

// Discreteness criterion for polynomials: no partial derivative vanishes
// identically.
bool diagnose_discreteness_polynomial(const PolynomialPotential& pot);

// Per-shell sup of u over {|x| >= R}; "consistent with discrete" requires a
// strictly decreasing sequence whose last value is below half the first.
// Evidence from finite data, not proof.
struct ShellTrend {
  std::vector<double> radii;
  std::vector<double> sups;
  bool consistent_with_discrete = false;
  std::string verdict;
};

ShellTrend diagnose_discreteness_numeric(const LandscapeSolution& sol,
                                         std::span<const double> shell_radii);

// Integral of u over nested boxes; geometric decay of the increments across
// the last three boxes reads as integrability (form-domain membership).
struct L1Trend {
  std::vector<double> box_half_widths;
  std::vector<double> integrals;
  std::vector<double> increments;
  bool integrable = false;
  std::string verdict;
};

inline constexpr double kL1DecayRatio = 0.8;

L1Trend l1_probe(const LandscapeSolution& sol, std::span<const double> box_half_widths);

} // namespace lsc
