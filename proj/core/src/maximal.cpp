#include "lsc/maximal.hpp"

#include <cmath>

namespace lsc {

namespace {

std::function<double(double)> make_avg_evaluator(const Potential& pot,
                                                 std::span<const double> x,
                                                 double* r_max_domain) {
  if (const auto* p = std::get_if<PolynomialPotential>(&pot)) {
    AvgProfile profile(p->poly(), x);
    return [profile = std::move(profile)](double r) { return profile(r); };
  }
  const auto& sp = std::get<SampledPotential>(pot);
  const Grid& g = sp.grid();
  double limit = g.half_width() - 0.5 * g.spacing();
  for (int a = 0; a < g.dimension(); ++a) limit = std::min(limit, g.half_width() - 0.5 * g.spacing() - std::abs(x[a]));
  *r_max_domain = limit;
  std::vector<double> xs(x.begin(), x.end());
  return [pot, xs](double r) {
    return avg_functional(pot, std::span<const double>(xs.data(), xs.size()), r);
  };
}

} // namespace

MaximalMResult maximal_m(const Potential& pot, std::span<const double> x,
                         MaximalSearchParams params) {
  if (!(params.rel_tol > 0.0)) throw ConfigError("maximal_m: tolerance must be > 0");
  if (static_cast<int>(x.size()) != dimension(pot))
    throw ConfigError("maximal_m: point dimension mismatch");

  double r_domain = params.r_max;
  auto F = make_avg_evaluator(pot, x, &r_domain);
  const double r_lo = params.r_min;
  const double r_hi = std::min(params.r_max, r_domain);
  if (!(r_hi > r_lo)) throw ConfigError("maximal_m: empty radius search range");

  const int np = params.scan_points;
  const double step = std::log(r_hi / r_lo) / (np - 1);
  int last_feasible = -1;
  bool infeasible_below = false;
  std::vector<double> rs(np);
  for (int i = 0; i < np; ++i) {
    rs[i] = r_lo * std::exp(step * i);
    if (F(rs[i]) <= 1.0) {
      if (last_feasible >= 0 && last_feasible < i - 1) infeasible_below = true;
      last_feasible = i;
    }
  }
  if (last_feasible < 0)
    throw NumericError("maximal_m: no feasible radius in scan range (average > 1 at all scales)");
  if (last_feasible == np - 1)
    throw NumericError("maximal_m: feasible at the largest scanned radius; enlarge radius range");

  double lo = rs[last_feasible], hi = rs[last_feasible + 1];
  while (hi - lo > params.rel_tol * lo) {
    const double mid = 0.5 * (lo + hi);
    if (F(mid) <= 1.0)
      lo = mid;
    else
      hi = mid;
  }
  MaximalMResult res;
  res.r_star = lo;
  res.value = 1.0 / lo;
  res.feasible_set_noncontiguous = infeasible_below;
  return res;
}

SmithZhongEvaluator::SmithZhongEvaluator(const Polynomial& poly) : dim_(poly.dimension()) {
  const int D = poly.total_degree();
  // Enumerate all alpha with |alpha| <= D, ordered by the MultiIndex ordering
  // for determinism.
  std::array<int, 3> e{0, 0, 0};
  std::function<void(int, int)> walk = [&](int axis, int budget) {
    if (axis == dim_) {
      MultiIndex alpha;
      alpha.dim = dim_;
      alpha.e = e;
      Polynomial der = poly.derivative(alpha);
      if (!der.is_zero()) derivatives_.emplace_back(alpha.order(), std::move(der));
      return;
    }
    for (int k = 0; k <= budget; ++k) {
      e[axis] = k;
      walk(axis + 1, budget - k);
    }
    e[axis] = 0;
  };
  walk(0, D);
}

double SmithZhongEvaluator::operator()(std::span<const double> x) const {
  double sum = 0.0;
  for (const auto& [order, der] : derivatives_) {
    const double v = std::abs(der.eval(x));
    if (v > 0.0) sum += std::pow(v, 1.0 / (order + 2));
  }
  return sum;
}

double maximal_M(const PolynomialPotential& pot, std::span<const double> x) {
  return SmithZhongEvaluator(pot.poly())(x);
}

ConditionSampleSpec default_condition_samples(int dim, double box_half_width, int n_centers,
                                              int n_radii, double r_min, double r_max) {
  ConditionSampleSpec spec;
  spec.centers = halton_box(dim, n_centers, box_half_width);
  spec.radii.resize(n_radii);
  const double step = std::log(r_max / r_min) / (n_radii - 1);
  for (int i = 0; i < n_radii; ++i) spec.radii[i] = r_min * std::exp(step * i);
  return spec;
}

ConditionReport check_condition(const Potential& pot, ConditionKind kind,
                                const ConditionSampleSpec& spec) {
  if (spec.centers.empty() || spec.radii.empty())
    throw ConfigError("check_condition: empty sample set");
  for (double r : spec.radii)
    if (!(r > 0.0)) throw ConfigError("check_condition: degenerate radius");

  const int d = dimension(pot);
  ConditionReport report;
  report.kind = kind;
  report.delta = spec.delta;

  for (const auto& x : spec.centers) {
    if (static_cast<int>(x.size()) != d)
      throw ConfigError("check_condition: center dimension mismatch");
    std::span<const double> xs(x.data(), x.size());
    if (kind == ConditionKind::Kato) {
      if (!(spec.delta > 0.0)) throw ConfigError("Kato condition requires delta > 0");
      for (size_t i = 0; i < spec.radii.size(); ++i) {
        const double r = spec.radii[i];
        const double num = std::pow(r, -spec.delta) * avg_functional(pot, xs, r);
        for (size_t j = i + 1; j < spec.radii.size(); ++j) {
          const double R = spec.radii[j];
          const double den = std::pow(R, -spec.delta) * avg_functional(pot, xs, R);
          ++report.samples;
          if (den <= 0.0) continue; // V vanishes on the larger ball
          const double ratio = num / den;
          if (ratio > report.constant_estimate) {
            report.constant_estimate = ratio;
            report.worst_case = {x, r, R};
          }
        }
      }
    } else {
      for (double r : spec.radii) {
        ++report.samples;
        const double num = ball_integral(pot, xs, 2.0 * r);
        const double den = ball_integral(pot, xs, r) + std::pow(r, d - 2);
        const double ratio = num / den;
        if (ratio > report.constant_estimate) {
          report.constant_estimate = ratio;
          report.worst_case = {x, r, 0.0};
        }
      }
    }
  }
  return report;
}

} // namespace lsc
