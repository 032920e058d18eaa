#include "lsc/verify.hpp"

#include <cmath>
#include <numbers>

#include "lsc/halton.hpp"

namespace lsc {

namespace {

double volume_term(const ScalarField& field, int d, double level) {
  return std::pow(level, 0.5 * d) * sublevel_volume(field, level);
}

bool domain_adequate_at(const ScalarField& field, double level) {
  const Grid& g = field.grid;
  for (std::int64_t i = 0; i < g.node_count(); ++i)
    if (field.values[i] <= level && !g.is_interior(g.unpack(i))) return false;
  return true;
}

} // namespace

SandwichReport sandwich_constants(const std::vector<SandwichRow>& rows,
                                  const ScalarField& effective_potential, double c_h,
                                  SandwichParams params) {
  if (rows.empty()) throw ConfigError("sandwich_constants: empty count table");
  const int d = effective_potential.grid.dimension();
  SandwichReport rep;
  rep.dimension = d;
  rep.rows = rows;
  rep.c_h = c_h;

  const double step = std::pow(10.0, -1.0 / params.points_per_decade);

  // Largest c <= 1 with (c mu)^{d/2} V(c mu) <= count at every mu.
  for (double c = 1.0; c >= params.c_min * (1.0 - 1e-12); c *= step) {
    bool ok = true;
    for (const auto& row : rows)
      if (volume_term(effective_potential, d, c * row.mu) > static_cast<double>(row.count)) {
        ok = false;
        break;
      }
    if (ok) {
      rep.lower_found = true;
      rep.c_est = c;
      break;
    }
  }

  // Smallest C >= 1 with count <= (C mu)^{d/2} V(C mu) at every mu.
  for (double C = 1.0; C <= params.c_max * (1.0 + 1e-12); C /= step) {
    bool ok = true;
    for (const auto& row : rows)
      if (static_cast<double>(row.count) > volume_term(effective_potential, d, C * row.mu)) {
        ok = false;
        break;
      }
    if (ok) {
      rep.upper_found = true;
      rep.C_est = C;
      break;
    }
  }

  const double mu_max = rows.back().mu;
  rep.adequacy_level = (rep.upper_found ? rep.C_est : params.c_max) * mu_max;
  rep.domain_adequate = rep.upper_found && domain_adequate_at(effective_potential, rep.adequacy_level);

  rep.upper_lemma_threshold = std::max(2.0, 2.0 * d / (std::numbers::pi * std::numbers::pi));
  rep.lower_lemma_threshold = 1.0 + (4.0 * c_h) * (4.0 * c_h);
  rep.upper_consistent_with_lemma = rep.upper_found && rep.C_est <= rep.upper_lemma_threshold;
  rep.lower_consistent_with_lemma =
      rep.lower_found && rep.c_est > 0.0 && 1.0 / rep.c_est <= rep.lower_lemma_threshold;
  return rep;
}

std::string to_string(EquivalenceKind kind) {
  switch (kind) {
    case EquivalenceKind::UVsM: return "u-vs-m";
    case EquivalenceKind::MVsSmithZhong: return "m-vs-M";
    case EquivalenceKind::MLift: return "m-lift";
    case EquivalenceKind::MGrowth: return "m-growth";
  }
  return "unknown";
}

namespace {

EquivalenceReport ratios_to_report(EquivalenceKind kind, const std::vector<double>& ratios,
                                   int noncontig) {
  if (ratios.empty()) throw NumericError("equivalence report: no usable samples");
  EquivalenceReport rep;
  rep.kind = kind;
  rep.ratio_min = std::numeric_limits<double>::infinity();
  rep.ratio_max = 0.0;
  for (double r : ratios) {
    if (!(r > 0.0)) throw NumericError("equivalence report: nonpositive ratio");
    rep.ratio_min = std::min(rep.ratio_min, r);
    rep.ratio_max = std::max(rep.ratio_max, r);
  }
  rep.spread = rep.ratio_max / rep.ratio_min;
  rep.samples = static_cast<int>(ratios.size());
  rep.noncontiguous_m_samples = noncontig;
  return rep;
}

} // namespace

EquivalenceReport equivalence_u_m(const LandscapeSolution& sol, const PolynomialPotential& pot,
                                  int max_samples) {
  const Grid& g = sol.u.grid;
  if (pot.dimension() != g.dimension())
    throw ConfigError("equivalence_u_m: dimension mismatch");
  const auto interior = restrict_interior(sol.u);
  const std::int64_t stride =
      std::max<std::int64_t>(1, static_cast<std::int64_t>(interior.size()) / max_samples);
  const Potential p{pot};
  std::vector<double> ratios;
  int noncontig = 0;
  std::array<double, 3> x{};
  for (size_t s = 0; s < interior.size(); s += static_cast<size_t>(stride)) {
    const std::int64_t idx = interior[s];
    g.node_point(idx, std::span<double>(x.data(), g.dimension()));
    const auto m = maximal_m(p, std::span<const double>(x.data(), g.dimension()));
    if (m.feasible_set_noncontiguous) ++noncontig;
    ratios.push_back(sol.u.values[idx] * m.value * m.value);
  }
  return ratios_to_report(EquivalenceKind::UVsM, ratios, noncontig);
}

EquivalenceReport equivalence_m_M(const PolynomialPotential& pot, double box_half_width,
                                  int samples) {
  const int d = pot.dimension();
  const Potential p{pot};
  const SmithZhongEvaluator M(pot.poly());
  std::vector<double> ratios;
  int noncontig = 0;
  std::vector<double> x(d);
  for (int k = 0; k < samples; ++k) {
    halton_point(d, static_cast<unsigned long long>(k), box_half_width, x);
    const auto m = maximal_m(p, x);
    if (m.feasible_set_noncontiguous) ++noncontig;
    ratios.push_back(m.value / M(x));
  }
  return ratios_to_report(EquivalenceKind::MVsSmithZhong, ratios, noncontig);
}

EquivalenceReport equivalence_m_lift(const PolynomialPotential& pot, double box_half_width,
                                     int samples) {
  const int d = pot.dimension();
  if (d >= kMaxDim) throw ConfigError("equivalence_m_lift: lifted dimension unsupported");
  const Potential base{pot};
  const Potential lifted = lift_potential(base, 1);
  std::vector<double> ratios;
  int noncontig = 0;
  std::vector<double> x(d), xt(d + 1, 0.0);
  for (int k = 0; k < samples; ++k) {
    halton_point(d, static_cast<unsigned long long>(k), box_half_width, x);
    for (int a = 0; a < d; ++a) xt[a] = x[a];
    const auto m = maximal_m(base, x);
    const auto mt = maximal_m(lifted, xt);
    if (m.feasible_set_noncontiguous || mt.feasible_set_noncontiguous) ++noncontig;
    ratios.push_back(m.value / mt.value);
  }
  return ratios_to_report(EquivalenceKind::MLift, ratios, noncontig);
}

EquivalenceReport growth_fit(const PolynomialPotential& pot, double box_half_width, int samples) {
  const int d = pot.dimension();
  const Potential p{pot};
  std::vector<std::vector<double>> pts = halton_box(d, samples, box_half_width);
  std::vector<double> mvals(pts.size());
  int noncontig = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    const auto m = maximal_m(p, pts[i]);
    if (m.feasible_set_noncontiguous) ++noncontig;
    mvals[i] = m.value;
  }
  // Least squares of log(m(x)/m(y)) against log(1 + |x-y| m(y)) over ordered
  // pairs, then an envelope constant making the bound hold everywhere.
  double sxx = 0.0, sxy = 0.0, sx = 0.0, sy = 0.0;
  std::int64_t np = 0;
  std::vector<double> ratios;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      double dist2 = 0.0;
      for (int a = 0; a < d; ++a) {
        const double diff = pts[i][a] - pts[j][a];
        dist2 += diff * diff;
      }
      const double t = std::log(1.0 + std::sqrt(dist2) * mvals[j]);
      if (t < 1e-8) continue;
      const double r = std::log(mvals[i] / mvals[j]);
      sxx += t * t;
      sxy += t * r;
      sx += t;
      sy += r;
      ++np;
      ratios.push_back(mvals[i] / mvals[j]);
    }
  if (np < 2) throw ConfigError("growth_fit: not enough sample pairs");
  const double nf = static_cast<double>(np);
  double k = (nf * sxy - sx * sy) / (nf * sxx - sx * sx);
  k = std::max(k, 0.0);

  double C = 0.0;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      double dist2 = 0.0;
      for (int a = 0; a < d; ++a) {
        const double diff = pts[i][a] - pts[j][a];
        dist2 += diff * diff;
      }
      const double base = 1.0 + std::sqrt(dist2) * mvals[j];
      C = std::max(C, mvals[i] / (mvals[j] * std::pow(base, k)));
    }

  EquivalenceReport rep = ratios_to_report(EquivalenceKind::MGrowth, ratios, noncontig);
  rep.fitted_exponent = k;
  rep.fitted_constant = C;
  return rep;
}

double taylor_bound_constant(const PolynomialPotential& pot, double box_half_width, int samples) {
  const int d = pot.dimension();
  const SmithZhongEvaluator M(pot.poly());
  std::vector<std::vector<double>> pts = halton_box(d, samples, box_half_width);
  std::vector<double> Mv(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) Mv[i] = M(pts[i]);
  const double half_deg = 0.5 * pot.total_degree();
  double C = 0.0;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      double dist2 = 0.0;
      for (int a = 0; a < d; ++a) {
        const double diff = pts[i][a] - pts[j][a];
        dist2 += diff * diff;
      }
      // M(y) <= C M(x) (1 + |x-y| M(x))^(D/2) with x = pts[j], y = pts[i].
      C = std::max(C, Mv[i] / (Mv[j] * std::pow(1.0 + std::sqrt(dist2) * Mv[j], half_deg)));
    }
  return C;
}

bool diagnose_discreteness_polynomial(const PolynomialPotential& pot) {
  for (int a = 0; a < pot.dimension(); ++a)
    if (derivative_vanishes_identically(pot, a)) return false;
  return true;
}

ShellTrend diagnose_discreteness_numeric(const LandscapeSolution& sol,
                                         std::span<const double> shell_radii) {
  if (shell_radii.size() < 2)
    throw ConfigError("diagnose_discreteness_numeric: need at least two shells");
  const Grid& g = sol.u.grid;
  const double iw = g.interior_half_width();
  for (size_t i = 0; i < shell_radii.size(); ++i) {
    if (!(shell_radii[i] > 0.0) || !(shell_radii[i] < iw))
      throw ConfigError("shells must lie inside the interior subdomain");
    if (i > 0 && !(shell_radii[i] > shell_radii[i - 1]))
      throw ConfigError("shells must be strictly increasing");
  }

  ShellTrend trend;
  trend.radii.assign(shell_radii.begin(), shell_radii.end());
  trend.sups.assign(shell_radii.size(), 0.0);
  std::vector<bool> seen(shell_radii.size(), false);
  std::array<double, 3> p{};
  for (std::int64_t i : restrict_interior(sol.u)) {
    g.node_point(i, std::span<double>(p.data(), g.dimension()));
    double r2 = 0.0;
    for (int a = 0; a < g.dimension(); ++a) r2 += p[a] * p[a];
    const double r = std::sqrt(r2);
    for (size_t s = 0; s < trend.radii.size(); ++s)
      if (r >= trend.radii[s]) {
        trend.sups[s] = std::max(trend.sups[s], sol.u.values[i]);
        seen[s] = true;
      }
  }
  for (bool b : seen)
    if (!b) throw ConfigError("diagnose_discreteness_numeric: a shell contains no interior node");

  bool strictly_decreasing = true;
  for (size_t s = 1; s < trend.sups.size(); ++s)
    if (!(trend.sups[s] < trend.sups[s - 1])) strictly_decreasing = false;
  trend.consistent_with_discrete =
      strictly_decreasing && trend.sups.back() < 0.5 * trend.sups.front();
  trend.verdict = trend.consistent_with_discrete
                      ? "consistent with discrete spectrum (finite-data evidence, not proof)"
                      : "not consistent with discrete spectrum at tested scale";
  return trend;
}

L1Trend l1_probe(const LandscapeSolution& sol, std::span<const double> box_half_widths) {
  if (box_half_widths.size() < 4)
    throw ConfigError("l1_probe: need at least four nested boxes");
  const Grid& g = sol.u.grid;
  const double iw = g.interior_half_width();
  for (size_t i = 0; i < box_half_widths.size(); ++i) {
    if (!(box_half_widths[i] > 0.0) || box_half_widths[i] > iw + 1e-12 * iw)
      throw ConfigError("l1_probe: boxes must lie inside the interior subdomain");
    if (i > 0 && !(box_half_widths[i] > box_half_widths[i - 1]))
      throw ConfigError("l1_probe: boxes must be nested (increasing)");
  }

  L1Trend trend;
  trend.box_half_widths.assign(box_half_widths.begin(), box_half_widths.end());
  trend.integrals.assign(box_half_widths.size(), 0.0);
  double cell = 1.0;
  for (int a = 0; a < g.dimension(); ++a) cell *= g.spacing();
  std::array<double, 3> p{};
  for (std::int64_t i = 0; i < g.node_count(); ++i) {
    g.node_point(i, std::span<double>(p.data(), g.dimension()));
    double linf = 0.0;
    for (int a = 0; a < g.dimension(); ++a) linf = std::max(linf, std::abs(p[a]));
    for (size_t b = 0; b < trend.box_half_widths.size(); ++b)
      if (linf <= trend.box_half_widths[b]) trend.integrals[b] += cell * sol.u.values[i];
  }
  trend.increments.resize(trend.integrals.size() - 1);
  for (size_t b = 1; b < trend.integrals.size(); ++b)
    trend.increments[b - 1] = trend.integrals[b] - trend.integrals[b - 1];

  const size_t m = trend.increments.size();
  auto ratio = [&](size_t hi, size_t lo) {
    return trend.increments[lo] > 0.0 ? trend.increments[hi] / trend.increments[lo] : 0.0;
  };
  trend.integrable = ratio(m - 1, m - 2) <= kL1DecayRatio && ratio(m - 2, m - 3) <= kL1DecayRatio;
  trend.verdict = trend.integrable ? "integrable at tested scale (form-domain verdict)"
                                   : "not integrable at tested scale";
  return trend;
}

} // namespace lsc
