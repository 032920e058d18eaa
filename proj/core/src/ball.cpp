#include "lsc/ball.hpp"

#include <cmath>

#include "lsc/halton.hpp"

namespace lsc {

double unit_ball_moment(const MultiIndex& alpha) {
  if (!alpha.all_even()) return 0.0;
  double lg = 0.0, bsum = 0.0;
  for (int a = 0; a < alpha.dim; ++a) {
    const double b = 0.5 * (alpha[a] + 1);
    lg += std::lgamma(b);
    bsum += b;
  }
  lg -= std::lgamma(bsum);
  return 2.0 * std::exp(lg) / (alpha.order() + alpha.dim);
}

namespace {

double poly_ball_integral(const Polynomial& poly, std::span<const double> center, double r) {
  const Polynomial local = poly.recenter(center);
  const int d = poly.dimension();
  double sum = 0.0;
  for (const auto& [alpha, c] : local.terms()) {
    const double mom = unit_ball_moment(alpha);
    if (mom == 0.0) continue;
    sum += c * mom * std::pow(r, alpha.order() + d);
  }
  return sum;
}

double sampled_ball_integral(const SampledPotential& pot, std::span<const double> center,
                             double r) {
  const Grid& g = pot.grid();
  const int d = g.dimension();
  const double h = g.spacing();
  const double half = 0.5 * h;
  // Cells are h-cubes centered on nodes; the covered region is the node hull
  // padded by half a cell.
  for (int a = 0; a < d; ++a) {
    const double limit = g.half_width() - half + 1e-12 * g.half_width();
    if (std::abs(center[a]) + r > limit)
      throw ConfigError("ball_integral: ball exits sampled domain");
  }

  std::array<int, 3> lo{0, 0, 0}, hi{0, 0, 0};
  for (int a = 0; a < d; ++a) {
    lo[a] = std::max(0, static_cast<int>(std::floor((center[a] - r - g.coord(0)) / h)));
    hi[a] = std::min(g.nodes_per_side() - 1,
                     static_cast<int>(std::ceil((center[a] + r - g.coord(0)) / h)));
  }

  // Fixed sub-sample offsets for boundary cells, in [-1/2, 1/2)^d.
  constexpr int kSub = 8;
  static thread_local std::vector<std::array<double, 3>> sub;
  if (sub.empty()) {
    sub.resize(kSub);
    static constexpr unsigned bases[3] = {2, 3, 5};
    for (int s = 0; s < kSub; ++s)
      for (int a = 0; a < 3; ++a) sub[s][a] = radical_inverse(bases[a], s + 1) - 0.5;
  }

  const double cell = std::pow(h, d);
  const double r2 = r * r;
  double sum = 0.0;
  std::array<int, 3> t = lo;
  while (true) {
    double near2 = 0.0, far2 = 0.0;
    for (int a = 0; a < d; ++a) {
      const double dist = std::abs(g.coord(t[a]) - center[a]);
      const double nr = std::max(0.0, dist - half);
      const double fr = dist + half;
      near2 += nr * nr;
      far2 += fr * fr;
    }
    if (far2 <= r2) {
      sum += pot.values()[g.pack(t)] * cell;
    } else if (near2 < r2) {
      int inside = 0;
      for (int s = 0; s < kSub; ++s) {
        double q2 = 0.0;
        for (int a = 0; a < d; ++a) {
          const double y = g.coord(t[a]) + sub[s][a] * h - center[a];
          q2 += y * y;
        }
        if (q2 <= r2) ++inside;
      }
      sum += pot.values()[g.pack(t)] * cell * (double(inside) / kSub);
    }
    int a = d - 1;
    while (a >= 0) {
      if (++t[a] <= hi[a]) break;
      t[a] = lo[a];
      --a;
    }
    if (a < 0) break;
  }
  return sum;
}

} // namespace

double ball_integral(const Potential& pot, std::span<const double> center, double radius) {
  if (!(radius > 0.0)) throw ConfigError("ball_integral: radius must be > 0");
  if (static_cast<int>(center.size()) != dimension(pot))
    throw ConfigError("ball_integral: center dimension mismatch");
  if (const auto* p = std::get_if<PolynomialPotential>(&pot))
    return poly_ball_integral(p->poly(), center, radius);
  return sampled_ball_integral(std::get<SampledPotential>(pot), center, radius);
}

double avg_functional(const Potential& pot, std::span<const double> center, double radius) {
  const int d = dimension(pot);
  return std::pow(radius, 2 - d) * ball_integral(pot, center, radius);
}

AvgProfile::AvgProfile(const Polynomial& poly, std::span<const double> center) {
  const Polynomial local = poly.recenter(center);
  const int d = poly.dimension();
  coeff_.assign(static_cast<size_t>(poly.total_degree()) + 1, 0.0);
  for (const auto& [alpha, c] : local.terms()) {
    const double mom = unit_ball_moment(alpha);
    if (mom == 0.0) continue;
    coeff_[alpha.order()] += c * mom; // multiplies r^(order + d); scaled below
  }
  (void)d; // r^(2-d) * r^(order+d) = r^(order+2), independent of d
}

double AvgProfile::operator()(double r) const {
  // Horner evaluation of sum coeff[k] r^(k+2).
  double acc = 0.0;
  for (size_t k = coeff_.size(); k-- > 0;) acc = acc * r + coeff_[k];
  return acc * r * r;
}

} // namespace lsc
