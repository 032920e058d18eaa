#include "lsc/polynomial.hpp"

#include <cmath>

namespace lsc {

namespace {

double int_pow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

// Binomial coefficients up to the needed row, exact in double for the
// degrees handled here.
double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
  return r;
}

} // namespace

Polynomial::Polynomial(int dim) : dim_(dim) {
  if (dim < 1 || dim > kMaxDim) throw ConfigError("Polynomial: dimension must be 1..3");
}

Polynomial::Polynomial(int dim, std::map<MultiIndex, double> terms) : Polynomial(dim) {
  for (const auto& [alpha, c] : terms) {
    if (alpha.dim != dim) throw ConfigError("Polynomial: multi-index dimension mismatch");
    if (c != 0.0) terms_.emplace(alpha, c);
  }
  recompute_degree();
}

void Polynomial::set_term(const MultiIndex& alpha, double coeff) {
  if (alpha.dim != dim_) throw ConfigError("Polynomial: multi-index dimension mismatch");
  if (coeff == 0.0)
    terms_.erase(alpha);
  else
    terms_[alpha] = coeff;
  recompute_degree();
}

void Polynomial::recompute_degree() {
  total_degree_ = 0;
  for (const auto& [alpha, c] : terms_) total_degree_ = std::max(total_degree_, alpha.order());
}

double Polynomial::eval(std::span<const double> point) const {
  if (static_cast<int>(point.size()) != dim_)
    throw ConfigError("Polynomial::eval: point dimension mismatch");
  double sum = 0.0;
  for (const auto& [alpha, c] : terms_) {
    double t = c;
    for (int a = 0; a < dim_; ++a) t *= int_pow(point[a], alpha[a]);
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::partial_derivative(int axis) const {
  if (axis < 0 || axis >= dim_) throw ConfigError("partial_derivative: axis out of range");
  std::map<MultiIndex, double> out;
  for (const auto& [alpha, c] : terms_) {
    if (alpha[axis] == 0) continue;
    MultiIndex beta = alpha;
    beta.e[axis] -= 1;
    out[beta] += c * alpha[axis];
  }
  return Polynomial(dim_, std::move(out));
}

Polynomial Polynomial::derivative(const MultiIndex& alpha) const {
  Polynomial p = *this;
  for (int a = 0; a < dim_; ++a)
    for (int k = 0; k < alpha[a]; ++k) p = p.partial_derivative(a);
  return p;
}

Polynomial Polynomial::recenter(std::span<const double> center) const {
  if (static_cast<int>(center.size()) != dim_)
    throw ConfigError("Polynomial::recenter: center dimension mismatch");
  // (x0+y)^n expanded termwise: sum_k C(n,k) x0^{n-k} y^k per axis.
  std::map<MultiIndex, double> out;
  for (const auto& [alpha, c] : terms_) {
    std::array<std::vector<double>, kMaxDim> axis_coeffs;
    for (int a = 0; a < dim_; ++a) {
      const int n = alpha[a];
      axis_coeffs[a].resize(n + 1);
      for (int k = 0; k <= n; ++k)
        axis_coeffs[a][k] = binomial(n, k) * int_pow(center[a], n - k);
    }
    MultiIndex beta = MultiIndex::zero(dim_);
    // Iterate the (alpha[0]+1) x ... x (alpha[d-1]+1) exponent box.
    std::array<int, kMaxDim> k{0, 0, 0};
    while (true) {
      double w = c;
      for (int a = 0; a < dim_; ++a) w *= axis_coeffs[a][k[a]];
      for (int a = 0; a < dim_; ++a) beta.e[a] = k[a];
      if (w != 0.0) out[beta] += w;
      int a = 0;
      while (a < dim_) {
        if (++k[a] <= alpha[a]) break;
        k[a] = 0;
        ++a;
      }
      if (a == dim_) break;
    }
  }
  return Polynomial(dim_, std::move(out));
}

Polynomial Polynomial::lift(int extra_dims) const {
  if (extra_dims < 1) throw ConfigError("lift: extra_dims must be >= 1");
  const int nd = dim_ + extra_dims;
  if (nd > kMaxDim) throw ConfigError("lift: resulting dimension unsupported");
  std::map<MultiIndex, double> out;
  for (const auto& [alpha, c] : terms_) {
    MultiIndex beta = alpha;
    beta.dim = nd;
    out.emplace(beta, c);
  }
  return Polynomial(nd, std::move(out));
}

Polynomial Polynomial::parabolic_rescale(double lambda) const {
  std::map<MultiIndex, double> out;
  for (const auto& [alpha, c] : terms_)
    out.emplace(alpha, c * int_pow(lambda, alpha.order() + 2));
  return Polynomial(dim_, std::move(out));
}

Polynomial Polynomial::operator*(double s) const {
  std::map<MultiIndex, double> out;
  if (s != 0.0)
    for (const auto& [alpha, c] : terms_) out.emplace(alpha, c * s);
  return Polynomial(dim_, std::move(out));
}

} // namespace lsc
