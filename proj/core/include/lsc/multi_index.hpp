#pragma once

#include <array>
#include <compare>
#include <numeric>

#include "lsc/errors.hpp"

namespace lsc {

inline constexpr int kMaxDim = 3;

// Exponent tuple of a monomial in up to kMaxDim variables.
struct MultiIndex {
  std::array<int, kMaxDim> e{0, 0, 0};
  int dim = 1;

  MultiIndex() = default;
  MultiIndex(std::initializer_list<int> exps) {
    if (exps.size() == 0 || exps.size() > kMaxDim)
      throw ConfigError("MultiIndex: dimension must be 1..3");
    dim = static_cast<int>(exps.size());
    int a = 0;
    for (int v : exps) {
      if (v < 0) throw ConfigError("MultiIndex: exponents must be >= 0");
      e[a++] = v;
    }
  }
  static MultiIndex zero(int dim) {
    MultiIndex m;
    m.dim = dim;
    return m;
  }

  int order() const { return e[0] + e[1] + e[2]; }
  int operator[](int axis) const { return e[axis]; }

  bool all_even() const { return e[0] % 2 == 0 && e[1] % 2 == 0 && e[2] % 2 == 0; }

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

} // namespace lsc
