#pragma once

#include <stdexcept>
#include <string>

namespace lsc {

// Invalid configuration or violated operation precondition. CLI exit code 1.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure: factorization breakdown, nonpositive landscape values,
// unbracketable maximal-function radius. CLI exit code 2.
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lsc
