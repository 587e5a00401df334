#pragma once

#include <stdexcept>
#include <string>

namespace owc {

// Invalid problem definition or scenario input. The CLI maps this to exit 1.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Runtime numerical failure: CFL violation, dry state, solver divergence,
// non-finite values. The CLI maps this to exit 2.
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace owc
