#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rhoqes {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operator maps a basis monomial outside the requested flag space.
struct FlagViolation : Error {
  using Error::Error;
};

// A gauge/measure quantity was requested where a factor vanishes.
struct SingularPoint : Error {
  using Error::Error;
};

struct NonNormalizable : Error {
  using Error::Error;
};

// A gauge parameter that must vanish in an infinite-mass limit does not.
struct BadLimit : Error {
  using Error::Error;
};

struct NoConvergence : Error {
  explicit NoConvergence(const std::string& what, std::vector<double> last = {}, double residual = 0)
      : Error(what), last_iterate(std::move(last)), residual(residual) {}
  std::vector<double> last_iterate;
  double residual;
};

struct NoFit : Error {
  using Error::Error;
};

struct IdentityFailure : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace rhoqes
