#pragma once
// errors.hpp — exception types that the command-line layer maps to exit codes:
// ConfigError -> 2 (unreadable / inconsistent input), ValidationError -> 3
// (a numerical check failed at run time, e.g. a state drifted off PSD).

#include <stdexcept>
#include <string>

namespace birqi {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace birqi
