#pragma once

#include <stdexcept>
#include <string>

namespace tsphyb {

/// Invalid user configuration: unknown pipeline, out-of-menu parameter, etc.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tsphyb
