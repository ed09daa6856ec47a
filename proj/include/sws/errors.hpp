#pragma once

#include <stdexcept>
#include <string>

namespace sws {

// Bad inputs: out-of-range fields, malformed files, unknown ids.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Missing word lists, unknown categories, unusable session configs.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sws
