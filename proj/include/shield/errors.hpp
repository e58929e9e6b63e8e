#pragma once

#include <stdexcept>
#include <string>

namespace shield {

// Malformed input data (trace rows, wire records). Carries file/line context
// where the caller provides it.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration detected before a run starts.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace shield
