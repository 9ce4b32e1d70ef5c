#pragma once

#include <stdexcept>
#include <string>

namespace alia {

/// Bad user input: malformed config, unparsable expression, out-of-range flag.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A mathematical precondition of an operation does not hold for the given
/// input (point sits on a pole, automorphism not of finite order, ...).
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An internal invariant was violated. Always a bug.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

inline void internal_check(bool cond, const std::string& msg) {
  if (!cond) throw InternalError(msg);
}

}  // namespace alia
