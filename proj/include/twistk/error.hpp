#pragma once

#include <stdexcept>
#include <string>

namespace twistk {

// Bad user input: malformed files, out-of-range parameters, mismatched
// coordinates. The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant. Always a bug, never a consequence of bad input.
// The CLI maps this to exit code 1.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw ValidationError(msg);
}

inline void check_internal(bool ok, const std::string& msg) {
  if (!ok) throw InternalError(msg);
}

}  // namespace twistk
