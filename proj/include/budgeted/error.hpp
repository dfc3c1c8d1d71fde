#pragma once

#include <stdexcept>
#include <string>

namespace budgeted {

// Failure classes surfaced to callers. The CLI maps them onto exit codes.
enum class ErrorKind {
  kMalformedInput,  // bad shapes, bad values, unparsable files
  kInfeasible,      // constraint-form credal set with an empty feasible region
  kGuardExceeded,   // enumeration / retry limits
  kInternal,        // broken invariant inside a solver (e.g. unbounded LP)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace budgeted
