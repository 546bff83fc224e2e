// Copyright 2026 The dg1d Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DG1D_ERRORS_HPP
#define DG1D_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dg1d {

// Failure categories carried by every library exception. The C API and the
// CLI map these to status and exit codes, so the category must describe the
// cause, not the call site.
enum class Status {
  ok = 0,
  invalid_argument,    // precondition violated; message names the offending field
  skeleton_collision,  // point-source location coincides with a mesh vertex
  coercivity_failure,  // assembled form is not positive definite (sigma0 too small)
  numerical_failure,   // factorization/eigensolve broke down on valid input
  internal,            // invariant of the library itself was violated
};

class Error : public std::runtime_error {
 public:
  Error(Status code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Status code() const noexcept { return code_; }

 private:
  Status code_;
};

[[noreturn]] inline void fail(Status code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, Status code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace dg1d

#endif
