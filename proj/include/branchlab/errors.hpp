#ifndef BRANCHLAB_ERRORS_HPP
#define BRANCHLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace branchlab {

// Error categories map 1:1 onto CLI exit codes (see cli_app.cpp).
class Error : public std::runtime_error {
public:
  explicit Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

// Bad arguments, parse errors, out-of-range indices, domain violations.
class UsageError : public Error {
public:
  explicit UsageError(const std::string& msg) : Error("usage", msg) {}
};

// A configured bound (vertex table size, BFS cap, search budget) was hit.
class ResourceError : public Error {
public:
  explicit ResourceError(const std::string& msg) : Error("resource", msg) {}
};

// The request is well-formed but has no closed-form answer for these
// parameters (e.g. explicit rigid-stabilizer witness words at d = 3).
class NotApplicableError : public Error {
public:
  explicit NotApplicableError(const std::string& msg) : Error("not-applicable", msg) {}
};

// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public Error {
public:
  explicit InternalError(const std::string& msg) : Error("internal", msg) {}
};

} // namespace branchlab

#endif
