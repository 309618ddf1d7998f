#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace iwalab {

enum class ErrorKind {
  ConfigError,
  ConfigMismatch,
  InputNotUnitOne,
  NotInGroup,
  LevelTooDeep,
  CutoffBeyondFaithful,
  NonHomogeneousInput,
  RelationCheckFailed,
  BoundExceeded,
  NonConvergent,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure is reported through this exception; `kind()` carries
/// the machine-readable category that ends up in reports and exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) raise(kind, what);
}

}  // namespace iwalab
