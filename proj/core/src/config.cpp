#include "iwalab/config.hpp"

#include <limits>

#include "iwalab/error.hpp"

namespace iwalab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::ConfigMismatch: return "ConfigMismatch";
    case ErrorKind::InputNotUnitOne: return "InputNotUnitOne";
    case ErrorKind::NotInGroup: return "NotInGroup";
    case ErrorKind::LevelTooDeep: return "LevelTooDeep";
    case ErrorKind::CutoffBeyondFaithful: return "CutoffBeyondFaithful";
    case ErrorKind::NonHomogeneousInput: return "NonHomogeneousInput";
    case ErrorKind::RelationCheckFailed: return "RelationCheckFailed";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string_view to_string(GroupCase c) { return c == GroupCase::GL2 ? "gl2" : "quat"; }

GroupCase parse_group_case(std::string_view s) {
  if (s == "gl2" || s == "GL2") return GroupCase::GL2;
  if (s == "quat" || s == "QUAT") return GroupCase::QUAT;
  raise(ErrorKind::ConfigError, "unknown group case '" + std::string(s) + "'");
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::uint64_t PrimeConfig::p_pow(int k) const { return ipow(p, k); }

void PrimeConfig::validate() const {
  require(is_prime(p), ErrorKind::ConfigError, "p = " + std::to_string(p) + " is not prime");
  require(p > 3, ErrorKind::ConfigError, "p must be > 3");
  require(f >= 1 && f <= 4, ErrorKind::ConfigError, "f must lie in [1, 4]");
  require(M >= 1, ErrorKind::ConfigError, "M must be >= 1");
  require(N >= 0 && N < M, ErrorKind::ConfigError,
          "N = " + std::to_string(N) + " must satisfy 0 <= N < M = " + std::to_string(M));
  // Entries mod p^{M+1} are multiplied in 64-bit arithmetic.
  long double top = 1;
  for (int i = 0; i < M + 1; ++i) top *= p;
  require(top < static_cast<long double>(1ULL << 31), ErrorKind::ConfigError,
          "p^(M+1) must stay below 2^31");
  long double order = 1;
  for (int i = 0; i < 3 * f * M; ++i) order *= p;
  require(order < static_cast<long double>(std::numeric_limits<std::uint64_t>::max() / 4),
          ErrorKind::ConfigError, "p^(3fM) does not fit a 64-bit index");
  long double q = 1;
  for (int i = 0; i < f; ++i) q *= p;
  require(q <= 65536, ErrorKind::ConfigError, "p^f must be at most 65536");
}

void PrimeConfig::validate_with_level() const {
  validate();
  require(N >= 1, ErrorKind::ConfigError, "this computation needs a subgroup level N >= 1");
}

}  // namespace iwalab
