#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace iwalab {

enum class GroupCase { GL2, QUAT };

std::string_view to_string(GroupCase c);
GroupCase parse_group_case(std::string_view s);

/// Run parameters shared by every layer.
///
/// `M` is the truncation level: the finite group is G/G^{p^M} and p-adic
/// rings are taken mod p^M (entries that live in p·O are kept mod p^{M+1}).
/// `N` selects the open subgroup G^{p^N}; it must satisfy N < M whenever it is
/// used. N = 0 is accepted so that N-free computations can run at M = 1.
struct PrimeConfig {
  std::uint32_t p = 5;
  int f = 1;
  int M = 2;
  int N = 1;
  GroupCase group = GroupCase::GL2;
  std::uint64_t seed = 0;

  /// Throws Error(ConfigError) on p not prime, p <= 3, f outside [1, 4],
  /// M < 1, N outside [0, M) or sizes that do not fit the fixed-width layout.
  void validate() const;

  /// Like validate(), and additionally requires 1 <= N < M.
  void validate_with_level() const;

  /// p^k as a 64-bit integer.
  std::uint64_t p_pow(int k) const;

  /// Number of ordered-basis generators, 3f.
  int rank() const { return 3 * f; }

  bool operator==(const PrimeConfig&) const = default;
};

bool is_prime(std::uint64_t n);
std::uint64_t ipow(std::uint64_t base, int exp);

}  // namespace iwalab
