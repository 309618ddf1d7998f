#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "iwalab/fq.hpp"

namespace iwalab {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Seed of the stream named `name` under the master seed. Streams are
/// independent of each other, so adding a stream leaves the rest unchanged.
inline std::uint64_t sub_seed(std::uint64_t seed, std::string_view name) { return splitmix64(seed ^ fnv1a(name)); }

/// Deterministic generator. Bounded draws use rejection sampling rather than
/// the standard distributions, whose output differs between library vendors.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  Rng(std::uint64_t seed, std::string_view stream) : eng_(sub_seed(seed, stream)) {}

  std::uint64_t next() { return eng_(); }
  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do x = eng_();
    while (x >= limit);
    return x % n;
  }
  Fq::Elem field_element(const Fq& F) { return static_cast<Fq::Elem>(below(F.order())); }
  Fq::Elem nonzero_field_element(const Fq& F) { return static_cast<Fq::Elem>(1 + below(F.order() - 1)); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace iwalab
