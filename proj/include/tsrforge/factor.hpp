#pragma once

#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "tsrforge/bigint.hpp"

namespace tsrforge {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  bool operator==(const PrimePower&) const = default;
};

/// Complete factorization of a positive integer n <= 2^64, primes ascending.
struct Factorization {
  BigInt n;
  std::vector<PrimePower> factors;

  std::vector<std::uint64_t> primes() const;
  BigInt product() const;
};

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Trial division to 10^6, then Pollard rho with Brent cycle detection.
Factorization factor_integer(std::uint64_t n);
/// Same, accepting 2^64 exactly; FactorizationOverflow above that.
Factorization factor_integer(const BigInt& n);

BigInt euler_phi(const Factorization& f);
std::uint64_t euler_phi(std::uint64_t n);
/// Moebius function mu(n).
int mobius(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Memoized factorizations, safe for concurrent lookups and inserts.
class FactorCache {
 public:
  Factorization get(std::uint64_t n);

 private:
  std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, Factorization> entries_;
};

FactorCache& factor_cache();

}  // namespace tsrforge
