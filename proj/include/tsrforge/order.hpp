#pragma once

#include <cstdint>
#include <vector>

#include "tsrforge/bigint.hpp"
#include "tsrforge/factor.hpp"

namespace tsrforge {

/// Prime-power factorization of a group exponent that may exceed 64 bits.
struct ExponentBound {
  std::vector<std::pair<std::uint64_t, unsigned>> factors;

  BigInt value() const;
  /// Raises the multiplicity of each prime of n to the max of both.
  void lcm_with(const Factorization& n);
  void lcm_with_prime_power(std::uint64_t prime, unsigned exponent);
};

/// Order of x in a group whose exponent divides `bound`. `pow(x, e)` must return
/// x^e and `is_one(y)` test the identity.
template <class T, class Pow, class IsOne>
BigInt element_order(const T& x, const ExponentBound& bound, Pow pow, IsOne is_one) {
  BigInt order = bound.value();
  for (const auto& [prime, exponent] : bound.factors) {
    for (unsigned i = 0; i < exponent; ++i) {
      const BigInt candidate = order / prime;
      if (!is_one(pow(x, candidate))) break;
      order = candidate;
    }
  }
  return order;
}

}  // namespace tsrforge
