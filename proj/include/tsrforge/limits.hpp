#pragma once

#include <cstdint>
#include <string>

#include "tsrforge/error.hpp"

namespace tsrforge {

/// Brute-force thresholds. Exceeding one is an error, never a truncation.
struct Limits {
  std::uint64_t enumeration = std::uint64_t{1} << 22;   // TSR candidates (c, B)
  std::uint64_t field_order = std::uint64_t{1} << 24;   // q^{mn} for periods, fields built for counting
  std::uint64_t matrix_count = std::uint64_t{1} << 20;  // q^{m^2} for exhaustive matrix counts
  std::uint64_t special_candidates = std::uint64_t{1} << 24;
  unsigned max_coset_m = 14;

  /// Defaults, with the enumeration guards replaced by 2^bits when TSRFORGE_GUARD_BITS is set.
  static Limits from_environment();
};

inline void require_within(std::uint64_t value, std::uint64_t bound, const std::string& what) {
  if (value > bound) {
    fail(ErrorKind::ScaleExceeded,
         what + " = " + std::to_string(value) + " exceeds guard " + std::to_string(bound));
  }
}

/// base^exp, or nullopt-like sentinel via ok=false when it does not fit in 64 bits.
bool checked_pow(std::uint64_t base, unsigned exp, std::uint64_t& out);
std::uint64_t pow_or_throw(std::uint64_t base, unsigned exp, const std::string& what);

}  // namespace tsrforge
