#include "tsrforge/limits.hpp"

#include <cstdlib>

namespace tsrforge {

Limits Limits::from_environment() {
  Limits limits;
  const char* raw = std::getenv("TSRFORGE_GUARD_BITS");
  if (raw == nullptr || *raw == '\0') return limits;
  char* end = nullptr;
  const unsigned long bits = std::strtoul(raw, &end, 10);
  if (*end != '\0' || bits == 0 || bits > 40) {
    fail(ErrorKind::ParseError, std::string("TSRFORGE_GUARD_BITS must be an integer in 1..40, got '") + raw + "'");
  }
  const std::uint64_t bound = std::uint64_t{1} << bits;
  limits.enumeration = bound;
  limits.special_candidates = bound;
  limits.matrix_count = bound;
  limits.field_order = bound;
  return limits;
}

}  // namespace tsrforge
