#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace tsrforge {

/// Conway polynomial for F_{p^k} (little-endian, monic) when it is in the built-in table.
std::optional<std::vector<std::uint32_t>> conway_polynomial(std::uint64_t p, unsigned k);
std::size_t conway_table_size();

}  // namespace tsrforge
