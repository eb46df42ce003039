#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tsrforge/limits.hpp"
#include "tsrforge/polynomial.hpp"

namespace tsrforge {

enum class TableId { T1, T2, T3, T4, T5, RTable };

/// Accepts t1..t5 and r_table.
TableId parse_table_id(std::string_view name);
std::string_view to_string(TableId id);
std::vector<TableId> all_tables();

/// A published polynomial checked against our exhaustive set.
struct ListedCheck {
  std::uint64_t param = 0;
  std::string text;
  bool parsed = false;
  bool member = false;
  std::string note;
};

struct TableRow {
  std::uint64_t param = 0;        // q, m or n depending on the table
  std::uint64_t q = 0, m = 0, n = 0;
  std::string modulus;            // modulus of F_{q^m} used for the symbol a
  std::vector<Polynomial> polys;  // exhaustive, canonical text order
  std::size_t listed = 0;
  std::size_t listed_members = 0;
};

struct RTableRow {
  unsigned m = 0;
  std::uint64_t r = 0;
  std::uint64_t p2m2 = 0;
};

struct TableReport {
  TableId id = TableId::T1;
  std::string title;
  std::vector<TableRow> rows;
  std::vector<ListedCheck> listed;
  std::vector<RTableRow> r_rows;
  /// (file name, contents), byte-stable for fixed inputs.
  std::vector<std::pair<std::string, std::string>> files;
};

struct TableOptions {
  bool deep = false;  // r_table: also m = 11, 12
  unsigned threads = 1;
  Limits limits{};
};

TableReport build_table(TableId id, const TableOptions& options = {});

/// Published r values for m = 2..12.
std::optional<RTableRow> published_r(unsigned m);
/// Number of polynomials printed for one row of a polynomial table.
std::size_t published_row_count(TableId id, std::uint64_t param);

}  // namespace tsrforge
