#include "tsrforge/tables.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "tsrforge/enumeration.hpp"
#include "tsrforge/parallel.hpp"
#include "tsrforge/primitivity.hpp"

namespace tsrforge {

namespace {

struct Listed {
  std::uint64_t param;
  std::vector<const char*> polys;
};

const std::vector<Listed> kT1 = {
    {2, {"x^3 + x^2 + x + a", "x^3 + x^2 + x + a+1"}},
    {3, {"x^3 + x^2 + x + a", "x^3 + x^2 + x + 2a+1"}},
    {5, {"x^3 + x^2 + x + 3a", "x^3 + x^2 + x + 2a+3"}},
    {7, {"x^3 + x^2 + x + 3a+1", "x^3 + x^2 + x + 3a+3", "x^3 + x^2 + x + 4a+4", "x^3 + x^2 + x + 4a+6"}},
    {11,
     {"x^3 + x^2 + 7a+1", "x^3 + x^2 + a+10", "x^3 + x^2 + a+7", "x^3 + x^2 + 4a+7", "x^3 + x^2 + 3a",
      "x^3 + x^2 + 8a+1"}},
};

const std::vector<Listed> kT2 = {
    {3, {"x^3 + x^2 + a", "x^3 + x^2 + a^2", "x^3 + x^2 + a^2+a"}},
    {4, {"x^3 + x^2 + a^3+a+1", "x^3 + x^2 + a^3+a^2+a", "x^3 + x^2 + a^3+a^2+1", "x^3 + x^2 + a^3+1"}},
    {5,
     {"x^3 + x^2 + a^4+a^2", "x^3 + x^2 + a^2+a+1", "x^3 + x^2 + a^4+a^3+a^2", "x^3 + x^2 + a^4+a^3+a^2+1",
      "x^3 + x^2 + a^2+a", "x^3 + x^2 + a^4+a^3", "x^3 + x^2 + a^4+a^2+1", "x^3 + x^2 + a^4+a^3+1",
      "x^3 + x^2 + a^4+a^2+a+1", "x^3 + x^2 + a^4+a^2+a"}},
    {6,
     {"x^3 + x^2 + a^4+a^3+1", "x^3 + x^2 + a^5+a^4+a^3+a", "x^3 + x^2 + a^5+a^3+a^2", "x^3 + x^2 + a^4+a^3",
      "x^3 + x^2 + a^5+a^4+a^3+a+1", "x^3 + x^2 + a^5+a^3+a^2+1"}},
};

const std::vector<Listed> kT3 = {
    {4, {"x^4 + x^3 + x^2 + a", "x^4 + x^3 + x^2 + a+1"}},
    {5, {"x^4 + x^3 + x^2 + x + a", "x^4 + x^3 + x^2 + x + a+1"}},
    {6, {"x^6 + x^5 + x + a", "x^6 + x^5 + x + a+1"}},
    {7,
     {"x^7 + x^6 + x^5 + a",
      "x^7 + x^6 + x^5 + a+1",
      "x^7 + x^6 + x^4 + a",
      "x^7 + x^6 + x^4 + a+1",
      "x^7 + x^4 + x^3 + a",
      "x^7 + x^4 + x^3 + a+1",
      "x^7 + x^6 + x^4 + x^3 + a",
      "x^7 + x^6 + x^4 + x^3 + a+1",
      "x^7 + x^6 + x^2 + a",
      "x^7 + x^6 + x^2 + a+1",
      "x^7 + x^5 + x^4 + x^2 + a",
      "x^7 + x^5 + x^4 + x^2 + a+1",
      "x^7 + x^6 + x^5 + x^4 + x^3 + x^2 + a",
      "x^7 + x^6 + x^5 + x^4 + x^3 + x^2 + a+1",
      "x^7 + x^5 + x^4 + x + a",
      "x^7 + x^5 + x^4 + x + a+1",
      "x^7 + x^6 + x^5 + x^4 + x + a",
      "x^7 + x^6 + x^5 + x^4 + x + a+1",
      "x^7 + x^3 + x + a",
      "x^7 + x^3 + x + a+1",
      "x^7 + x^5 + x^4 + x^3 + x + a",
      "x^7 + x^5 + x^4 + x^3 + x + a+1",
      "x^7 + x^5 + x^3 + x^2 + x + a",
      "x^7 + x^5 + x^3 + x^2 + x + a+1",
      "x^7 + x^6 + x^5 + x^3 + x^2 + x + a",
      "x^7 + x^6 + x^5 + x^3 + x^2 + x + a+1",
      "x^7 + x^6 + x^4 + x^3 + x^2 + x + a",
      "x^7 + x^6 + x^4 + x^3 + x^2 + x + a+1"}},
};

const std::vector<Listed> kT4 = {
    {3,
     {"x^3 + x^2 + a", "x^3 + x^2 + a+2", "x^3 + x^2 + a^2+2a+2", "x^3 + x^2 + a+1", "x^3 + x^2 + a^2+a+2",
      "x^3 + x^2 + 2a^2+a", "x^3 + x^2 + a^2+1", "x^3 + x^2 + 2a^2+2a", "x^3 + x^2 + 2a^2+1"}},
    {4,
     {"x^3 + x + a",
      "x^3 + x + a^3",
      "x^3 + x + 2a^3+a^2+a+1",
      "x^3 + x + a^3+a^2+2a",
      "x^3 + x + a^3+a+2",
      "x^3 + x + 2a^3+a^2+2a",
      "x^3 + x + 2a^3+2a",
      "x^3 + x + a^3+2a+2",
      "x^3 + x + 2a^2+a+1",
      "x^3 + x + a^3+2a^2+1",
      "x^3 + x + a^2+a",
      "x^3 + x + 2a^3+a^2+2a+2",
      "x^3 + x + 2a",
      "x^3 + x + 2a^3",
      "x^3 + x + a^3+2a^2+2a+2",
      "x^3 + x + a^3+2a^2+a",
      "x^3 + x + 2a^3+2a+1",
      "x^3 + x + a^3+2a^2+a",
      "x^3 + x + a^3+a",
      "x^3 + x + 2a^3+a+1",
      "x^3 + x + a^2+2a+2",
      "x^3 + x + 2a^3+a^2+2",
      "x^3 + x + 2a^2+2",
      "x^3 + x + a^3+2a^2+a+1",
      "x^3 + x + 2a^3+a^2+a+1",
      "x^3 + x + 2a^3+2a^2+a+1",
      "x^3 + x + a^3+2a+2",
      "x^3 + x + 2a^2+a+1",
      "x^3 + x + a^2+a",
      "x^3 + x + 2a^3+1",
      "x^3 + x + 2a+1",
      "x^3 + x + 2a^3+a^2",
      "x^3 + x + a^3+2a^2+2a+2",
      "x^3 + x + 2a^3+a+1",
      "x^3 + x + a^2+2a+2",
      "x^3 + x + 2a^2+2a"}},
};

const std::vector<Listed> kT5 = {
    {2, {"x^3 + x^2 + x + a", "x^3 + x^2 + x + a+1"}},
    {3, {"x^3 + x^2 + x + a", "x^3 + x^2 + x + 2a+1"}},
    {5, {"x^3 + x^2 + x + 3a", "x^3 + x^2 + x + 2a+3"}},
    {7, {"x^3 + x^2 + x + 3a+1", "x^3 + x^2 + x + 3a+3", "x^3 + x^2 + x + 4a+4", "x^3 + x^2 + x + 4a+6"}},
    {11,
     {"x^3 + x^2 + x + 9a+2", "x^3 + x^2 + x + 9a+6", "x^3 + x^2 + x + 6a+5", "x^3 + x^2 + x + 5a",
      "x^3 + x^2 + x + 6a+4", "x^3 + x^2 + x + 6a+9", "x^3 + x^2 + x + 2a+9", "x^3 + x^2 + x + 2a+5",
      "x^3 + x^2 + x + 5a+6", "x^3 + x^2 + x + 6a", "x^3 + x^2 + x + 5a+7", "x^3 + x^2 + x + 5a+2"}},
    {13,
     {"x^3 + x^2 + x + a", "x^3 + x^2 + x + 12a+6", "x^3 + x^2 + x + 10a+9", "x^3 + x^2 + x + 12a+1",
      "x^3 + x^2 + x + 11a+9", "x^3 + x^2 + x + 7a+5", "x^3 + x^2 + x + 9a+5", "x^3 + x^2 + x + 10a+11",
      "x^3 + x^2 + x + 2a+7", "x^3 + x^2 + x + a+5", "x^3 + x^2 + x + 4a+1", "x^3 + x^2 + x + 9a"}},
};

const std::vector<RTableRow> kRTable = {{2, 1, 2},   {3, 1, 3},   {4, 1, 4},     {5, 2, 10},
                                        {6, 3, 18},  {7, 6, 42},  {8, 7, 56},    {9, 16, 144},
                                        {10, 25, 250}, {11, 57, 627}, {12, 68, 816}};

const std::vector<Listed>& listed_for(TableId id) {
  switch (id) {
    case TableId::T1: return kT1;
    case TableId::T2: return kT2;
    case TableId::T3: return kT3;
    case TableId::T4: return kT4;
    case TableId::T5: return kT5;
    case TableId::RTable: break;
  }
  static const std::vector<Listed> none;
  return none;
}

struct Shape {
  std::uint64_t q;
  unsigned m, n;
};

Shape shape_for(TableId id, std::uint64_t param) {
  switch (id) {
    case TableId::T1:
    case TableId::T5: return {param, 2, 3};
    case TableId::T2: return {2, static_cast<unsigned>(param), 3};
    case TableId::T3: return {2, 2, static_cast<unsigned>(param)};
    case TableId::T4: return {3, static_cast<unsigned>(param), 3};
    case TableId::RTable: break;
  }
  fail(ErrorKind::UnknownKind, "r_table has no polynomial rows");
}

const char* param_name(TableId id) {
  switch (id) {
    case TableId::T1:
    case TableId::T5: return "q";
    case TableId::T2:
    case TableId::T4: return "m";
    case TableId::T3: return "n";
    case TableId::RTable: return "m";
  }
  return "param";
}

std::string title_for(TableId id) {
  switch (id) {
    case TableId::T1: return "Table 1: P(2,3,q), degree-3 primitive g(x)+lambda over F_{q^2}";
    case TableId::T2: return "Table 2: P(m,3,2), degree-3 primitive g(x)+lambda over F_{2^m}";
    case TableId::T3: return "Table 3: P(2,n,2), degree-n primitive g(x)+lambda over F_4";
    case TableId::T4: return "Table 4: P(m,3,3), degree-3 primitive g(x)+lambda over F_{3^m}";
    case TableId::T5: return "Table 5: primitive x^3+x^2+x+lambda over F_{q^2}";
    case TableId::RTable: return "r table: m, r, |P_2(m,2)|";
  }
  return {};
}

std::string modulus_text(const FieldPtr& ext) {
  std::vector<Elem> c(ext->modulus().begin(), ext->modulus().end());
  return to_string(Polynomial(Field::prime(ext->characteristic()), std::move(c)));
}

std::vector<Polynomial> x3x2x_family(std::uint64_t q, const Limits& limits, unsigned threads) {
  FieldPtr ext = Field::extension(q, 2);
  require_within(ext->order(), limits.field_order, "q^2");
  const std::vector<Elem> lambdas = primitive_elements(*ext);
  auto hits = parallel_filter<Polynomial>(lambdas.size(), threads, [&](std::uint64_t i) -> std::optional<Polynomial> {
    Polynomial f(ext, {lambdas[i], 1, 1, 1});
    if (is_primitive(f)) return f;
    return std::nullopt;
  });
  std::sort(hits.begin(), hits.end(), [](const Polynomial& a, const Polynomial& b) { return to_string(a) < to_string(b); });
  return hits;
}

ListedCheck check_listed(std::uint64_t param, const char* text, const Shape& s, const FieldPtr& ext,
                         const std::vector<Polynomial>& set) {
  ListedCheck c{param, text, false, false, {}};
  Polynomial p = Polynomial::constant(ext, 0);
  try {
    p = parse_polynomial(ext, text);
    c.parsed = true;
  } catch (const TsrError& e) {
    c.note = std::string("unparseable: ") + e.what();
    return c;
  }
  c.member = std::find(set.begin(), set.end(), p) != set.end();
  if (c.member) return c;
  if (p.size_degree() != s.n) {
    c.note = "listed with degree " + std::to_string(p.size_degree()) + " in the n = " + std::to_string(s.n) + " row";
  } else if (p.coeff(0) == 0 || !is_primitive_element(*ext, p.coeff(0))) {
    c.note = "constant term is not primitive under modulus " + modulus_text(ext);
  } else if (!is_primitive(p)) {
    c.note = "not primitive under modulus " + modulus_text(ext);
  } else {
    c.note = "primitive but outside the enumerated family";
  }
  return c;
}

std::string render_polys(const TableReport& t) {
  std::ostringstream out;
  out << "# " << t.title << "\n";
  out << param_name(t.id) << ",index,polynomial\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.polys.size(); ++i) {
      out << row.param << "," << i + 1 << "," << to_string(row.polys[i]) << "\n";
    }
  }
  return out.str();
}

std::string render_counts(const TableReport& t) {
  std::ostringstream out;
  out << "# " << t.title << " (row counts)\n";
  out << "q,m,n,modulus,count,listed,listed_members\n";
  for (const auto& row : t.rows) {
    out << row.q << "," << row.m << "," << row.n << "," << row.modulus << "," << row.polys.size()
        << "," << row.listed << "," << row.listed_members << "\n";
  }
  return out.str();
}

std::string render_listed(const TableReport& t) {
  std::ostringstream out;
  out << "# " << t.title << " (published entries checked against the exhaustive set)\n";
  out << param_name(t.id) << ",polynomial,parsed,member,note\n";
  for (const auto& c : t.listed) {
    std::string note = c.note;
    std::replace(note.begin(), note.end(), ',', ';');
    out << c.param << "," << c.text << "," << (c.parsed ? 1 : 0) << "," << (c.member ? 1 : 0) << "," << note << "\n";
  }
  return out.str();
}

}  // namespace

TableId parse_table_id(std::string_view name) {
  for (TableId id : all_tables()) {
    if (to_string(id) == name) return id;
  }
  fail(ErrorKind::UnknownKind, "unknown table: " + std::string(name));
}

std::string_view to_string(TableId id) {
  switch (id) {
    case TableId::T1: return "t1";
    case TableId::T2: return "t2";
    case TableId::T3: return "t3";
    case TableId::T4: return "t4";
    case TableId::T5: return "t5";
    case TableId::RTable: return "r_table";
  }
  return "?";
}

std::vector<TableId> all_tables() {
  return {TableId::T1, TableId::T2, TableId::T3, TableId::T4, TableId::T5, TableId::RTable};
}

std::optional<RTableRow> published_r(unsigned m) {
  for (const auto& row : kRTable) {
    if (row.m == m) return row;
  }
  return std::nullopt;
}

std::size_t published_row_count(TableId id, std::uint64_t param) {
  for (const auto& l : listed_for(id)) {
    if (l.param == param) return l.polys.size();
  }
  return 0;
}

TableReport build_table(TableId id, const TableOptions& options) {
  TableReport t;
  t.id = id;
  t.title = title_for(id);
  if (id == TableId::RTable) {
    const unsigned top = options.deep ? 12 : 10;
    std::ostringstream out;
    out << "# " << t.title << "\n" << "m,r,P2m2\n";
    for (unsigned m = 2; m <= top; ++m) {
      const TraceOneCount c = count_trace_one_classes(m, options.limits, options.threads);
      t.r_rows.push_back({m, c.r, c.p2m2});
      out << m << "," << c.r << "," << c.p2m2 << "\n";
    }
    t.files.emplace_back("r_table.csv", out.str());
    return t;
  }
  for (const auto& l : listed_for(id)) {
    const Shape s = shape_for(id, l.param);
    FieldPtr ext = Field::extension(s.q, s.m);
    TableRow row;
    row.param = l.param;
    row.q = s.q;
    row.m = s.m;
    row.n = s.n;
    row.modulus = modulus_text(ext);
    row.polys = id == TableId::T5 ? x3x2x_family(s.q, options.limits, options.threads)
                                  : enumerate_special_primitives(s.q, s.m, s.n, SpecialForm::Pmnq, options.limits,
                                                                 options.threads);
    row.listed = l.polys.size();
    for (const char* text : l.polys) {
      ListedCheck c = check_listed(l.param, text, s, ext, row.polys);
      if (c.member) ++row.listed_members;
      t.listed.push_back(std::move(c));
    }
    t.rows.push_back(std::move(row));
  }
  const std::string name(to_string(id));
  t.files.emplace_back(name + ".csv", render_polys(t));
  t.files.emplace_back(name + "_counts.csv", render_counts(t));
  t.files.emplace_back(name + "_listed.csv", render_listed(t));
  return t;
}

}  // namespace tsrforge
