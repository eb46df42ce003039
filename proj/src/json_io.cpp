#include "tsrforge/json_io.hpp"

namespace tsrforge {

namespace {

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::ParseError, std::string("missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("bad value for \"") + key + "\": " + e.what());
  }
}

Matrix matrix_from_json(const FieldPtr& field, const Json& rows, unsigned m, const char* name) {
  if (!rows.is_array() || rows.size() != m) fail(ErrorKind::DimensionMismatch, std::string(name) + " must have m rows");
  std::vector<std::vector<Elem>> entries;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != m) fail(ErrorKind::DimensionMismatch, std::string(name) + " must be m x m");
    std::vector<Elem> r;
    for (const auto& v : row) {
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= field->order()) {
        fail(ErrorKind::ParseError, std::string(name) + " entries must be integers in [0, q)");
      }
      r.push_back(v.get<Elem>());
    }
    entries.push_back(std::move(r));
  }
  return Matrix::from_rows(field, entries);
}

std::vector<Elem> elems_from_json(const FieldPtr& field, const Json& j, const char* name) {
  if (!j.is_array()) fail(ErrorKind::ParseError, std::string(name) + " must be an array");
  std::vector<Elem> out;
  for (const auto& v : j) {
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= field->order()) {
      fail(ErrorKind::ParseError, std::string(name) + " entries must be integers in [0, q)");
    }
    out.push_back(v.get<Elem>());
  }
  return out;
}

}  // namespace

Json field_to_json(const Field& field) {
  return {{"p", field.characteristic()}, {"k", field.degree()}, {"modulus", field.modulus()}};
}

FieldPtr field_from_json(const Json& j) {
  const auto p = get_field<std::uint64_t>(j, "p");
  const auto k = get_field<unsigned>(j, "k");
  if (k <= 1) return Field::prime(p);
  const auto modulus = get_field<std::vector<std::uint32_t>>(j, "modulus");
  return Field::extension(p, k, modulus);
}

Json spec_to_json(const TsrSpec& spec) {
  return {{"q", spec.q()}, {"m", spec.m}, {"n", spec.n}, {"c", spec.c}, {"B", spec.B.to_rows()}};
}

TsrSpec spec_from_json(const Json& j) {
  const auto q = get_field<std::uint64_t>(j, "q");
  const auto m = get_field<unsigned>(j, "m");
  const auto n = get_field<unsigned>(j, "n");
  FieldPtr fq = Field::prime(q);
  if (!j.contains("c")) fail(ErrorKind::ParseError, "missing key \"c\"");
  std::vector<Elem> c = elems_from_json(fq, j.at("c"), "c");
  if (j.contains("A")) {
    if (c.size() != n) fail(ErrorKind::DimensionMismatch, "general form needs c_0..c_{n-1}");
    return normalize_general_form(fq, m, n, c, matrix_from_json(fq, j.at("A"), m, "A"));
  }
  if (!j.contains("B")) fail(ErrorKind::ParseError, "missing key \"B\" (or \"A\")");
  return TsrSpec::make(fq, m, n, std::move(c), matrix_from_json(fq, j.at("B"), m, "B"));
}

Json certificate_to_json(const PrimitivityCertificate& cert) {
  Json factors = Json::array();
  for (const auto& pp : cert.factorization.factors) factors.push_back({pp.prime, pp.exponent});
  Json witnesses = Json::array();
  for (const auto& w : cert.witnesses) witnesses.push_back(to_string(w));
  return {{"field", field_to_json(*cert.poly.field())},
          {"poly", to_string(cert.poly)},
          {"group_order", cert.group_order},
          {"factors", factors},
          {"witnesses", witnesses}};
}

PrimitivityCertificate certificate_from_json(const Json& j) {
  if (!j.contains("field")) fail(ErrorKind::ParseError, "missing key \"field\"");
  FieldPtr field = field_from_json(j.at("field"));
  Polynomial poly = parse_polynomial(field, get_field<std::string>(j, "poly"));
  const auto order = get_field<std::uint64_t>(j, "group_order");
  Factorization fac;
  fac.n = order;
  for (const auto& pe : get_field<std::vector<std::pair<std::uint64_t, unsigned>>>(j, "factors")) {
    fac.factors.push_back({pe.first, pe.second});
  }
  std::vector<Polynomial> witnesses;
  for (const auto& w : get_field<std::vector<std::string>>(j, "witnesses")) {
    witnesses.push_back(parse_polynomial(field, w));
  }
  return {std::move(poly), order, std::move(fac), std::move(witnesses)};
}

Json search_result_to_json(const SearchResult& r) {
  const auto& p = r.provenance;
  return {{"spec", spec_to_json(r.spec)},
          {"charpoly", to_string(r.charpoly)},
          {"certificate", certificate_to_json(r.certificate)},
          {"candidates_tried", r.candidates_tried},
          {"provenance",
           {{"f", to_string(p.f)},
            {"g", to_string(p.g)},
            {"f_of_g", to_string(p.composite)},
            {"alpha", format_element(*p.ext, p.alpha)},
            {"lambda", format_element(*p.ext, p.lambda)},
            {"reciprocal", to_string(p.reciprocal_k)},
            {"L", to_string(p.L)},
            {"h", to_string(p.h)},
            {"A", p.A.to_rows()}}}};
}

Json witness_to_json(const ConjectureWitness& w) {
  Json j = {{"q", w.q},
            {"m", w.m},
            {"n", w.n},
            {"form", w.form == ConjectureForm::Direct ? "direct" : "composition"},
            {"found", w.found},
            {"space_exhausted", w.space_exhausted},
            {"candidates_tried", w.candidates_tried},
            {"cross_verified", w.cross_verified}};
  if (w.direct) j["direct"] = to_string(*w.direct);
  if (w.f) j["f"] = to_string(*w.f);
  if (w.g) j["g"] = to_string(*w.g);
  if (!w.cross_note.empty()) j["note"] = w.cross_note;
  return j;
}

std::string dump_line(const Json& j) { return j.dump(); }

}  // namespace tsrforge
