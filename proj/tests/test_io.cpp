#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tsrforge/json_io.hpp"
#include "tsrforge/tables.hpp"
#include "tsrforge/verify.hpp"

using namespace tsrforge;

TEST_CASE("spec JSON round trip") {
  auto f5 = Field::prime(5);
  auto spec = TsrSpec::make(f5, 2, 3, {1, 4}, Matrix::from_rows(f5, {{1, 2}, {3, 4}}));
  Json j = spec_to_json(spec);
  CHECK(j.dump() == R"({"B":[[1,2],[3,4]],"c":[1,4],"m":2,"n":3,"q":5})");
  CHECK(spec_from_json(Json::parse(j.dump())) == spec);
}

TEST_CASE("general form ingest") {
  auto f3 = Field::prime(3);
  Json j = Json::parse(R"({"q":3,"m":2,"n":2,"c":[2,1],"A":[[1,0],[1,1]]})");
  TsrSpec s = spec_from_json(j);
  CHECK(s.c == std::vector<Elem>{2});
  CHECK(s.B == Matrix::from_rows(f3, {{2, 0}, {2, 2}}));
  try {
    spec_from_json(Json::parse(R"({"q":3,"m":2,"n":2,"c":[0,1],"A":[[1,0],[1,1]]})"));
    FAIL("expected ZeroConstantTerm");
  } catch (const TsrError& e) {
    CHECK(e.kind() == ErrorKind::ZeroConstantTerm);
  }
  CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"q":3,"m":2,"n":2,"c":[1],"B":[[1,1],[1,1]]})")), TsrError);
  CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"q":3,"m":2,"n":2,"c":[5],"B":[[1,0],[0,1]]})")), TsrError);
  CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"q":3,"m":2})")), TsrError);
}

TEST_CASE("certificate JSON round trip and tampering") {
  auto f4 = Field::extension(2, 2);
  auto r = is_primitive_poly(parse_polynomial(f4, "x^3 + x^2 + x + a"));
  REQUIRE(r.certificate);
  Json j = certificate_to_json(*r.certificate);
  auto back = certificate_from_json(Json::parse(j.dump()));
  CHECK(verify_certificate(back));
  CHECK(back.poly == r.certificate->poly);

  Json bad = j;
  bad["witnesses"][0] = "x + 1";
  CHECK_FALSE(verify_certificate(certificate_from_json(bad)));
  bad = j;
  bad["group_order"] = 62;
  CHECK_FALSE(verify_certificate(certificate_from_json(bad)));
}

TEST_CASE("polynomial tables") {
  auto t1 = build_table(TableId::T1);
  REQUIRE(t1.rows.size() == 5);
  CHECK(t1.rows[0].polys.size() == 2);
  CHECK(t1.rows[0].listed_members == 2);
  CHECK(t1.rows[1].polys.size() == 12);
  CHECK(t1.files.size() == 3);
  CHECK(t1.files[0].second.rfind("# Table 1", 0) == 0);
  for (const auto& row : t1.rows) {
    FieldPtr ext = row.polys.front().field();
    for (const auto& p : row.polys) CHECK(parse_polynomial(ext, to_string(p)) == p);
  }

  auto t3 = build_table(TableId::T3);
  std::vector<std::size_t> counts;
  for (const auto& row : t3.rows) counts.push_back(row.polys.size());
  CHECK(counts == std::vector<std::size_t>{4, 10, 10, 28});
  bool degree_note = false;
  for (const auto& c : t3.listed) {
    CHECK(c.parsed);
    if (c.param == 5) {
      CHECK_FALSE(c.member);
      degree_note |= c.note.find("degree 4") != std::string::npos;
    }
  }
  CHECK(degree_note);

  auto t5 = build_table(TableId::T5);
  bool q5_has_3a = false;
  for (const auto& row : t5.rows) {
    if (row.q != 5) continue;
    for (const auto& p : row.polys) q5_has_3a |= to_string(p) == "x^3 + x^2 + x + 3a";
  }
  // Under the Conway modulus x^2 + 4x + 2 the published 3a is not in the family.
  CHECK_FALSE(q5_has_3a);
  for (const auto& c : t5.listed) CHECK((c.member || !c.note.empty()));
}

TEST_CASE("r table") {
  auto r = build_table(TableId::RTable);
  REQUIRE(r.r_rows.size() == 9);
  for (const auto& row : r.r_rows) {
    auto pub = published_r(row.m);
    REQUIRE(pub);
    CHECK(row.r == pub->r);
    CHECK(row.p2m2 == pub->p2m2);
  }
  CHECK(r.files[0].second == "# r table: m, r, |P_2(m,2)|\nm,r,P2m2\n2,1,2\n3,1,3\n4,1,4\n5,2,10\n6,3,18\n7,6,42\n8,7,56\n9,16,144\n10,25,250\n");
}

TEST_CASE("tables are thread-count independent") {
  TableOptions one, many;
  many.threads = 3;
  for (TableId id : {TableId::T2, TableId::T4}) CHECK(build_table(id, one).files == build_table(id, many).files);
}

TEST_CASE("verify suite and its negative control") {
  VerifyOptions o;
  for (const auto& r : run_verify(o)) CHECK_MESSAGE(r.passed, r.name << ": " << r.detail);
  o.inject_fault = true;
  auto results = run_verify(o);
  std::string first;
  for (const auto& r : results) {
    if (!r.passed) {
      first = r.name;
      break;
    }
  }
  CHECK(first == "charpoly-formula");
}
