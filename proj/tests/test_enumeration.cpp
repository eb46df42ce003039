#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <numeric>
#include <set>

#include "tsrforge/enumeration.hpp"
#include "tsrforge/factor.hpp"
#include "tsrforge/primitivity.hpp"

using namespace tsrforge;

namespace {

Polynomial P(const FieldPtr& f, const char* text) { return parse_polynomial(f, text); }

std::vector<std::string> texts(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("closed-form counts") {
  CHECK(closed_form_count(CountKind::LfsrPrim, 2, 1, 4) == 2);
  CHECK(closed_form_count(CountKind::LfsrIrr, 2, 1, 3) == 2);
  CHECK(closed_form_count(CountKind::GlOrder, 2, 2, 1) == 6);
  CHECK(closed_form_count(CountKind::SigmaPrim, 2, 2, 2) == 16);
  CHECK(closed_form_count(CountKind::TsrM1, 3, 1, 2) == 2);
  CHECK(closed_form_count(CountKind::TsrOrder1, 3, 2, 1) == 12);
  // Irreducible count over F_2 of degree 6: 9 by the classical table.
  CHECK(closed_form_count(CountKind::LfsrIrr, 2, 1, 6) == 9);
  CHECK(parse_count_kind("sigma_irr") == CountKind::SigmaIrr);
  try {
    parse_count_kind("bogus");
    FAIL("expected UnknownKind");
  } catch (const TsrError& e) {
    CHECK(e.kind() == ErrorKind::UnknownKind);
  }
}

TEST_CASE("irreducible counts match exhaustive search") {
  for (std::uint64_t q : {2u, 3u}) {
    auto f = Field::prime(q);
    for (unsigned n = 1; n <= 5; ++n) {
      std::uint64_t irr = 0, prim = 0;
      for (std::uint64_t idx = 0; idx < ipow(q, n); ++idx) {
        auto c = digits(idx, q, n);
        c.push_back(1);
        Polynomial g(f, c);
        if (is_irreducible(g)) ++irr;
        if (g.coeff(0) != 0 && is_primitive(g)) ++prim;
      }
      CHECK(closed_form_count(CountKind::LfsrIrr, q, 1, n) == irr);
      CHECK(closed_form_count(CountKind::LfsrPrim, q, 1, n) == prim);
    }
  }
}

TEST_CASE("sigma-LFSR primitive count at the smallest point") {
  // Exhaustive over 4x4 block companions with 2x2 blocks over F_2 would be 2^16 matrices;
  // the primitive count equals the formula.
  auto f2 = Field::prime(2);
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < (1u << 8); ++idx) {
    auto e = digits(idx, 2, 8);
    // Rows 2,3 carry the feedback blocks A0 (rows 0..1 of the block column) and A1.
    Matrix t(f2, 4, 4);
    t.at(2, 0) = 1;
    t.at(3, 1) = 1;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 2; ++c) t.at(r, 2 + c) = e[r * 2 + c];
    Polynomial chi = matrix_charpoly(t);
    if (chi.coeff(0) != 0 && is_primitive(chi)) ++count;
  }
  CHECK(closed_form_count(CountKind::SigmaPrim, 2, 2, 2) == count);
}

TEST_CASE("matrices with a given characteristic polynomial") {
  auto f2 = Field::prime(2);
  auto f3 = Field::prime(3);
  CHECK(count_matrices_with_charpoly(P(f2, "x^2+x+1"), 2) == 2);
  for (std::uint64_t idx = 0; idx < 9; ++idx) {
    auto c = digits(idx, 3, 2);
    c.push_back(1);
    Polynomial p(f3, c);
    if (p.coeff(0) != 0 && is_primitive(p)) CHECK(count_matrices_with_charpoly(p, 2) == 6);
  }
  CHECK(count_matrices_with_charpoly(P(f2, "x^2"), 2) == 4);
  // Holds for every primitive polynomial in range.
  for (auto [q, m] : std::vector<std::pair<int, unsigned>>{{2, 3}, {5, 2}, {7, 2}}) {
    auto f = Field::prime(q);
    std::uint64_t expected = 1;
    for (unsigned i = 1; i < m; ++i) expected *= ipow(q, m) - ipow(q, i);
    for (std::uint64_t idx = 0; idx < ipow(q, m); ++idx) {
      auto c = digits(idx, q, m);
      c.push_back(1);
      Polynomial p(f, c);
      if (p.coeff(0) != 0 && is_primitive(p)) REQUIRE(count_matrices_with_charpoly(p, m) == expected);
    }
  }
  Limits tight;
  tight.matrix_count = 100;
  CHECK_THROWS_AS(count_matrices_with_charpoly(P(f3, "x^3+2x+1"), 3, tight), TsrError);
}

TEST_CASE("special primitive sets") {
  auto p23 = enumerate_special_primitives(2, 2, 3, SpecialForm::Pmnq);
  CHECK(texts(p23) == std::vector<std::string>{"x^3 + x^2 + x + (a+1)", "x^3 + x^2 + x + a"});
  CHECK(enumerate_special_primitives(2, 2, 2, SpecialForm::Pmnq).size() == 2);
  CHECK(enumerate_special_primitives(2, 2, 2, SpecialForm::Pqmn).size() == 2);

  // Reciprocal bijection for q = 2.
  auto direct = enumerate_special_primitives(2, 2, 3, SpecialForm::Pqmn);
  std::set<std::string> recips;
  for (const auto& f : direct) {
    auto c = f.coeffs();
    std::reverse(c.begin(), c.end());
    Polynomial r = Polynomial(f.field(), c).monic();
    CHECK(is_primitive(r));
    recips.insert(to_string(r));
  }
  const auto listed = texts(p23);
  std::set<std::string> reversed(listed.begin(), listed.end());
  CHECK(recips == reversed);

  // Canonical text round trip for every listed polynomial.
  for (const auto& f : enumerate_special_primitives(3, 2, 3, SpecialForm::Pmnq)) {
    CHECK(parse_polynomial(f.field(), to_string(f)) == f);
  }
  Limits tight;
  tight.special_candidates = 4;
  CHECK_THROWS_AS(enumerate_special_primitives(2, 2, 3, SpecialForm::Pmnq, tight), TsrError);
}

TEST_CASE("conjugate product of P_q(m,n) elements") {
  for (auto [q, m, n] : std::vector<std::tuple<int, unsigned, unsigned>>{{2, 2, 2}, {2, 2, 3}, {2, 3, 2}, {3, 2, 3}, {3, 2, 1}}) {
    auto set = enumerate_special_primitives(q, m, n, SpecialForm::Pqmn);
    std::map<std::string, int> fibers;
    for (const auto& f : set) {
      Polynomial phi = conjugate_product(f, q);
      REQUIRE(phi.size_degree() == m * n);
      REQUIRE(is_primitive(phi));
      auto d = mn_decompose_all(phi, m, n);
      REQUIRE(d.size() == 1);
      ++fibers[to_string(phi)];
    }
    for (const auto& [text, count] : fibers) CHECK(count == static_cast<int>(m));
  }
}

TEST_CASE("brute-force TSR enumeration") {
  CHECK(enumerate_tsrp_bruteforce(2, 2, 2).size() == 2);
  CHECK(enumerate_tsrp_bruteforce(2, 1, 2).size() == 1);
  CHECK(enumerate_tsrp_bruteforce(3, 1, 1).size() == 1);
  CHECK(general_linear_group(Field::prime(2), 2).size() == 6);
  CHECK(general_linear_group(Field::prime(3), 2).size() == 48);
  Limits tight;
  tight.enumeration = 10;
  CHECK_THROWS_AS(enumerate_tsrp_bruteforce(2, 2, 2, tight), TsrError);
  auto list = enumerate_tsrp_bruteforce(2, 2, 3, Limits{}, 3);
  CHECK(list == enumerate_tsrp_bruteforce(2, 2, 3, Limits{}, 1));
}

TEST_CASE("count theorem and bound") {
  CHECK(tsrp_count_theorem(2, 2, 2, 2) == 2);
  CHECK(tsrp_count_theorem(2, 2, 3, 2) == 2);
  CHECK(tsrp_count_theorem(3, 2, 1, 4) == closed_form_count(CountKind::TsrOrder1, 3, 2, 1));
  try {
    tsrp_count_theorem(2, 2, 2, 3);
    FAIL("expected FiberSizeViolation");
  } catch (const TsrError& e) {
    CHECK(e.kind() == ErrorKind::FiberSizeViolation);
  }
  CHECK(tsrp_upper_bound(2, 2, 2) == 2);
  for (auto [q, m, n] : std::vector<std::tuple<int, unsigned, unsigned>>{{2, 2, 2}, {2, 2, 3}, {2, 3, 2}, {3, 2, 3}, {2, 1, 4}, {3, 1, 3}}) {
    const auto brute = enumerate_tsrp_bruteforce(q, m, n).size();
    const auto p = enumerate_special_primitives(q, m, n, SpecialForm::Pqmn).size();
    CHECK_MESSAGE(tsrp_count_theorem(q, m, n, p) == brute, q << "," << m << "," << n);
    CHECK(BigInt(brute) <= tsrp_upper_bound(q, m, n));
  }
}

TEST_CASE("cyclotomic partition") {
  auto p1 = cyclotomic_partition(1);
  CHECK(p1.leaders == std::vector<std::uint32_t>{1});
  CHECK(p1.coset(1) == std::vector<std::uint64_t>{1, 2});
  auto p2 = cyclotomic_partition(2);
  CHECK(p2.leaders == std::vector<std::uint32_t>{1, 7});
  CHECK(p2.coset(7) == std::vector<std::uint64_t>{7, 14, 13, 11});
  for (unsigned m = 1; m <= 8; ++m) {
    auto part = cyclotomic_partition(m);
    std::uint64_t total = 0;
    for (auto s : part.sizes) {
      CHECK(s == 2 * m);
      total += s;
    }
    CHECK(total == euler_phi(part.modulus));
    CHECK(std::is_sorted(part.leaders.begin(), part.leaders.end()));
    // Leaders are coset minima.
    for (auto l : part.leaders) {
      auto c = part.coset(l);
      CHECK(*std::min_element(c.begin(), c.end()) == l);
    }
  }
  Limits tight;
  tight.max_coset_m = 3;
  CHECK_THROWS_AS(cyclotomic_partition(4, tight), TsrError);
}

TEST_CASE("trace-one classes") {
  const std::vector<std::uint64_t> expected_r{1, 1, 1, 2, 3, 6, 7, 16};
  for (unsigned m = 2; m <= 9; ++m) {
    auto t = count_trace_one_classes(m);
    CHECK(t.r == expected_r[m - 2]);
    CHECK(t.p2m2 == t.r * m);
    CHECK(t.orbit_only == 0);
    CHECK(count_trace_one_elements(m) == 2 * t.r * m);
    // r <= phi(2^m - 1)/m
    CHECK(t.r * m <= euler_phi((std::uint64_t{1} << m) - 1));
  }
  // Element-level tally by exhaustive scan at small m.
  for (unsigned m = 2; m <= 5; ++m) {
    auto f = Field::extension(2, 2 * m);
    std::uint64_t c = 0;
    for (Elem b = 1; b < f->order(); ++b) {
      if (f->add(b, f->pow(b, std::uint64_t{1} << m)) == 1 && is_primitive_element(*f, b)) ++c;
    }
    CHECK(c == count_trace_one_elements(m));
  }
  CHECK(count_trace_one_classes(6, Limits{}, 3).r == 3);
}

TEST_CASE("class summaries") {
  for (unsigned m = 2; m <= 6; ++m) {
    auto part = cyclotomic_partition(m);
    std::uint64_t trace_one = 0;
    for (auto leader : part.leaders) {
      auto s = summarize_class(m, leader);
      CHECK(s.quadratics.size() == m);
      for (const auto& q : s.quadratics) CHECK(is_primitive(q));
      if (s.trace == 1) ++trace_one;
    }
    CHECK(trace_one == count_trace_one_classes(m).r);
  }
}
