#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "tsrforge/primitivity.hpp"
#include "tsrforge/tsr.hpp"

using namespace tsrforge;

namespace {

Polynomial P(const FieldPtr& f, const char* text) { return parse_polynomial(f, text); }

Matrix companion_of(const Polynomial& h) {
  const std::size_t m = h.size_degree();
  Matrix c(h.field(), m, m);
  for (std::size_t i = 1; i < m; ++i) c.at(i, i - 1) = 1;
  for (std::size_t i = 0; i < m; ++i) c.at(i, m - 1) = h.field()->neg(h.coeff(i));
  return c;
}

TsrSpec random_spec(const FieldPtr& f, unsigned m, unsigned n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> d(0, f->order() - 1);
  while (true) {
    Matrix b(f, m, m);
    for (unsigned r = 0; r < m; ++r)
      for (unsigned c = 0; c < m; ++c) b.at(r, c) = d(rng);
    if (!is_invertible(b)) continue;
    std::vector<Elem> c(n - 1);
    for (auto& e : c) e = d(rng);
    return TsrSpec::make(f, m, n, c, b);
  }
}

// Steps from the unit state until it returns; the orbit length.
std::uint64_t orbit_length(const TsrSpec& spec, std::uint64_t cap) {
  std::vector<Elem> flat(spec.m * spec.n, 0);
  flat[0] = 1;
  TsrState start = TsrState::from_flat(flat, spec.m, spec.n);
  TsrState s = tsr_step(spec, start);
  std::uint64_t len = 1;
  while (s.flatten() != flat && len <= cap) {
    s = tsr_step(spec, s);
    ++len;
  }
  return len;
}

}  // namespace

TEST_CASE("transition matrix layout") {
  auto f2 = Field::prime(2);
  auto fib = TsrSpec::make(f2, 1, 2, {1}, Matrix::from_rows(f2, {{1}}));
  CHECK(build_transition_matrix(fib) == Matrix::from_rows(f2, {{0, 1}, {1, 1}}));
  auto b = Matrix::from_rows(f2, {{1, 1}, {1, 0}});
  auto n1 = TsrSpec::make(f2, 2, 1, {}, b);
  CHECK(build_transition_matrix(n1) == b);
  auto ex = TsrSpec::make(f2, 2, 2, {1}, companion_of(P(f2, "x^2+x+1")));
  CHECK(tsr_charpoly_direct(ex) == P(f2, "x^4+x^3+1"));
  CHECK(tsr_charpoly_formula(ex) == P(f2, "x^4+x^3+1"));
  CHECK_THROWS_AS(TsrSpec::make(f2, 2, 1, {}, Matrix::from_rows(f2, {{1, 1}, {1, 1}})), TsrError);
  try {
    TsrSpec::make(f2, 2, 1, {}, Matrix(f2, 2, 2));
  } catch (const TsrError& e) {
    CHECK(e.kind() == ErrorKind::SingularB);
  }
}

TEST_CASE("tsr_step") {
  auto f2 = Field::prime(2);
  auto fib = TsrSpec::make(f2, 1, 2, {1}, Matrix::from_rows(f2, {{1}}));
  TsrState s = TsrState::from_flat({1, 0}, 1, 2);
  std::vector<Elem> seq;
  for (int i = 0; i < 6; ++i) {
    seq.push_back(s.blocks[0][0]);
    s = tsr_step(fib, s);
  }
  CHECK(seq == std::vector<Elem>{1, 0, 1, 1, 0, 1});
  CHECK(s.step_index == 6);
  TsrState zero = TsrState::from_flat({0, 0}, 1, 2);
  CHECK(tsr_step(fib, zero).flatten() == zero.flatten());
  TsrState bad = TsrState::from_flat({0, 0, 0}, 1, 3);
  CHECK_THROWS_AS(tsr_step(fib, bad), TsrError);

  std::mt19937_64 rng(5);
  for (std::uint64_t q : {2u, 3u, 5u}) {
    auto f = Field::prime(q);
    std::uniform_int_distribution<Elem> d(0, q - 1);
    for (unsigned m = 1; m <= 3; ++m) {
      for (unsigned n = 1; n <= 3; ++n) {
        auto spec = random_spec(f, m, n, rng);
        Matrix t = build_transition_matrix(spec);
        std::vector<Elem> flat(m * n);
        for (auto& e : flat) e = d(rng);
        TsrState s = TsrState::from_flat(flat, m, n);
        std::vector<Elem> v = flat;
        for (int k = 1; k <= 50; ++k) {
          s = tsr_step(spec, s);
          v = t.left_multiply(v);
          REQUIRE(s.flatten() == v);
        }
      }
    }
  }
}

TEST_CASE("charpoly formula special cases") {
  auto f5 = Field::prime(5);
  auto m1 = TsrSpec::make(f5, 1, 3, {2, 4}, Matrix::from_rows(f5, {{3}}));
  // X^n - b g_T(X)
  CHECK(tsr_charpoly_formula(m1) == P(f5, "x^3") - P(f5, "4x^2+2x+1").scaled(3));
  auto b = Matrix::from_rows(f5, {{1, 2}, {3, 4}});
  auto n1 = TsrSpec::make(f5, 2, 1, {}, b);
  CHECK(tsr_charpoly_formula(n1) == matrix_charpoly(b));
}

TEST_CASE("formula agrees with determinant on random specs") {
  std::mt19937_64 rng(17);
  for (std::uint64_t q : {2u, 3u, 5u}) {
    auto f = Field::prime(q);
    for (unsigned m = 1; m <= 3; ++m)
      for (unsigned n = 1; n <= 3; ++n)
        for (int t = 0; t < 100; ++t) {
          auto spec = random_spec(f, m, n, rng);
          REQUIRE(tsr_charpoly_formula(spec) == tsr_charpoly_direct(spec));
        }
  }
}

TEST_CASE("period") {
  auto f2 = Field::prime(2);
  auto n1 = TsrSpec::make(f2, 3, 1, {}, Matrix::identity(f2, 3));
  CHECK(tsr_period(n1) == 1);
  auto fib = TsrSpec::make(f2, 1, 2, {1}, Matrix::from_rows(f2, {{1}}));
  CHECK(tsr_period(fib) == 3);
  auto ex = TsrSpec::make(f2, 2, 2, {1}, companion_of(P(f2, "x^2+x+1")));
  CHECK(tsr_period(ex) == 15);
  CHECK(orbit_length(ex, 100) == 15);
  CHECK(is_primitive_tsr(ex));
  CHECK_FALSE(is_primitive_tsr(n1));
  CHECK_FALSE(is_primitive_tsr(TsrSpec::make(f2, 1, 2, {0}, Matrix::from_rows(f2, {{1}}))));
  auto f3 = Field::prime(3);
  CHECK_FALSE(is_primitive_tsr(TsrSpec::make(f3, 1, 1, {}, Matrix::from_rows(f3, {{1}}))));

  Limits tight;
  tight.field_order = 8;
  CHECK_THROWS_AS(tsr_period(ex, tight), TsrError);

  // Period equals the matrix order found by brute force, squarefree or not.
  std::mt19937_64 rng(23);
  for (std::uint64_t q : {2u, 3u}) {
    auto f = Field::prime(q);
    for (unsigned m = 1; m <= 2; ++m)
      for (unsigned n = 1; n <= 3; ++n)
        for (int t = 0; t < 30; ++t) {
          auto spec = random_spec(f, m, n, rng);
          Matrix tm = build_transition_matrix(spec);
          Matrix id = Matrix::identity(f, m * n);
          Matrix acc = tm;
          std::uint64_t ord = 1;
          while (!(acc == id)) {
            acc = acc * tm;
            ++ord;
          }
          REQUIRE(tsr_period(spec) == ord);
        }
  }
}

TEST_CASE("normalize general form") {
  auto f3 = Field::prime(3);
  auto a = Matrix::from_rows(f3, {{0, 1}, {1, 1}});
  auto spec = normalize_general_form(f3, 2, 2, {2, 1}, a);
  CHECK(spec.B == a.scaled(2));
  CHECK(spec.c == std::vector<Elem>{2});
  try {
    normalize_general_form(f3, 2, 2, {0, 1}, a);
    FAIL("expected rejection");
  } catch (const TsrError& e) {
    CHECK(e.kind() == ErrorKind::ZeroConstantTerm);
  }
}

TEST_CASE("mn_decompose") {
  auto f2 = Field::prime(2);
  auto d = mn_decompose(P(f2, "x^4+x^3+1"), 2, 2);
  REQUIRE(d);
  CHECK(d->g == P(f2, "x+1"));
  CHECK(d->h == P(f2, "x^2+x+1"));
  CHECK_FALSE(mn_decompose(P(f2, "x^4+x+1"), 2, 2));
  auto f5 = Field::prime(5);
  auto psi = P(f5, "x^3+2x+3");
  auto d1 = mn_decompose(psi, 3, 1);
  REQUIRE(d1);
  CHECK(d1->g.is_one());
  CHECK(d1->h == psi);
  try {
    mn_decompose(P(f2, "x^3+x+1"), 2, 2);
    FAIL("expected BadDegree");
  } catch (const TsrError& e) {
    CHECK(e.kind() == ErrorKind::BadDegree);
  }
}

TEST_CASE("decomposition round trip and uniqueness on primitive inputs") {
  std::mt19937_64 rng(29);
  for (std::uint64_t q : {2u, 3u}) {
    auto f = Field::prime(q);
    for (unsigned m = 1; m <= 3; ++m)
      for (unsigned n = 1; n <= 3; ++n) {
        std::uint64_t size = 1;
        for (unsigned i = 0; i < m * n; ++i) size *= q;
        if (size > (1u << 16)) continue;
        for (int t = 0; t < 40; ++t) {
          auto spec = random_spec(f, m, n, rng);
          auto chi = tsr_charpoly_formula(spec);
          auto all = mn_decompose_all(chi, m, n);
          REQUIRE(!all.empty());
          for (const auto& d : all) REQUIRE(recompose(d, m, n) == chi);
          if (is_primitive(chi)) {
            REQUIRE(all.size() == 1);
            REQUIRE(all[0].g == feedback_polynomial(spec));
            REQUIRE(all[0].h == matrix_charpoly(spec.B));
            REQUIRE(tsr_period(spec) == size - 1);
          }
        }
      }
  }
}

TEST_CASE("primitive specs reach the full orbit") {
  auto f2 = Field::prime(2);
  std::mt19937_64 rng(31);
  int primitive_seen = 0;
  for (int t = 0; t < 400; ++t) {
    auto spec = random_spec(f2, 2, 3, rng);
    const std::uint64_t len = orbit_length(spec, 64);
    if (is_primitive_tsr(spec)) {
      ++primitive_seen;
      CHECK(len == 63);
    } else {
      CHECK(len < 63);
    }
  }
  CHECK(primitive_seen > 0);
}
