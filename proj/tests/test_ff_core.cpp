#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tsrforge/conway.hpp"
#include "tsrforge/factor.hpp"
#include "tsrforge/field.hpp"
#include "tsrforge/limits.hpp"
#include "tsrforge/matrix.hpp"
#include "tsrforge/polynomial.hpp"
#include "tsrforge/primitivity.hpp"

using namespace tsrforge;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const TsrError& e) {
    return e.kind();
  }
  FAIL("expected a TsrError");
  return ErrorKind::ParseError;
}

Polynomial P(const FieldPtr& f, const char* text) { return parse_polynomial(f, text); }

Matrix companion(const Polynomial& h) {
  const std::size_t m = h.size_degree();
  Matrix c(h.field(), m, m);
  for (std::size_t i = 1; i < m; ++i) c.at(i, i - 1) = 1;
  for (std::size_t i = 0; i < m; ++i) c.at(i, m - 1) = h.field()->neg(h.coeff(i));
  return c;
}

Matrix random_matrix(const FieldPtr& f, std::size_t n, std::mt19937_64& rng) {
  Matrix m(f, n, n);
  std::uniform_int_distribution<Elem> d(0, f->order() - 1);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = d(rng);
  return m;
}

// Cofactor expansion; independent of elimination.
Elem det_cofactor(const Matrix& m) {
  const Field& f = *m.field();
  const std::size_t n = m.rows();
  if (n == 1) return m.at(0, 0);
  Elem acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Matrix minor(m.field(), n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor.at(r - 1, cc++) = m.at(r, c);
    Elem term = f.mul(m.at(0, j), det_cofactor(minor));
    acc = j % 2 == 0 ? f.add(acc, term) : f.sub(acc, term);
  }
  return acc;
}

}  // namespace

TEST_CASE("prime fields") {
  CHECK(Field::prime(2)->order() == 2);
  CHECK(Field::prime(13)->order() == 13);
  CHECK(kind_of([] { Field::prime(4); }) == ErrorKind::CompositeCharacteristic);
  CHECK(kind_of([] { Field::prime(1); }) == ErrorKind::CompositeCharacteristic);
}

TEST_CASE("extension fields") {
  const std::uint32_t good[] = {1, 1, 1};
  auto f4 = Field::extension(2, 2, good);
  CHECK(f4->order() == 4);
  CHECK(f4->modulus_source() == ModulusSource::User);
  const std::uint32_t bad[] = {1, 0, 1};
  CHECK(kind_of([&] { Field::extension(2, 2, bad); }) == ErrorKind::ReducibleModulus);

  auto f9 = Field::extension(3, 2);
  CHECK(f9->modulus_source() == ModulusSource::Conway);
  CHECK(f9->modulus() == std::vector<std::uint32_t>{2, 2, 1});
  auto prim = is_primitive_poly(Polynomial(Field::prime(3), {2, 2, 1}));
  CHECK(prim.primitive);
}

TEST_CASE("conway table entries are primitive") {
  CHECK(conway_table_size() >= 600);
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 101u, 4093u}) {
    for (unsigned k = 2; k <= 24; ++k) {
      auto c = conway_polynomial(p, k);
      std::uint64_t order = 0;
      if (!checked_pow(p, k, order) || order > (1u << 24)) break;
      REQUIRE_MESSAGE(c.has_value(), "missing (" << p << "," << k << ")");
      std::vector<Elem> e(c->begin(), c->end());
      CHECK_MESSAGE(is_primitive(Polynomial(Field::prime(p), e)), "(" << p << "," << k << ")");
    }
  }
}

TEST_CASE("fallback modulus is the least primitive polynomial") {
  CHECK(least_primitive_polynomial(2, 4) == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
  CHECK(least_primitive_polynomial(3, 2) == std::vector<std::uint32_t>{2, 1, 1});
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(7);
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {7, 1}, {2, 4}, {3, 3}, {5, 2}, {2, 20}, {3, 11}, {251, 3}}) {
    auto f = Field::extension(p, k);
    std::uniform_int_distribution<Elem> d(0, f->order() - 1);
    for (int i = 0; i < 1000; ++i) {
      Elem a = d(rng), b = d(rng), c = d(rng);
      CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
      CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
      CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
    }
  }
}

TEST_CASE("table and schoolbook multiplication agree") {
  // A user modulus equal to the Conway one builds the same field; compare F_{2^16} (table)
  // against F_{2^17} style arithmetic through pow identities instead.
  auto f = Field::extension(3, 5);
  auto g = Field::extension(3, 5, std::vector<std::uint32_t>(f->modulus()));
  CHECK(*f == *g);
  for (Elem a = 1; a < f->order(); a += 17) CHECK(f->pow(a, f->order() - 1) == 1);
}

TEST_CASE("poly_divrem") {
  auto f2 = Field::prime(2);
  auto [q1, r1] = poly_divrem(P(f2, "x^3+1"), P(f2, "x+1"));
  CHECK(q1 == P(f2, "x^2+x+1"));
  CHECK(r1.is_zero());
  auto [q2, r2] = poly_divrem(P(f2, "x^2"), P(f2, "x^2"));
  CHECK(q2.is_one());
  CHECK(r2.is_zero());
  auto a = P(f2, "x^4+x+1"), b = P(f2, "x^2+x+1");
  auto [q3, r3] = poly_divrem(a, b);
  CHECK(q3 == P(f2, "x^2+x"));
  CHECK(r3 == P(f2, "1"));
  CHECK(q3 * b + r3 == a);
  CHECK(kind_of([&] { poly_divrem(a, Polynomial(f2)); }) == ErrorKind::DivisionByZeroPoly);

  std::mt19937_64 rng(3);
  auto f9 = Field::extension(3, 2);
  std::uniform_int_distribution<Elem> d(0, 8);
  for (int t = 0; t < 200; ++t) {
    std::vector<Elem> ca(1 + t % 9), cb(1 + t % 4);
    for (auto& c : ca) c = d(rng);
    for (auto& c : cb) c = d(rng);
    cb.back() = 1 + d(rng) % 8;
    Polynomial pa(f9, ca), pb(f9, cb);
    auto [q, r] = poly_divrem(pa, pb);
    CHECK(q * pb + r == pa);
    CHECK(r.degree() < pb.degree());
  }
}

TEST_CASE("poly_modpow against repeated multiplication") {
  auto f2 = Field::prime(2);
  CHECK(poly_modpow(Polynomial::x(f2), 0, P(f2, "x^2+x+1")).is_one());
  CHECK(poly_modpow(Polynomial::x(f2), 3, P(f2, "x^2+x+1")).is_one());
  CHECK(poly_modpow(Polynomial::x(f2), 5, P(f2, "x^4+x^3+x^2+x+1")).is_one());
  auto f7 = Field::prime(7);
  auto mod = P(f7, "x^3+3x+2");
  Polynomial acc = Polynomial::constant(f7, 1);
  auto base = P(f7, "2x^2+5");
  for (std::uint64_t e = 0; e < 60; ++e) {
    CHECK(poly_modpow(base, e, mod) == acc);
    acc = poly_mod(acc * base, mod);
  }
}

TEST_CASE("frobenius") {
  const std::uint32_t m4[] = {1, 1, 1};
  auto f4 = Field::extension(2, 2, m4);
  FieldElement a(f4, f4->generator());
  CHECK(frobenius(a, 2, 0) == a);
  CHECK(frobenius(a, 2, 1) == a + FieldElement(f4, 1));
  CHECK(kind_of([&] { frobenius(a, 3, 1); }) == ErrorKind::BaseNotSubfield);

  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 6}, {3, 4}, {5, 3}, {2, 12}}) {
    auto f = Field::extension(p, k);
    for (Elem x = 0; x < f->order(); ++x) {
      FieldElement e(f, x);
      REQUIRE(frobenius(e, p, k) == e);
      FieldElement y(f, (x * 7 + 3) % f->order());
      REQUIRE(frobenius(e * y, p, 1) == frobenius(e, p, 1) * frobenius(y, p, 1));
      REQUIRE(frobenius(e + y, p, 1) == frobenius(e, p, 1) + frobenius(y, p, 1));
    }
  }
}

TEST_CASE("matrix_charpoly") {
  auto f2 = Field::prime(2);
  CHECK(matrix_charpoly(Matrix::identity(f2, 2)) == P(f2, "x^2+1"));
  CHECK(matrix_charpoly(Matrix(f2, 2, 2)) == P(f2, "x^2"));
  CHECK(matrix_charpoly(companion(P(f2, "x^2+x+1"))) == P(f2, "x^2+x+1"));
  CHECK(kind_of([&] { matrix_charpoly(Matrix(f2, 2, 3)); }) == ErrorKind::NonSquareMatrix);

  std::mt19937_64 rng(11);
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}, {7, 1}}) {
    auto f = Field::extension(p, k);
    std::uniform_int_distribution<Elem> d(0, f->order() - 1);
    for (std::size_t n = 1; n <= 6; ++n) {
      for (int t = 0; t < 20; ++t) {
        std::vector<Elem> c(n + 1);
        for (auto& e : c) e = d(rng);
        c[n] = 1;
        Polynomial h(f, c);
        CHECK(matrix_charpoly(companion(h)) == h);

        Matrix m = random_matrix(f, n, rng);
        Polynomial chi = matrix_charpoly(m);
        CHECK(chi.size_degree() == n);
        CHECK(chi.is_monic());
        Elem expected = chi.coeff(0);
        if (n % 2 == 1) expected = f->neg(expected);
        CHECK(determinant(m) == expected);
        if (n <= 5) CHECK(determinant(m) == det_cofactor(m));
        // Cayley-Hamilton as an independent check of the whole polynomial.
        Matrix acc(f, n, n);
        Matrix power = Matrix::identity(f, n);
        for (std::size_t i = 0; i <= n; ++i) {
          Matrix term = power.scaled(chi.coeff(i));
          for (std::size_t j = 0; j < n * n; ++j)
            acc.at(j / n, j % n) = f->add(acc.at(j / n, j % n), term.at(j / n, j % n));
          power = power * m;
        }
        CHECK(acc == Matrix(f, n, n));
      }
    }
  }
}

TEST_CASE("matrix similarity sparse patterns") {
  // Zero subdiagonal pivots force the row/column swap path.
  auto f3 = Field::prime(3);
  Matrix m = Matrix::from_rows(f3, {{1, 2, 0, 1}, {0, 0, 1, 0}, {0, 0, 2, 1}, {2, 1, 0, 0}});
  Polynomial chi = matrix_charpoly(m);
  Matrix acc(f3, 4, 4);
  Matrix power = Matrix::identity(f3, 4);
  for (std::size_t i = 0; i <= 4; ++i) {
    Matrix term = power.scaled(chi.coeff(i));
    for (std::size_t j = 0; j < 16; ++j) acc.at(j / 4, j % 4) = f3->add(acc.at(j / 4, j % 4), term.at(j / 4, j % 4));
    power = power * m;
  }
  CHECK(acc == Matrix(f3, 4, 4));
}

TEST_CASE("polynomial text round trip") {
  auto f9 = Field::extension(3, 2);
  for (Elem a = 0; a < 9; ++a) {
    for (Elem b = 0; b < 9; ++b) {
      Polynomial p(f9, {a, b, 1, 0, (a + b) % 9});
      CHECK(parse_polynomial(f9, to_string(p)) == p);
    }
  }
  auto f4 = Field::extension(2, 2);
  CHECK(to_string(P(f4, "x^3+x^2+x+a+1")) == "x^3 + x^2 + x + (a+1)");
  CHECK(to_string(P(f4, "x^2 + (a+1)x + a")) == "x^2 + (a+1)x + a");
  CHECK(to_string(Polynomial(f4)) == "0");
  CHECK(parse_element(*f9, "2a+1") == 7);
  CHECK(kind_of([&] { parse_polynomial(f9, "x^^2"); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { parse_polynomial(Field::prime(5), "x+a"); }) == ErrorKind::ParseError);
}

TEST_CASE("degree sentinel") {
  auto f2 = Field::prime(2);
  Polynomial z(f2);
  CHECK(z.degree().is_neg_inf());
  CHECK(z.degree() < Degree(0));
  CHECK((z * P(f2, "x+1")).degree() == z.degree() + Degree(1));
}
