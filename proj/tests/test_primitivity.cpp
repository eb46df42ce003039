#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "tsrforge/factor.hpp"
#include "tsrforge/field.hpp"
#include "tsrforge/primitivity.hpp"

using namespace tsrforge;

namespace {

Polynomial P(const FieldPtr& f, const char* text) { return parse_polynomial(f, text); }

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t phi_bruteforce(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t i = 1; i <= n; ++i) c += gcd_u(i, n) == 1;
  return c;
}

// Order of X modulo f by stepping; 0 when X is not a unit within the bound.
std::uint64_t order_of_x(const Polynomial& f, std::uint64_t bound) {
  Polynomial x = poly_mod(Polynomial::x(f.field()), f);
  Polynomial acc = x;
  for (std::uint64_t i = 1; i <= bound; ++i) {
    if (acc.is_one()) return i;
    acc = poly_mod(acc * x, f);
  }
  return 0;
}

bool irreducible_by_trial_division(const Polynomial& f) {
  const std::size_t n = f.size_degree();
  const std::uint64_t q = f.field()->order();
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      auto c = digits(idx, q, d);
      c.push_back(1);
      if (poly_mod(f, Polynomial(f.field(), c)).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("factor_integer") {
  auto f15 = factor_integer(std::uint64_t{15});
  CHECK(f15.factors == std::vector<PrimePower>{{3, 1}, {5, 1}});
  auto f20 = factor_integer(std::uint64_t{1048575});
  CHECK(f20.factors == std::vector<PrimePower>{{3, 1}, {5, 2}, {11, 1}, {31, 1}, {41, 1}});
  CHECK(factor_integer(std::uint64_t{1}).factors.empty());
  // Semiprime with both factors above the trial bound.
  auto big = factor_integer(std::uint64_t{1000003} * 998244353ull);
  CHECK(big.factors == std::vector<PrimePower>{{1000003, 1}, {998244353, 1}});
  auto m64 = factor_integer(std::uint64_t{18446744073709551615ull});
  CHECK(m64.product() == BigInt(18446744073709551615ull));
  for (auto pp : m64.factors) CHECK(is_prime(pp.prime));
  BigInt two64 = BigInt(1) << 64;
  CHECK(factor_integer(two64).factors == std::vector<PrimePower>{{2, 64}});
  try {
    factor_integer(two64 + 1);
    FAIL("expected overflow");
  } catch (const TsrError& e) {
    CHECK(e.kind() == ErrorKind::FactorizationOverflow);
  }
  for (std::uint64_t n = 1; n < 3000; ++n) {
    auto f = factor_integer(n);
    REQUIRE(f.product() == BigInt(n));
    REQUIRE(euler_phi(n) == phi_bruteforce(n));
  }
}

TEST_CASE("mobius and divisors") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("is_irreducible") {
  auto f2 = Field::prime(2);
  CHECK(is_irreducible(P(f2, "x^2+x+1")));
  CHECK_FALSE(is_irreducible(P(f2, "x^2+1")));
  CHECK(is_irreducible(P(f2, "x^4+x^3+x^2+x+1")));
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
    auto f = Field::extension(p, k);
    const std::uint64_t q = f->order();
    for (std::size_t n = 1; n <= 5; ++n) {
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < n; ++i) count *= q;
      if (count > 2000) break;
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        auto c = digits(idx, q, n);
        c.push_back(1);
        Polynomial g(f, c);
        REQUIRE(is_irreducible(g) == irreducible_by_trial_division(g));
      }
    }
  }
}

TEST_CASE("is_primitive_poly") {
  auto f2 = Field::prime(2);
  auto r1 = is_primitive_poly(P(f2, "x^2+x+1"));
  CHECK(r1.primitive);
  REQUIRE(r1.certificate);
  CHECK(verify_certificate(*r1.certificate));
  CHECK_FALSE(is_primitive_poly(P(f2, "x^4+x^3+x^2+x+1")).primitive);
  auto r3 = is_primitive_poly(P(f2, "x^4+x^3+1"));
  CHECK(r3.primitive);
  CHECK(r3.certificate->group_order == 15);
  CHECK(r3.certificate->witnesses.size() == 2);
  try {
    is_primitive_poly(P(f2, "x^3+x"));
    FAIL("expected ZeroConstantTerm");
  } catch (const TsrError& e) {
    CHECK(e.kind() == ErrorKind::ZeroConstantTerm);
  }
  auto bad = *r3.certificate;
  bad.witnesses[0] = Polynomial::constant(f2, 1);
  CHECK_FALSE(verify_certificate(bad));
}

TEST_CASE("certificate verdict agrees with brute-force order") {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}, {2, 3}}) {
    auto f = Field::extension(p, k);
    const std::uint64_t q = f->order();
    for (std::size_t n = 1; n <= 8; ++n) {
      std::uint64_t space = 1, group = 1;
      for (std::size_t i = 0; i < n; ++i) {
        space *= q;
        group *= q;
      }
      group -= 1;
      if (group >= (1u << 16) || space > 4096) break;
      for (std::uint64_t idx = 0; idx < space; ++idx) {
        if (idx % q == 0) continue;
        auto c = digits(idx, q, n);
        c.push_back(1);
        Polynomial g(f, c);
        const bool prim = is_primitive(g);
        const bool irr = is_irreducible(g);
        if (prim) REQUIRE(irr);
        if (irr) {
          const std::uint64_t ord = order_of_x(g, group);
          REQUIRE(ord != 0);
          REQUIRE(group % ord == 0);
          REQUIRE(prim == (ord == group));
        } else {
          REQUIRE_FALSE(prim);
        }
      }
    }
  }
}

TEST_CASE("is_primitive_element") {
  auto f4 = Field::extension(2, 2);
  CHECK_FALSE(is_primitive_element(*f4, 1));
  CHECK(is_primitive_element(*f4, f4->generator()));
  CHECK_FALSE(is_primitive_element(*Field::prime(7), 2));
  CHECK(is_primitive_element(*Field::prime(7), 3));
  CHECK_THROWS_AS(is_primitive_element(*f4, 0), TsrError);
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 6}, {3, 5}, {5, 4}, {2, 12}, {13, 3}}) {
    auto f = Field::extension(p, k);
    std::uint64_t count = 0;
    for (Elem x = 1; x < f->order(); ++x) {
      // Brute-force order by stepping.
      Elem y = x;
      std::uint64_t ord = 1;
      while (y != 1) {
        y = f->mul(y, x);
        ++ord;
      }
      REQUIRE(multiplicative_order(*f, x) == ord);
      count += ord == f->order() - 1;
    }
    CHECK(count == euler_phi(f->order() - 1));
    CHECK(primitive_elements(*f).size() == count);
  }
}

TEST_CASE("minimal_polynomial") {
  auto f2 = Field::prime(2);
  auto f4 = Field::extension(2, 2);
  CHECK(minimal_polynomial(FieldElement(f4, 1), 2) == P(f2, "x+1"));
  CHECK(minimal_polynomial(FieldElement(f4, f4->generator()), 2) == P(f2, "x^2+x+1"));
  CHECK(minimal_polynomial(FieldElement(f4, 0), 2) == P(f2, "x"));
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 6}, {3, 4}, {5, 2}}) {
    auto f = Field::extension(p, k);
    for (Elem x = 0; x < f->order(); ++x) {
      FieldElement e(f, x);
      Polynomial mp = minimal_polynomial(e, p);
      REQUIRE(k % mp.size_degree() == 0);
      // Orbit size equals degree.
      std::size_t orbit = 1;
      for (FieldElement y = frobenius(e, p, 1); !(y == e); y = frobenius(y, p, 1)) ++orbit;
      REQUIRE(orbit == mp.size_degree());
      // Evaluate in the big field.
      Elem acc = 0;
      for (std::size_t i = mp.coeffs().size(); i-- > 0;) acc = f->add(f->mul(acc, x), mp.coeff(i));
      REQUIRE(acc == 0);
      REQUIRE(is_irreducible(mp));
    }
  }
}

TEST_CASE("conjugate_product") {
  const std::uint32_t m4[] = {1, 1, 1};
  auto f4 = Field::extension(2, 2, m4);
  auto f2 = Field::prime(2);
  auto prod = conjugate_product(P(f4, "x^2+ax+a"), 2);
  CHECK(prod == P(f2, "x^4+x^3+1"));
  // Over F_q itself the m-fold product is f^m.
  auto lifted = P(f4, "x^3+x+1");
  CHECK(conjugate_product(lifted, 2) == P(f2, "x^3+x+1").pow(2));

  auto f9 = Field::extension(3, 2);
  auto f3 = Field::prime(3);
  for (Elem a = 0; a < 9; ++a) {
    for (Elem b = 1; b < 9; ++b) {
      Polynomial g(f9, {b, a, 1});
      Polynomial phi = conjugate_product(g, 3);
      CHECK(phi.size_degree() == 4);
      CHECK(*phi.field() == *f3);
    }
  }
}
