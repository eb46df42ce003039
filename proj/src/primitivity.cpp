#include "tsrforge/primitivity.hpp"

#include <algorithm>

#include "tsrforge/limits.hpp"
#include "tsrforge/order.hpp"

namespace tsrforge {

BigInt ExponentBound::value() const {
  BigInt v = 1;
  for (const auto& [prime, exponent] : factors) {
    for (unsigned i = 0; i < exponent; ++i) v *= prime;
  }
  return v;
}

void ExponentBound::lcm_with_prime_power(std::uint64_t prime, unsigned exponent) {
  auto it = std::lower_bound(factors.begin(), factors.end(), prime,
                             [](const auto& pe, std::uint64_t p) { return pe.first < p; });
  if (it != factors.end() && it->first == prime) {
    it->second = std::max(it->second, exponent);
  } else {
    factors.insert(it, {prime, exponent});
  }
}

void ExponentBound::lcm_with(const Factorization& n) {
  for (const auto& pp : n.factors) lcm_with_prime_power(pp.prime, pp.exponent);
}

namespace {

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t group_order_of(const Polynomial& f) {
  const unsigned n = static_cast<unsigned>(f.size_degree());
  return pow_or_throw(f.field()->order(), n, "multiplicative group order") - 1;
}

void require_primitivity_input(const Polynomial& f) {
  if (f.degree() < Degree(1)) fail(ErrorKind::BadDegree, "primitivity needs degree >= 1");
  if (f.coeff(0) == 0) fail(ErrorKind::ZeroConstantTerm, "f(0) = 0: " + to_string(f));
}

// Order test of X modulo monic f; fills witnesses when requested.
bool x_has_full_order(const Polynomial& f, const Factorization& fac, std::uint64_t order,
                      std::vector<Polynomial>* witnesses) {
  const Polynomial x = Polynomial::x(f.field());
  if (!poly_modpow(x, order, f).is_one()) return false;
  for (const auto& pp : fac.factors) {
    Polynomial w = poly_modpow(x, order / pp.prime, f);
    if (w.is_one()) return false;
    if (witnesses) witnesses->push_back(std::move(w));
  }
  return true;
}

}  // namespace

bool is_irreducible(const Polynomial& input) {
  if (input.degree() < Degree(1)) return false;
  const Polynomial f = input.monic();
  const unsigned n = static_cast<unsigned>(f.size_degree());
  if (n == 1) return true;
  const std::uint64_t q = f.field()->order();
  const Polynomial x = Polynomial::x(f.field());
  // frob[i] = X^(q^i) mod f
  std::vector<Polynomial> frob{poly_mod(x, f)};
  for (unsigned i = 1; i <= n; ++i) frob.push_back(poly_modpow(frob.back(), q, f));
  if (!(frob[n] == poly_mod(x, f))) return false;
  for (unsigned l : prime_divisors(n)) {
    if (!poly_gcd(frob[n / l] - x, f).is_one()) return false;
  }
  return true;
}

bool is_irreducible_over_prime(std::uint64_t p, const std::vector<std::uint32_t>& coeffs) {
  FieldPtr fp = Field::prime(p);
  std::vector<Elem> c(coeffs.begin(), coeffs.end());
  return is_irreducible(Polynomial(fp, std::move(c)));
}

PrimitivityResult is_primitive_poly(const Polynomial& input) {
  require_primitivity_input(input);
  const Polynomial f = input.monic();
  const std::uint64_t order = group_order_of(f);
  Factorization fac = factor_cache().get(order);
  std::vector<Polynomial> witnesses;
  if (!x_has_full_order(f, fac, order, &witnesses) || !is_irreducible(f)) return {};
  return {true, PrimitivityCertificate{f, order, std::move(fac), std::move(witnesses)}};
}

bool is_primitive(const Polynomial& input) {
  require_primitivity_input(input);
  const Polynomial f = input.monic();
  const std::uint64_t order = group_order_of(f);
  const Factorization fac = factor_cache().get(order);
  return x_has_full_order(f, fac, order, nullptr) && is_irreducible(f);
}

bool verify_certificate(const PrimitivityCertificate& cert) {
  const Polynomial& f = cert.poly;
  if (f.degree() < Degree(1) || !f.is_monic() || f.coeff(0) == 0) return false;
  std::uint64_t order = 0;
  if (!checked_pow(f.field()->order(), static_cast<unsigned>(f.size_degree()), order)) return false;
  order -= 1;
  if (cert.group_order != order || cert.factorization.n != BigInt(order)) return false;
  if (cert.factorization.product() != BigInt(order)) return false;
  if (cert.witnesses.size() != cert.factorization.factors.size()) return false;
  const Polynomial x = Polynomial::x(f.field());
  if (!poly_modpow(x, order, f).is_one()) return false;
  for (std::size_t i = 0; i < cert.witnesses.size(); ++i) {
    const std::uint64_t l = cert.factorization.factors[i].prime;
    if (!is_prime(l)) return false;
    if (cert.witnesses[i].is_one()) return false;
    if (!(poly_modpow(x, order / l, f) == cert.witnesses[i])) return false;
  }
  return is_irreducible(f);
}

std::vector<Elem> digits(std::uint64_t index, std::uint64_t q, std::size_t len) {
  std::vector<Elem> out(len);
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = index % q;
    index /= q;
  }
  return out;
}

std::vector<Elem> digits_be(std::uint64_t index, std::uint64_t q, std::size_t len) {
  std::vector<Elem> out = digits(index, q, len);
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> least_primitive_polynomial(std::uint64_t p, unsigned k) {
  FieldPtr fp = Field::prime(p);
  const std::uint64_t count = pow_or_throw(p, k, "candidate count");
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    if (idx % p == 0) continue;
    std::vector<Elem> c = digits(idx, p, k);
    c.push_back(1);
    if (is_primitive(Polynomial(fp, c))) return {c.begin(), c.end()};
  }
  fail(ErrorKind::ExistenceViolation, "no primitive polynomial found");
}

std::uint64_t multiplicative_order(const Field& field, Elem x) {
  if (x == 0) fail(ErrorKind::ZeroElement, "zero has no multiplicative order");
  const std::uint64_t n = field.order() - 1;
  std::uint64_t order = n;
  for (const auto& pp : factor_cache().get(n).factors) {
    for (unsigned i = 0; i < pp.exponent; ++i) {
      if (field.pow(x, order / pp.prime) != 1) break;
      order /= pp.prime;
    }
  }
  return order;
}

bool is_primitive_element(const Field& field, Elem x) {
  if (x == 0) fail(ErrorKind::ZeroElement, "zero is never primitive");
  const std::uint64_t n = field.order() - 1;
  for (const auto& pp : factor_cache().get(n).factors) {
    if (field.pow(x, n / pp.prime) == 1) return false;
  }
  return true;
}

bool is_primitive_element(const FieldElement& x) { return is_primitive_element(*x.field(), x.value()); }

std::vector<Elem> primitive_elements(const Field& field) {
  std::vector<Elem> out;
  for (Elem x = 1; x < field.order(); ++x) {
    if (is_primitive_element(field, x)) out.push_back(x);
  }
  return out;
}

namespace {

FieldPtr base_field_for(const FieldPtr& field, std::uint64_t base_order) {
  relative_degree(*field, base_order);
  if (base_order == field->order()) return field;
  if (base_order == field->characteristic()) return Field::prime(base_order);
  fail(ErrorKind::BaseNotSubfield, "only the prime subfield or the field itself is supported as base");
}

}  // namespace

Polynomial minimal_polynomial(const FieldElement& x, std::uint64_t base_order) {
  FieldPtr base = base_field_for(x.field(), base_order);
  const FieldPtr& fp = x.field();
  Polynomial acc = Polynomial::constant(fp, 1);
  FieldElement y = x;
  do {
    acc = acc * Polynomial(fp, {fp->neg(y.value()), 1});
    y = frobenius(y, base_order, 1);
  } while (!(y == x));
  return acc.retyped(base);
}

Polynomial conjugate_product(const Polynomial& f, std::uint64_t base_order) {
  const FieldPtr& fp = f.field();
  FieldPtr base = base_field_for(fp, base_order);
  const unsigned m = relative_degree(*fp, base_order);
  Polynomial acc = Polynomial::constant(fp, 1);
  std::vector<Elem> c = f.coeffs();
  for (unsigned i = 0; i < m; ++i) {
    acc = acc * Polynomial(fp, c);
    for (Elem& e : c) e = fp->pow(e, base_order);
  }
  return acc.retyped(base);
}

}  // namespace tsrforge
