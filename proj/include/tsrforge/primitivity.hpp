#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tsrforge/factor.hpp"
#include "tsrforge/field.hpp"
#include "tsrforge/polynomial.hpp"

namespace tsrforge {

/// Rabin test over the coefficient field of f. Degree-0 and zero polynomials are not irreducible.
bool is_irreducible(const Polynomial& f);
/// Irreducibility of a little-endian monic integer polynomial over F_p.
bool is_irreducible_over_prime(std::uint64_t p, const std::vector<std::uint32_t>& coeffs);

struct PrimitivityCertificate {
  Polynomial poly;
  std::uint64_t group_order;
  Factorization factorization;
  /// X^(group_order / l) mod poly for each prime l, in factorization order.
  std::vector<Polynomial> witnesses;
};

struct PrimitivityResult {
  bool primitive = false;
  std::optional<PrimitivityCertificate> certificate;
};

/// Primitivity of f (made monic) over its coefficient field. Throws ZeroConstantTerm
/// when f(0) = 0, BadDegree for constants, ScaleExceeded when Q^deg - 1 overflows 64 bits.
PrimitivityResult is_primitive_poly(const Polynomial& f);
/// Same verdict without building a certificate.
bool is_primitive(const Polynomial& f);
/// Recomputes every part of a certificate.
bool verify_certificate(const PrimitivityCertificate& cert);

/// Lexicographically least primitive monic polynomial of degree k over F_p
/// (least value of sum c_i p^i).
std::vector<std::uint32_t> least_primitive_polynomial(std::uint64_t p, unsigned k);

/// Multiplicative order of a nonzero element. Throws ZeroElement.
std::uint64_t multiplicative_order(const Field& field, Elem x);
bool is_primitive_element(const Field& field, Elem x);
bool is_primitive_element(const FieldElement& x);
/// Primitive elements of the field in increasing packed order.
std::vector<Elem> primitive_elements(const Field& field);

/// Product of (X - x^(q^i)) over the distinct Frobenius orbit of x, over F_q.
/// The base must be the prime subfield or the field itself, else BaseNotSubfield.
Polynomial minimal_polynomial(const FieldElement& x, std::uint64_t base_order);

/// Product of the coefficient-wise Frobenius images sigma^i(f), i < [F : F_q], over F_q.
Polynomial conjugate_product(const Polynomial& f, std::uint64_t base_order);

/// Polynomial over F_{q} from its packed tuple index: coefficients c_0..c_{len-1}
/// are the base-q digits of index.
std::vector<Elem> digits(std::uint64_t index, std::uint64_t q, std::size_t len);
/// Same digits, most significant first: consecutive indices walk tuples in lexicographic order.
std::vector<Elem> digits_be(std::uint64_t index, std::uint64_t q, std::size_t len);

}  // namespace tsrforge
