#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tsrforge/field.hpp"

namespace tsrforge {

/// Polynomial degree with a negative-infinity sentinel for the zero polynomial,
/// so that deg(ab) = deg(a) + deg(b) holds without special cases.
class Degree {
 public:
  constexpr Degree(int value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  static constexpr Degree neg_inf() { return Degree(kNegInf); }

  constexpr bool is_neg_inf() const { return value_ == kNegInf; }
  constexpr int value() const { return value_; }

  constexpr Degree operator+(Degree o) const {
    return is_neg_inf() || o.is_neg_inf() ? neg_inf() : Degree(value_ + o.value_);
  }
  constexpr auto operator<=>(const Degree&) const = default;
  constexpr bool operator==(const Degree&) const = default;

 private:
  static constexpr int kNegInf = std::numeric_limits<int>::min();
  int value_;
};

/// Dense univariate polynomial; coeffs()[i] is the coefficient of X^i, no trailing zeros.
class Polynomial {
 public:
  explicit Polynomial(FieldPtr field);
  Polynomial(FieldPtr field, std::vector<Elem> coeffs);

  static Polynomial x(FieldPtr field);
  static Polynomial constant(FieldPtr field, Elem c);
  static Polynomial monomial(FieldPtr field, Elem c, std::size_t degree);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  Degree degree() const noexcept {
    return coeffs_.empty() ? Degree::neg_inf() : Degree(static_cast<int>(coeffs_.size()) - 1);
  }
  /// Degree as an index; 0 for the zero polynomial.
  std::size_t size_degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Elem leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(Elem c) const;
  /// Multiply by X^k.
  Polynomial shifted(std::size_t k) const;
  Polynomial monic() const;
  Polynomial pow(std::uint64_t e) const;
  Elem eval(Elem x) const;
  /// this(inner(X)).
  Polynomial compose(const Polynomial& inner) const;
  Polynomial derivative() const;
  /// Same coefficients, reinterpreted over another field (each must be representable).
  Polynomial retyped(FieldPtr target) const;

  bool operator==(const Polynomial& o) const;

 private:
  void trim();

  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

/// (quot, rem) with a = quot*b + rem and deg rem < deg b. Throws DivisionByZeroPoly.
std::pair<Polynomial, Polynomial> poly_divrem(const Polynomial& a, const Polynomial& b);
Polynomial poly_mod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero when both are zero).
Polynomial poly_gcd(Polynomial a, Polynomial b);
Polynomial poly_mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& modulus);
/// base^e mod modulus by square-and-multiply.
Polynomial poly_modpow(const Polynomial& base, std::uint64_t e, const Polynomial& modulus);

/// Canonical text: decreasing degree, `x^k`, extension coefficients in the symbol `a`,
/// multi-term coefficients parenthesised, e.g. "x^3 + x^2 + (a+1)".
std::string to_string(const Polynomial& p);
/// Parses the canonical text as well as the looser table style "x^3 + x + 2a+1".
Polynomial parse_polynomial(const FieldPtr& field, std::string_view text);
/// Parses a field element written in `a` (e.g. "2a^2+1"); integers for prime fields.
Elem parse_element(const Field& field, std::string_view text);

}  // namespace tsrforge
