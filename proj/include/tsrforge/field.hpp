#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tsrforge/error.hpp"

namespace tsrforge {

/// A field element in packed form: sum of coeff[i] * p^i over the power basis
/// of the modulus root (little-endian digits). Prime-field elements are residues.
using Elem = std::uint64_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

enum class ModulusSource { None, Conway, LeastPrimitive, User };

/// Finite field F_p or F_{p^k}. Immutable after construction and safe to share
/// across threads.
class Field {
 public:
  /// F_p. Throws CompositeCharacteristic when p is not prime.
  static FieldPtr prime(std::uint64_t p);
  /// F_{p^k} from the built-in Conway table, else the least primitive monic polynomial.
  static FieldPtr extension(std::uint64_t p, unsigned k);
  /// F_{p^k} with a caller-supplied monic modulus (little-endian, length k + 1).
  static FieldPtr extension(std::uint64_t p, unsigned k, std::span<const std::uint32_t> modulus);

  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  std::uint64_t order() const noexcept { return order_; }
  bool is_prime_field() const noexcept { return k_ == 1; }
  /// Little-endian monic modulus; empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  ModulusSource modulus_source() const noexcept { return source_; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  /// The symbol `a`: the class of X modulo the modulus. Only meaningful when k > 1.
  Elem generator() const noexcept { return k_ == 1 ? 1 : p_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  /// Throws DivisionByZero for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const;
  Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Elem a) const;
  bool in_prime_subfield(Elem a) const noexcept { return a < p_; }
  bool contains(Elem a) const noexcept { return a < order_; }

  bool operator==(const Field& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

 private:
  enum class Mode { Prime, Table, Binary, Generic };

  Field(std::uint64_t p, unsigned k, std::vector<std::uint32_t> modulus, ModulusSource source);

  Elem mul_generic(Elem a, Elem b) const;
  Elem mul_binary(Elem a, Elem b) const;
  Elem add_digits(Elem a, Elem b, bool subtract) const;
  void build_tables();

  std::uint64_t p_;
  unsigned k_;
  std::uint64_t order_;
  std::vector<std::uint32_t> modulus_;
  ModulusSource source_;
  Mode mode_ = Mode::Prime;
  std::uint64_t binary_modulus_ = 0;
  std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, length 2(order-1)
  std::vector<std::uint32_t> log_;  // log_[x] for x != 0
};

bool same_field(const Field& a, const Field& b);
void require_same_field(const FieldPtr& a, const FieldPtr& b);

/// Value-semantics wrapper pairing an element with its field.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value);

  const FieldPtr& field() const noexcept { return field_; }
  Elem value() const noexcept { return value_; }
  std::vector<std::uint32_t> coeffs() const { return field_->coeffs(value_); }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }
  FieldElement inverse() const { return {field_, field_->inv(value_)}; }

  bool operator==(const FieldElement& o) const {
    return value_ == o.value_ && same_field(*field_, *o.field_);
  }

 private:
  FieldPtr field_;
  Elem value_;
};

/// x^(base_order^i). base_order must be a power p^d of the characteristic with d | k,
/// otherwise BaseNotSubfield.
FieldElement frobenius(const FieldElement& x, std::uint64_t base_order, std::uint64_t i);

/// Number of Frobenius steps (over F_base_order) needed to return to the start:
/// extension degree of the field over its subfield of that order.
unsigned relative_degree(const Field& field, std::uint64_t base_order);

/// Canonical text for an element: powers of `a` descending, e.g. "2a^2+a+1".
std::string format_element(const Field& field, Elem a);

}  // namespace tsrforge
