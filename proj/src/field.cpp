#include "tsrforge/field.hpp"

#include <array>
#include <bit>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "tsrforge/conway.hpp"
#include "tsrforge/factor.hpp"
#include "tsrforge/limits.hpp"
#include "tsrforge/primitivity.hpp"

namespace tsrforge {
namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 32;
constexpr std::uint64_t kTableOrder = std::uint64_t{1} << 16;

}  // namespace

bool checked_pow(std::uint64_t base, unsigned exp, std::uint64_t& out) {
  unsigned __int128 r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    r *= base;
    if (r > std::numeric_limits<std::uint64_t>::max()) return false;
  }
  out = static_cast<std::uint64_t>(r);
  return true;
}

std::uint64_t pow_or_throw(std::uint64_t base, unsigned exp, const std::string& what) {
  std::uint64_t out = 0;
  if (!checked_pow(base, exp, out)) {
    fail(ErrorKind::ScaleExceeded, what + ": " + std::to_string(base) + "^" + std::to_string(exp) +
                                       " does not fit in 64 bits");
  }
  return out;
}

Field::Field(std::uint64_t p, unsigned k, std::vector<std::uint32_t> modulus, ModulusSource source)
    : p_(p), k_(k), order_(pow_or_throw(p, k, "field order")), modulus_(std::move(modulus)), source_(source) {
  if (order_ > kMaxOrder) {
    fail(ErrorKind::ScaleExceeded, "field order " + std::to_string(order_) + " exceeds 2^32");
  }
  if (k_ == 1) {
    mode_ = Mode::Prime;
    return;
  }
  if (p_ == 2) {
    for (unsigned i = 0; i <= k_; ++i) binary_modulus_ |= std::uint64_t{modulus_[i]} << i;
    mode_ = Mode::Binary;
  } else {
    mode_ = Mode::Generic;
  }
  if (order_ <= kTableOrder) build_tables();
}

FieldPtr Field::prime(std::uint64_t p) {
  if (p < 2 || !is_prime(p)) {
    fail(ErrorKind::CompositeCharacteristic, std::to_string(p) + " is not prime");
  }
  if (p >= kMaxOrder) fail(ErrorKind::ScaleExceeded, "characteristic must be below 2^32");
  return FieldPtr(new Field(p, 1, {}, ModulusSource::None));
}

FieldPtr Field::extension(std::uint64_t p, unsigned k) {
  if (k == 0) fail(ErrorKind::BadModulus, "extension degree must be positive");
  if (p < 2 || !is_prime(p)) {
    fail(ErrorKind::CompositeCharacteristic, std::to_string(p) + " is not prime");
  }
  if (k == 1) return prime(p);
  std::uint64_t order = 0;
  if (!checked_pow(p, k, order) || order > kMaxOrder) {
    fail(ErrorKind::ScaleExceeded, "field order " + std::to_string(p) + "^" + std::to_string(k) + " exceeds 2^32");
  }
  if (auto conway = conway_polynomial(p, k)) {
    return FieldPtr(new Field(p, k, std::move(*conway), ModulusSource::Conway));
  }
  return FieldPtr(new Field(p, k, least_primitive_polynomial(p, k), ModulusSource::LeastPrimitive));
}

FieldPtr Field::extension(std::uint64_t p, unsigned k, std::span<const std::uint32_t> modulus) {
  if (p < 2 || !is_prime(p)) {
    fail(ErrorKind::CompositeCharacteristic, std::to_string(p) + " is not prime");
  }
  if (k == 0 || modulus.size() != k + 1 || modulus.back() != 1) {
    fail(ErrorKind::BadModulus, "modulus must be monic of degree " + std::to_string(k));
  }
  for (auto c : modulus) {
    if (c >= p) fail(ErrorKind::BadModulus, "modulus coefficient out of range");
  }
  if (k == 1) return prime(p);
  std::vector<std::uint32_t> mod(modulus.begin(), modulus.end());
  if (!is_irreducible_over_prime(p, mod)) {
    fail(ErrorKind::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
  }
  return FieldPtr(new Field(p, k, std::move(mod), ModulusSource::User));
}

void Field::build_tables() {
  const std::uint64_t units = order_ - 1;
  exp_.assign(2 * units, 0);
  log_.assign(order_, 0);
  const Mode saved = mode_;
  for (Elem g = (k_ > 1 ? p_ : 2); g < order_; ++g) {
    Elem x = 1;
    std::uint64_t i = 0;
    bool closed_early = false;
    for (; i < units; ++i) {
      if (i > 0 && x == 1) {
        closed_early = true;
        break;
      }
      exp_[i] = static_cast<std::uint32_t>(x);
      x = saved == Mode::Binary ? mul_binary(x, g) : mul_generic(x, g);
    }
    if (!closed_early && x == 1) break;
  }
  for (std::uint64_t i = 0; i < units; ++i) {
    exp_[units + i] = exp_[i];
    log_[exp_[i]] = static_cast<std::uint32_t>(i);
  }
  mode_ = Mode::Table;
}

Elem Field::add_digits(Elem a, Elem b, bool subtract) const {
  Elem out = 0;
  Elem place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    const std::uint64_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    const std::uint64_t d = subtract ? (da + p_ - db) % p_ : (da + db) % p_;
    out += d * place;
    place *= p_;
  }
  return out;
}

Elem Field::add(Elem a, Elem b) const {
  if (k_ == 1) {
    const Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  return add_digits(a, b, false);
}

Elem Field::sub(Elem a, Elem b) const {
  if (k_ == 1) return a >= b ? a - b : a + p_ - b;
  if (p_ == 2) return a ^ b;
  return add_digits(a, b, true);
}

Elem Field::neg(Elem a) const { return sub(0, a); }

Elem Field::mul_binary(Elem a, Elem b) const {
  std::uint64_t r = 0;
  while (b) {
    r ^= a << std::countr_zero(b);
    b &= b - 1;
  }
  for (int bit = 2 * static_cast<int>(k_) - 2; bit >= static_cast<int>(k_); --bit) {
    if ((r >> bit) & 1) r ^= binary_modulus_ << (bit - static_cast<int>(k_));
  }
  return r;
}

Elem Field::mul_generic(Elem a, Elem b) const {
  std::array<std::uint64_t, 32> da{}, db{};
  std::array<std::uint64_t, 64> prod{};
  for (unsigned i = 0; i < k_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  for (unsigned i = 0; i < k_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  for (int deg = 2 * static_cast<int>(k_) - 2; deg >= static_cast<int>(k_); --deg) {
    const std::uint64_t c = prod[deg];
    if (c == 0) continue;
    // X^k = -(m_0 + ... + m_{k-1} X^{k-1})
    for (unsigned i = 0; i < k_; ++i) {
      const std::uint64_t sub = c * modulus_[i] % p_;
      auto& slot = prod[deg - k_ + i];
      slot = (slot + p_ - sub) % p_;
    }
    prod[deg] = 0;
  }
  Elem out = 0;
  for (int i = static_cast<int>(k_) - 1; i >= 0; --i) out = out * p_ + prod[i];
  return out;
}

Elem Field::mul(Elem a, Elem b) const {
  switch (mode_) {
    case Mode::Prime:
      return a * b % p_;
    case Mode::Table:
      if (a == 0 || b == 0) return 0;
      return exp_[log_[a] + log_[b]];
    case Mode::Binary:
      return mul_binary(a, b);
    case Mode::Generic:
      return mul_generic(a, b);
  }
  return 0;
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (mode_ == Mode::Table && a != 0) {
    const std::uint64_t units = order_ - 1;
    return exp_[static_cast<std::uint64_t>((static_cast<unsigned __int128>(log_[a]) * (e % units)) % units)];
  }
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem Field::inv(Elem a) const {
  if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero");
  switch (mode_) {
    case Mode::Prime: {
      std::int64_t t = 0, new_t = 1;
      std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
      while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
      }
      return static_cast<Elem>(t < 0 ? t + static_cast<std::int64_t>(p_) : t);
    }
    case Mode::Table:
      return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
    default:
      return pow(a, order_ - 2);
  }
}

Elem Field::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

Elem Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > k_) fail(ErrorKind::DimensionMismatch, "too many coefficients for field element");
  Elem out = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) fail(ErrorKind::DimensionMismatch, "coefficient out of range");
    out = out * p_ + coeffs[i];
  }
  return out;
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
  std::vector<std::uint32_t> out(k_);
  for (unsigned i = 0; i < k_; ++i) {
    out[i] = static_cast<std::uint32_t>(a % p_);
    a /= p_;
  }
  return out;
}

bool same_field(const Field& a, const Field& b) { return &a == &b || a == b; }

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!same_field(*a, *b)) fail(ErrorKind::FieldMismatch, "operands live in different fields");
}

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_->contains(value_)) fail(ErrorKind::DimensionMismatch, "element encoding out of range");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->div(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }

unsigned relative_degree(const Field& field, std::uint64_t base_order) {
  std::uint64_t acc = base_order;
  for (unsigned j = 1; j <= field.degree(); ++j) {
    if (acc == field.order()) return j;
    if (acc > field.order() / base_order + 1) break;
    acc *= base_order;
  }
  fail(ErrorKind::BaseNotSubfield, "no power of " + std::to_string(base_order) + " equals field order " +
                                       std::to_string(field.order()));
}

FieldElement frobenius(const FieldElement& x, std::uint64_t base_order, std::uint64_t i) {
  const Field& f = *x.field();
  const unsigned steps = relative_degree(f, base_order);
  Elem v = x.value();
  for (std::uint64_t s = 0; s < i % steps; ++s) v = f.pow(v, base_order);
  return {x.field(), v};
}

std::string format_element(const Field& field, Elem a) {
  if (field.is_prime_field()) return std::to_string(a);
  if (a == 0) return "0";
  const auto c = field.coeffs(a);
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]);
    out += 'a';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

}  // namespace tsrforge
