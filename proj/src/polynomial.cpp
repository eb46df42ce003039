#include "tsrforge/polynomial.hpp"

#include <cctype>
#include <charconv>

namespace tsrforge {

Polynomial::Polynomial(FieldPtr field) : field_(std::move(field)) {}

Polynomial::Polynomial(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (Elem c : coeffs_) {
    if (!field_->contains(c)) fail(ErrorKind::DimensionMismatch, "coefficient outside the field");
  }
  trim();
}

Polynomial Polynomial::x(FieldPtr field) { return monomial(std::move(field), 1, 1); }

Polynomial Polynomial::constant(FieldPtr field, Elem c) { return Polynomial(std::move(field), {c}); }

Polynomial Polynomial::monomial(FieldPtr field, Elem c, std::size_t degree) {
  std::vector<Elem> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return Polynomial(std::move(field), std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_field(field_, o.field_);
  std::vector<Elem> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->add(coeff(i), o.coeff(i));
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_field(field_, o.field_);
  std::vector<Elem> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->sub(coeff(i), o.coeff(i));
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<Elem> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->neg(coeffs_[i]);
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_field(field_, o.field_);
  if (is_zero() || o.is_zero()) return Polynomial(field_);
  const Field& f = *field_;
  std::vector<Elem> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(coeffs_[i], o.coeffs_[j]));
    }
  }
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::scaled(Elem c) const {
  std::vector<Elem> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->mul(coeffs_[i], c);
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  std::vector<Elem> out(k, 0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(field_->inv(leading()));
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial result = constant(field_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Elem Polynomial::eval(Elem x) const {
  Elem acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), coeffs_[i]);
  return acc;
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  require_same_field(field_, inner.field_);
  Polynomial acc(field_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * inner + constant(field_, coeffs_[i]);
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial(field_);
  std::vector<Elem> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = field_->mul(coeffs_[i], field_->from_int(static_cast<std::int64_t>(i % field_->characteristic())));
  }
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::retyped(FieldPtr target) const {
  for (Elem c : coeffs_) {
    if (!target->contains(c)) fail(ErrorKind::CoefficientNotDescended, "coefficient does not fit the target field");
  }
  return Polynomial(std::move(target), coeffs_);
}

bool Polynomial::operator==(const Polynomial& o) const {
  return coeffs_ == o.coeffs_ && same_field(*field_, *o.field_);
}

std::pair<Polynomial, Polynomial> poly_divrem(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) fail(ErrorKind::DivisionByZeroPoly, "division by the zero polynomial");
  const Field& f = *a.field();
  if (a.degree() < b.degree()) return {Polynomial(a.field()), a};
  std::vector<Elem> rem = a.coeffs();
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  const Elem lead_inv = f.inv(d.back());
  std::vector<Elem> quot(rem.size() - db, 0);
  for (std::size_t i = rem.size(); i-- > db;) {
    const Elem c = rem[i];
    if (c == 0) continue;
    const Elem qc = f.mul(c, lead_inv);
    quot[i - db] = qc;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = f.sub(rem[i - db + j], f.mul(qc, d[j]));
  }
  rem.resize(db);
  return {Polynomial(a.field(), std::move(quot)), Polynomial(a.field(), std::move(rem))};
}

Polynomial poly_mod(const Polynomial& a, const Polynomial& b) { return poly_divrem(a, b).second; }

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial poly_mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& modulus) {
  return poly_mod(a * b, modulus);
}

Polynomial poly_modpow(const Polynomial& base, std::uint64_t e, const Polynomial& modulus) {
  if (modulus.degree() < Degree(1)) fail(ErrorKind::BadDegree, "modpow needs a modulus of degree >= 1");
  Polynomial result = Polynomial::constant(base.field(), 1);
  Polynomial b = poly_mod(base, modulus);
  while (e) {
    if (e & 1) result = poly_mulmod(result, b, modulus);
    e >>= 1;
    if (e) b = poly_mulmod(b, b, modulus);
  }
  return result;
}

namespace {

bool multi_term(const std::string& s) { return s.find('+') != std::string::npos; }

std::string term_text(const Field& f, Elem c, std::size_t d) {
  std::string xs = d == 1 ? "x" : "x^" + std::to_string(d);
  if (d == 0) {
    std::string cs = format_element(f, c);
    return multi_term(cs) ? "(" + cs + ")" : cs;
  }
  if (c == 1) return xs;
  std::string cs = format_element(f, c);
  return multi_term(cs) ? "(" + cs + ")" + xs : cs + xs;
}

class Parser {
 public:
  Parser(const FieldPtr& field, std::string_view text) : field_(field), text_(text) {}

  Polynomial parse_all() {
    Polynomial p = sum();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::ParseError, what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::uint64_t number() {
    skip_ws();
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc()) error("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }

  std::uint64_t optional_exponent() {
    if (peek() == '^') {
      ++pos_;
      return number();
    }
    return 1;
  }

  Polynomial sum() {
    Polynomial acc(field_);
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = text_[pos_++] == '-';
    acc = negate ? -term() : term();
    while (true) {
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
    return acc;
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'a' || c == 'x' || c == 'X' || c == '(';
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor(c)) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t v = number();
      return Polynomial::constant(field_, field_->from_int(static_cast<std::int64_t>(v % field_->characteristic())));
    }
    if (c == 'a') {
      if (field_->is_prime_field()) error("symbol 'a' used over a prime field");
      ++pos_;
      return Polynomial::constant(field_, field_->pow(field_->generator(), optional_exponent()));
    }
    if (c == 'x' || c == 'X') {
      ++pos_;
      return Polynomial::monomial(field_, 1, optional_exponent());
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = sum();
      if (peek() != ')') error("expected ')'");
      ++pos_;
      return inner.pow(optional_exponent());
    }
    error("expected a term");
  }

  const FieldPtr& field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += term_text(*p.field(), c[i], i);
  }
  return out;
}

Polynomial parse_polynomial(const FieldPtr& field, std::string_view text) { return Parser(field, text).parse_all(); }

Elem parse_element(const Field& field, std::string_view text) {
  // Reuse the polynomial grammar over a non-owning alias of the field.
  FieldPtr alias(std::shared_ptr<const Field>(), &field);
  Polynomial p = parse_polynomial(alias, text);
  if (p.degree() > Degree(0)) fail(ErrorKind::ParseError, "element text mentions x: " + std::string(text));
  return p.coeff(0);
}

}  // namespace tsrforge
