#include "tsrforge/tsr.hpp"

#include "tsrforge/order.hpp"
#include "tsrforge/primitivity.hpp"

namespace tsrforge {

TsrSpec TsrSpec::make(FieldPtr field, unsigned m, unsigned n, std::vector<Elem> c, Matrix B) {
  if (!field->is_prime_field()) fail(ErrorKind::BadModulus, "TSR base field must be a prime field");
  if (m == 0 || n == 0) fail(ErrorKind::DimensionMismatch, "m and n must be positive");
  if (c.size() != n - 1) fail(ErrorKind::DimensionMismatch, "expected n - 1 coefficients c_1..c_{n-1}");
  for (Elem e : c) {
    if (!field->contains(e)) fail(ErrorKind::DimensionMismatch, "coefficient outside F_q");
  }
  if (B.rows() != m || B.cols() != m) fail(ErrorKind::DimensionMismatch, "B must be m x m");
  require_same_field(field, B.field());
  if (!is_invertible(B)) fail(ErrorKind::SingularB, "B is not invertible");
  return TsrSpec{std::move(field), m, n, std::move(c), std::move(B)};
}

TsrSpec normalize_general_form(FieldPtr field, unsigned m, unsigned n, const std::vector<Elem>& c, const Matrix& A) {
  if (c.size() != n) fail(ErrorKind::DimensionMismatch, "expected n coefficients c_0..c_{n-1}");
  if (c.empty() || c[0] == 0) fail(ErrorKind::ZeroConstantTerm, "c_0 = 0 gives a singular TSR");
  const Elem inv = field->inv(c[0]);
  std::vector<Elem> normalized;
  for (unsigned i = 1; i < n; ++i) normalized.push_back(field->mul(c[i], inv));
  return TsrSpec::make(field, m, n, std::move(normalized), A.scaled(c[0]));
}

std::vector<Elem> TsrState::flatten() const {
  std::vector<Elem> out;
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

TsrState TsrState::from_flat(const std::vector<Elem>& flat, unsigned m, unsigned n) {
  if (flat.size() != static_cast<std::size_t>(m) * n) fail(ErrorKind::DimensionMismatch, "state length != mn");
  TsrState s;
  for (unsigned i = 0; i < n; ++i) s.blocks.emplace_back(flat.begin() + i * m, flat.begin() + (i + 1) * m);
  return s;
}

Matrix build_transition_matrix(const TsrSpec& spec) {
  if (!is_invertible(spec.B)) fail(ErrorKind::SingularB, "B is not invertible");
  const Field& f = *spec.field;
  const unsigned m = spec.m, n = spec.n, d = m * n;
  Matrix t(spec.field, d, d);
  for (unsigned i = 1; i < n; ++i) {
    for (unsigned r = 0; r < m; ++r) t.at(i * m + r, (i - 1) * m + r) = 1;
  }
  for (unsigned i = 0; i < n; ++i) {
    const Elem ci = i == 0 ? 1 : spec.c[i - 1];
    for (unsigned r = 0; r < m; ++r) {
      for (unsigned col = 0; col < m; ++col) t.at(i * m + r, (n - 1) * m + col) = f.mul(ci, spec.B.at(r, col));
    }
  }
  return t;
}

TsrState tsr_step(const TsrSpec& spec, const TsrState& state) {
  if (state.blocks.size() != spec.n) fail(ErrorKind::DimensionMismatch, "state must hold n blocks");
  for (const auto& b : state.blocks) {
    if (b.size() != spec.m) fail(ErrorKind::DimensionMismatch, "state blocks must have width m");
  }
  const Field& f = *spec.field;
  std::vector<Elem> acc(spec.m, 0);
  for (unsigned j = 0; j < spec.n; ++j) {
    const Elem cj = j == 0 ? 1 : spec.c[j - 1];
    if (cj == 0) continue;
    const auto img = spec.B.left_multiply(state.blocks[j]);
    for (unsigned r = 0; r < spec.m; ++r) acc[r] = f.add(acc[r], f.mul(cj, img[r]));
  }
  TsrState next;
  next.blocks.assign(state.blocks.begin() + 1, state.blocks.end());
  next.blocks.push_back(std::move(acc));
  next.step_index = state.step_index + 1;
  return next;
}

Polynomial feedback_polynomial(const TsrSpec& spec) {
  std::vector<Elem> g{1};
  g.insert(g.end(), spec.c.begin(), spec.c.end());
  return Polynomial(spec.field, std::move(g));
}

Polynomial recompose(const Decomposition& d, unsigned m, unsigned n) {
  const FieldPtr& fp = d.g.field();
  Polynomial acc(fp);
  Polynomial gpow = Polynomial::constant(fp, 1);  // g^(m-k), built from k = m downward
  for (unsigned k = m + 1; k-- > 0;) {
    const Elem hk = d.h.coeff(k);
    if (hk != 0) acc = acc + (gpow.shifted(static_cast<std::size_t>(n) * k)).scaled(hk);
    gpow = gpow * d.g;
  }
  return acc;
}

Polynomial tsr_charpoly_formula(const TsrSpec& spec) {
  return recompose({feedback_polynomial(spec), matrix_charpoly(spec.B)}, spec.m, spec.n);
}

Polynomial tsr_charpoly_direct(const TsrSpec& spec) { return matrix_charpoly(build_transition_matrix(spec)); }

bool is_primitive_tsr(const TsrSpec& spec) { return is_primitive(tsr_charpoly_formula(spec)); }

namespace {

template <class T, class Mul>
T pow_big(T base, BigInt e, T one, Mul mul) {
  T result = std::move(one);
  while (e > 0) {
    if ((e & 1) != 0) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

}  // namespace

std::uint64_t tsr_period(const TsrSpec& spec, const Limits& limits) {
  const std::uint64_t q = spec.q();
  const unsigned d = spec.m * spec.n;
  std::uint64_t size = 0;
  if (!checked_pow(q, d, size)) fail(ErrorKind::ScaleExceeded, "q^{mn} overflows 64 bits");
  require_within(size, limits.field_order, "q^{mn} for the period");

  ExponentBound bound;
  std::uint64_t qd = 1;
  for (unsigned i = 1; i <= d; ++i) {
    qd *= q;
    bound.lcm_with(factor_cache().get(qd - 1));
  }
  const Polynomial chi = tsr_charpoly_formula(spec);
  const bool squarefree = poly_gcd(chi, chi.derivative()).is_one();
  BigInt order;
  if (squarefree) {
    const Polynomial x = poly_mod(Polynomial::x(spec.field), chi);
    auto mulmod = [&](const Polynomial& a, const Polynomial& b) { return poly_mulmod(a, b, chi); };
    order = element_order(
        x, bound, [&](const Polynomial& b, const BigInt& e) { return pow_big(b, e, Polynomial::constant(spec.field, 1), mulmod); },
        [](const Polynomial& y) { return y.is_one(); });
  } else {
    unsigned e = 0;
    for (std::uint64_t pe = 1; pe < d; pe *= q) ++e;
    if (e > 0) bound.lcm_with_prime_power(q, e);
    const Matrix t = build_transition_matrix(spec);
    const Matrix id = Matrix::identity(spec.field, d);
    auto mul = [](const Matrix& a, const Matrix& b) { return a * b; };
    order = element_order(
        t, bound, [&](const Matrix& b, const BigInt& ex) { return pow_big(b, ex, id, mul); },
        [&](const Matrix& y) { return y == id; });
  }
  return static_cast<std::uint64_t>(order);
}

namespace {

std::optional<Polynomial> solve_h(const Polynomial& f, const Polynomial& g, unsigned m, unsigned n) {
  const FieldPtr& fp = f.field();
  const Field& F = *fp;
  const std::size_t dg = g.size_degree();
  // gp[j] = g^j
  std::vector<Polynomial> gp{Polynomial::constant(fp, 1)};
  for (unsigned j = 1; j <= m; ++j) gp.push_back(gp.back() * g);
  Polynomial residual = f;
  std::vector<Elem> h(m + 1, 0);
  for (unsigned k = m + 1; k-- > 0;) {
    const std::size_t top = static_cast<std::size_t>(n) * k + (m - k) * dg;
    const Elem lead = gp[m - k].leading();
    const Elem hk = F.div(residual.coeff(top), lead);
    if (k == m && hk != 1) return std::nullopt;
    h[k] = hk;
    if (hk != 0) residual = residual - gp[m - k].shifted(static_cast<std::size_t>(n) * k).scaled(hk);
    if (!residual.is_zero() && residual.size_degree() >= top) return std::nullopt;
  }
  if (!residual.is_zero() || h[0] == 0) return std::nullopt;
  return Polynomial(fp, std::move(h));
}

void require_decomposable_input(const Polynomial& f, unsigned m, unsigned n) {
  if (f.degree() != Degree(static_cast<int>(m * n))) {
    fail(ErrorKind::BadDegree, "deg f must equal m*n = " + std::to_string(m * n));
  }
  if (f.coeff(0) == 0) fail(ErrorKind::ZeroConstantTerm, "f(0) = 0");
}

template <class Visit>
void scan_decompositions(const Polynomial& input, unsigned m, unsigned n, Visit visit) {
  require_decomposable_input(input, m, n);
  const Polynomial f = input.monic();
  const FieldPtr& fp = f.field();
  const std::uint64_t q = fp->order();
  const std::uint64_t count = pow_or_throw(q, n - 1, "decomposition candidates");
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<Elem> gc{1};
    const auto rest = digits(idx, q, n - 1);
    gc.insert(gc.end(), rest.begin(), rest.end());
    Polynomial g(fp, std::move(gc));
    if (auto h = solve_h(f, g, m, n)) {
      if (!visit(Decomposition{std::move(g), std::move(*h)})) return;
    }
  }
}

}  // namespace

std::optional<Decomposition> mn_decompose(const Polynomial& f, unsigned m, unsigned n) {
  std::optional<Decomposition> out;
  scan_decompositions(f, m, n, [&](Decomposition d) {
    out = std::move(d);
    return false;
  });
  return out;
}

std::vector<Decomposition> mn_decompose_all(const Polynomial& f, unsigned m, unsigned n) {
  std::vector<Decomposition> out;
  scan_decompositions(f, m, n, [&](Decomposition d) {
    out.push_back(std::move(d));
    return true;
  });
  return out;
}

}  // namespace tsrforge
