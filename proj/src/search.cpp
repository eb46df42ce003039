#include "tsrforge/search.hpp"

#include "tsrforge/parallel.hpp"

namespace tsrforge {

Matrix companion_matrix(const Polynomial& h) {
  if (!h.is_monic() || h.degree() < Degree(1)) fail(ErrorKind::BadDegree, "companion needs a monic polynomial of degree >= 1");
  if (h.coeff(0) == 0) fail(ErrorKind::ZeroConstantTerm, "h(0) = 0 gives a singular companion matrix");
  const std::size_t m = h.size_degree();
  Matrix c(h.field(), m, m);
  for (std::size_t i = 1; i < m; ++i) c.at(i, i - 1) = 1;
  for (std::size_t i = 0; i < m; ++i) c.at(i, m - 1) = h.field()->neg(h.coeff(i));
  return c;
}

Polynomial reciprocal(const Polynomial& k) {
  if (k.is_zero() || k.coeff(0) == 0) fail(ErrorKind::ZeroConstantTerm, "reciprocal needs k(0) != 0");
  std::vector<Elem> c(k.coeffs().rbegin(), k.coeffs().rend());
  return Polynomial(k.field(), std::move(c)).monic();
}

std::vector<Polynomial> primitive_polynomials(std::uint64_t q, unsigned m, const Limits& limits) {
  FieldPtr fq = Field::prime(q);
  const std::uint64_t count = pow_or_throw(q, m, "polynomial count");
  require_within(count, limits.field_order, "q^m");
  std::vector<Polynomial> out;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    if (idx % q == 0) continue;
    auto c = digits(idx, q, m);
    c.push_back(1);
    Polynomial f(fq, std::move(c));
    if (is_primitive(f)) out.push_back(std::move(f));
  }
  return out;
}

namespace {

// X^n + g_{n-1} X^{n-1} + ... + g_1 X with (g_{n-1}, ..., g_1) the index-th tuple.
Polynomial shift_polynomial(const FieldPtr& field, unsigned n, std::uint64_t index) {
  const std::uint64_t q = field->order();
  std::vector<Elem> c(n + 1, 0);
  const auto d = digits(index, q, n - 1);
  for (unsigned i = 1; i < n; ++i) c[i] = d[i - 1];
  c[n] = 1;
  return Polynomial(field, std::move(c));
}

void require_search_scale(std::uint64_t q, unsigned m, unsigned n, const Limits& limits) {
  if (m == 0 || n == 0) fail(ErrorKind::DimensionMismatch, "m and n must be positive");
  require_within(pow_or_throw(q, m, "q^m"), limits.field_order, "q^m");
  require_within(pow_or_throw(q, n, "q^n"), limits.field_order, "q^n");
  pow_or_throw(q, m * n, "q^{mn}");
}

[[noreturn]] void internal(const std::string& what) { fail(ErrorKind::ExistenceViolation, "internal check failed: " + what); }

SearchResult build_result(const Polynomial& f, const Polynomial& g, std::uint64_t f_index, std::uint64_t g_index,
                          std::uint64_t tried) {
  const FieldPtr& fq = f.field();
  const std::uint64_t q = fq->order();
  const unsigned m = static_cast<unsigned>(f.size_degree());
  const unsigned n = static_cast<unsigned>(g.size_degree());
  std::vector<std::uint32_t> modulus(f.coeffs().begin(), f.coeffs().end());
  FieldPtr ext = Field::extension(q, m, modulus);
  const Elem alpha = m == 1 ? fq->neg(f.coeff(0)) : ext->generator();
  const Polynomial g_ext = g.retyped(ext);
  const Polynomial k = g_ext - Polynomial::constant(ext, alpha);
  const Polynomial rk = reciprocal(k);
  const Elem lambda = ext->inv(alpha);
  std::vector<Elem> lc(n);
  for (unsigned i = 0; i < n; ++i) lc[i] = g.coeff(n - i);
  Polynomial L(fq, lc);
  Polynomial h = minimal_polynomial(FieldElement(ext, lambda), q).retyped(fq);
  Matrix A = companion_matrix(h);
  std::vector<Elem> c(lc.begin() + 1, lc.end());
  TsrSpec spec = TsrSpec::make(fq, m, n, std::move(c), A);
  Polynomial chi = tsr_charpoly_formula(spec);
  PrimitivityResult prim = is_primitive_poly(chi);
  if (!prim.primitive) internal("TSR characteristic polynomial is not primitive");
  Polynomial conjugates = conjugate_product(rk, q).retyped(fq);
  Polynomial composite = f.compose(g);
  SearchProvenance prov{f,      g,  composite, ext, alpha, k, rk, lambda, std::move(L), std::move(h), std::move(A),
                        conjugates, f_index, g_index};
  return SearchResult{std::move(spec), std::move(chi), std::move(*prim.certificate), std::move(prov), tried};
}

}  // namespace

SearchResult search_primitive_tsr(std::uint64_t q, unsigned m, unsigned n, const SearchOptions& options) {
  FieldPtr fq = Field::prime(q);
  require_search_scale(q, m, n, options.limits);
  if (q >= 3 && n % 2 == 0 && !options.allow_even_n) {
    fail(ErrorKind::InvalidParity, "the search is defined for odd n when q >= 3 (n = " + std::to_string(n) + ")");
  }
  const std::vector<Polynomial> fs = primitive_polynomials(q, m, options.limits);
  const std::uint64_t gcount = pow_or_throw(q, n - 1, "g candidates");
  const std::uint64_t space = fs.size() * gcount;
  const std::uint64_t scan = std::min(space, options.budget);
  auto hit = parallel_find_first<bool>(scan, options.threads, [&](std::uint64_t idx) -> std::optional<bool> {
    const Polynomial g = shift_polynomial(fq, n, idx % gcount);
    if (is_primitive(fs[idx / gcount].compose(g))) return true;
    return std::nullopt;
  });
  if (!hit) {
    const bool exhausted = scan == space;
    throw BudgetExhaustedError(scan, exhausted,
                               exhausted ? "no primitive f(g(X)) in the whole candidate space"
                                         : "budget of " + std::to_string(options.budget) + " candidates exhausted");
  }
  const std::uint64_t idx = hit->first;
  return build_result(fs[idx / gcount], shift_polynomial(fq, n, idx % gcount), idx / gcount, idx % gcount, idx + 1);
}

std::string replay_search(const SearchResult& r) {
  const auto& p = r.provenance;
  const std::uint64_t q = r.spec.q();
  if (!is_primitive(p.f)) return "f is not primitive";
  if (!(p.composite == p.f.compose(p.g))) return "composite != f(g(X))";
  if (!is_primitive(p.composite)) return "f(g(X)) is not primitive";
  const Polynomial f_ext = p.f.retyped(p.ext);
  if (f_ext.eval(p.alpha) != 0) return "alpha is not a root of f";
  if (p.ext->mul(p.alpha, p.lambda) != 1) return "lambda != alpha^{-1}";
  if (!is_primitive_element(*p.ext, p.lambda)) return "lambda is not primitive";
  if (!(p.k == p.g.retyped(p.ext) - Polynomial::constant(p.ext, p.alpha))) return "k != g - alpha";
  Polynomial expected_rk = Polynomial::monomial(p.ext, 1, r.spec.n) - p.L.retyped(p.ext).scaled(p.lambda);
  if (!(p.reciprocal_k == expected_rk)) return "reciprocal of k != X^n - lambda L(X)";
  if (!is_primitive(p.reciprocal_k)) return "reciprocal of k is not primitive";
  if (!(p.h == minimal_polynomial(FieldElement(p.ext, p.lambda), q).retyped(r.spec.field))) return "h != minpoly(lambda)";
  if (!(matrix_charpoly(p.A) == p.h)) return "charpoly(A) != h";
  if (!(r.spec.B == p.A)) return "B != A";
  if (!(feedback_polynomial(r.spec) == p.L)) return "g_T != L";
  const Polynomial direct = tsr_charpoly_direct(r.spec);
  if (!(direct == r.charpoly)) return "determinant char poly != formula char poly";
  if (!(p.reciprocal_conjugates == r.charpoly)) return "conjugate product of the reciprocal != char poly";
  if (!(r.charpoly == reciprocal(p.composite))) return "char poly != reciprocal of f(g(X))";
  if (!verify_certificate(r.certificate)) return "certificate does not verify";
  if (!(r.certificate.poly == r.charpoly)) return "certificate is for another polynomial";
  auto d = mn_decompose(r.charpoly, r.spec.m, r.spec.n);
  if (!d || !(d->h == p.h) || !(d->g == p.L)) return "(m,n) decomposition disagrees with (L, h)";
  return {};
}

namespace {

Elem least_root(const Polynomial& f_ext) {
  const Field& F = *f_ext.field();
  for (Elem x = 0; x < F.order(); ++x) {
    if (f_ext.eval(x) == 0) return x;
  }
  internal("primitive polynomial without a root in F_{q^m}");
}

void cross_from_direct(ConjectureWitness& w, const FieldPtr& fq, const FieldPtr& ext, Elem lambda, const Polynomial& g) {
  const std::uint64_t q = fq->order();
  Polynomial f = minimal_polynomial(FieldElement(ext, ext->neg(lambda)), q).retyped(fq);
  w.f = f;
  w.g = g;
  if (f.size_degree() != w.m) {
    w.cross_note = "minimal polynomial of -lambda has degree " + std::to_string(f.size_degree());
    return;
  }
  if (!is_primitive(f)) {
    w.cross_note = "f = minpoly(-lambda) = " + to_string(f) + " is not primitive";
    return;
  }
  Polynomial comp = f.compose(g);
  if (comp.size_degree() != w.m * w.n || !is_primitive(comp)) {
    w.cross_note = "f(g(X)) = " + to_string(comp) + " is not primitive";
    return;
  }
  w.cross_verified = true;
}

void cross_from_composition(ConjectureWitness& w, const FieldPtr& ext, const Polynomial& f, const Polynomial& g) {
  const Elem alpha = least_root(f.retyped(ext));
  const Elem lambda = ext->neg(alpha);
  Polynomial direct = g.retyped(ext) + Polynomial::constant(ext, lambda);
  w.direct = direct;
  if (!is_primitive_element(*ext, lambda)) {
    w.cross_note = "lambda = -alpha = " + format_element(*ext, lambda) + " is not primitive";
    return;
  }
  if (!is_primitive(direct)) {
    w.cross_note = "g(X) + lambda = " + to_string(direct) + " is not primitive";
    return;
  }
  w.cross_verified = true;
}

}  // namespace

ConjectureWitness verify_conjecture(std::uint64_t q, unsigned m, unsigned n, ConjectureForm form,
                                    const SearchOptions& options) {
  FieldPtr fq = Field::prime(q);
  require_search_scale(q, m, n, options.limits);
  FieldPtr ext = Field::extension(q, m);
  ConjectureWitness w;
  w.q = q;
  w.m = m;
  w.n = n;
  w.form = form;
  const std::uint64_t gcount = pow_or_throw(q, n - 1, "g candidates");

  if (form == ConjectureForm::Direct) {
    const std::vector<Elem> lambdas = primitive_elements(*ext);
    const std::uint64_t space = gcount * lambdas.size();
    const std::uint64_t scan = std::min(space, options.budget);
    auto hit = parallel_find_first<bool>(scan, options.threads, [&](std::uint64_t idx) -> std::optional<bool> {
      Polynomial cand = shift_polynomial(fq, n, idx / lambdas.size()).retyped(ext) +
                        Polynomial::constant(ext, lambdas[idx % lambdas.size()]);
      if (is_primitive(cand)) return true;
      return std::nullopt;
    });
    if (!hit) {
      if (scan < space) throw BudgetExhaustedError(scan, false, "budget exhausted before a direct witness was found");
      w.space_exhausted = true;
      w.candidates_tried = scan;
      return w;
    }
    const std::uint64_t idx = hit->first;
    const Elem lambda = lambdas[idx % lambdas.size()];
    const Polynomial g = shift_polynomial(fq, n, idx / lambdas.size());
    w.found = true;
    w.candidates_tried = idx + 1;
    w.direct = g.retyped(ext) + Polynomial::constant(ext, lambda);
    cross_from_direct(w, fq, ext, lambda, g);
    return w;
  }

  const std::vector<Polynomial> fs = primitive_polynomials(q, m, options.limits);
  const std::uint64_t space = fs.size() * gcount;
  const std::uint64_t scan = std::min(space, options.budget);
  auto hit = parallel_find_first<bool>(scan, options.threads, [&](std::uint64_t idx) -> std::optional<bool> {
    if (is_primitive(fs[idx / gcount].compose(shift_polynomial(fq, n, idx % gcount)))) return true;
    return std::nullopt;
  });
  if (!hit) {
    if (scan < space) throw BudgetExhaustedError(scan, false, "budget exhausted before a composition witness was found");
    w.space_exhausted = true;
    w.candidates_tried = scan;
    return w;
  }
  const std::uint64_t idx = hit->first;
  w.found = true;
  w.candidates_tried = idx + 1;
  w.f = fs[idx / gcount];
  w.g = shift_polynomial(fq, n, idx % gcount);
  cross_from_composition(w, ext, *w.f, *w.g);
  return w;
}

Polynomial find_trace_one_quadratic(unsigned m, const Limits& limits) {
  if (m == 0) fail(ErrorKind::DimensionMismatch, "m must be positive");
  require_within(pow_or_throw(2, 2 * m, "2^{2m}"), limits.field_order, "2^{2m}");
  FieldPtr ext = Field::extension(2, m);
  for (Elem lambda : primitive_elements(*ext)) {
    Polynomial cand(ext, {lambda, lambda, 1});
    if (is_primitive(cand)) return cand;
  }
  fail(ErrorKind::ExistenceViolation, "no primitive X^2 + lambda X + lambda over F_{2^" + std::to_string(m) + "}");
}

}  // namespace tsrforge
