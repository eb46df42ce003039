#include "tsrforge/verify.hpp"

#include <random>
#include <sstream>

#include "tsrforge/conway.hpp"
#include "tsrforge/enumeration.hpp"
#include "tsrforge/search.hpp"

namespace tsrforge {

namespace {

using Check = std::function<std::string()>;

std::string mismatch(const std::string& what, const std::string& got, const std::string& want) {
  return what + ": got " + got + ", expected " + want;
}

TsrSpec random_spec(std::mt19937_64& rng, const FieldPtr& fq, unsigned m, unsigned n) {
  const std::uint64_t q = fq->order();
  std::uniform_int_distribution<Elem> digit(0, q - 1);
  for (;;) {
    std::vector<Elem> c(n - 1);
    for (auto& x : c) x = digit(rng);
    Matrix B(fq, m, m);
    for (unsigned i = 0; i < m; ++i)
      for (unsigned j = 0; j < m; ++j) B.at(i, j) = digit(rng);
    if (is_invertible(B)) return TsrSpec::make(fq, m, n, std::move(c), std::move(B));
  }
}

std::string check_field_axioms(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {7, 1}, {2, 4}, {3, 2}, {5, 3}, {2, 13}}) {
    FieldPtr f = Field::extension(p, k);
    std::uniform_int_distribution<Elem> pick(0, f->order() - 1);
    for (int i = 0; i < 200; ++i) {
      const Elem a = pick(rng), b = pick(rng), c = pick(rng);
      if (f->mul(a, f->add(b, c)) != f->add(f->mul(a, b), f->mul(a, c))) return "distributivity in F_" + std::to_string(f->order());
      if (f->mul(a, b) != f->mul(b, a)) return "commutativity in F_" + std::to_string(f->order());
      if (a != 0 && f->mul(a, f->inv(a)) != 1) return "inverse in F_" + std::to_string(f->order());
      if (f->pow(a, f->order()) != a) return "Fermat in F_" + std::to_string(f->order());
    }
  }
  return {};
}

std::string check_conway_primitive() {
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {2, 8}, {3, 4}, {5, 3}, {7, 2}, {13, 2}}) {
    FieldPtr f = Field::extension(p, k);
    std::vector<Elem> c(f->modulus().begin(), f->modulus().end());
    if (!is_primitive(Polynomial(Field::prime(p), std::move(c)))) {
      return "modulus of F_" + std::to_string(f->order()) + " is not primitive";
    }
    if (!is_primitive_element(*f, f->generator())) return "a does not generate F_" + std::to_string(f->order());
  }
  return {};
}

std::string check_closed_forms() {
  if (closed_form_count(CountKind::LfsrPrim, 2, 1, 4) != 2) return "lfsr_prim(2,4) != 2";
  if (closed_form_count(CountKind::LfsrIrr, 2, 1, 3) != 2) return "lfsr_irr(2,3) != 2";
  if (closed_form_count(CountKind::GlOrder, 2, 2, 1) != 6) return "gl_order(2,2) != 6";
  if (closed_form_count(CountKind::SigmaPrim, 2, 2, 2) != 16) return "sigma_prim(2,2,2) != 16";
  for (auto [q, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 6}, {2, 8}, {3, 4}, {5, 3}}) {
    const auto prim = primitive_polynomials(q, n).size();
    if (closed_form_count(CountKind::LfsrPrim, q, 1, n) != prim) {
      return "lfsr_prim(" + std::to_string(q) + "," + std::to_string(n) + ") disagrees with exhaustive count";
    }
  }
  return {};
}

std::string check_matrix_count(const Limits& limits, unsigned threads) {
  for (std::uint64_t q : {2, 3}) {
    const std::uint64_t want = q * q - q;
    for (const auto& p : primitive_polynomials(q, 2)) {
      const auto got = count_matrices_with_charpoly(p, 2, limits, threads);
      if (got != want) return mismatch("matrices with charpoly " + to_string(p), std::to_string(got), std::to_string(want));
    }
  }
  return {};
}

std::string check_charpoly(std::uint64_t seed, bool inject_fault, unsigned per_point) {
  std::mt19937_64 rng(seed);
  for (std::uint64_t q : {2, 3, 5}) {
    FieldPtr fq = Field::prime(q);
    for (unsigned m = 1; m <= 3; ++m) {
      for (unsigned n = 1; n <= 3; ++n) {
        for (unsigned i = 0; i < per_point; ++i) {
          TsrSpec s = random_spec(rng, fq, m, n);
          Polynomial formula = tsr_charpoly_formula(s);
          if (inject_fault) formula = formula + Polynomial::constant(fq, 1);
          if (!(formula == tsr_charpoly_direct(s))) {
            return "formula != determinant at (q,m,n) = (" + std::to_string(q) + "," + std::to_string(m) + "," +
                   std::to_string(n) + ")";
          }
        }
      }
    }
  }
  return {};
}

std::string check_period(std::uint64_t seed, const Limits& limits) {
  std::mt19937_64 rng(seed);
  for (auto [q, m, n] : std::vector<std::tuple<std::uint64_t, unsigned, unsigned>>{{2, 2, 2}, {2, 2, 3}, {3, 2, 2}, {2, 3, 2}, {5, 1, 3}}) {
    FieldPtr fq = Field::prime(q);
    const std::uint64_t full = pow_or_throw(q, m * n, "q^{mn}") - 1;
    int primitive_seen = 0;
    for (int i = 0; i < 60; ++i) {
      TsrSpec s = random_spec(rng, fq, m, n);
      const std::uint64_t period = tsr_period(s, limits);
      const bool prim = is_primitive_tsr(s);
      if (prim && period != full) return "primitive spec with period " + std::to_string(period);
      if (!prim && period >= full) return "non-primitive spec with full period";
      primitive_seen += prim;
    }
    (void)primitive_seen;
  }
  return {};
}

std::string check_tsrp(const std::vector<std::tuple<std::uint64_t, unsigned, unsigned>>& grid, const Limits& limits,
                       unsigned threads) {
  for (auto [q, m, n] : grid) {
    const auto brute = enumerate_tsrp_bruteforce(q, m, n, limits, threads).size();
    const auto pc = enumerate_special_primitives(q, m, n, SpecialForm::Pqmn, limits, threads).size();
    const BigInt theorem = tsrp_count_theorem(q, m, n, pc);
    const std::string at = "(" + std::to_string(q) + "," + std::to_string(m) + "," + std::to_string(n) + ")";
    if (theorem != brute) return mismatch("|TSRP" + at + "|", std::to_string(brute), theorem.str());
    if (n > 1 && BigInt(brute) > tsrp_upper_bound(q, m, n)) return "bound violated at " + at;
  }
  return {};
}

std::string check_cosets(unsigned top, const Limits& limits) {
  for (unsigned m = 1; m <= top; ++m) {
    const CosetPartition cp = cyclotomic_partition(m, limits);
    std::uint64_t total = 0;
    for (auto s : cp.sizes) {
      if (s != 2 * m) return "coset of size " + std::to_string(s) + " for m = " + std::to_string(m);
      total += s;
    }
    if (total != euler_phi(cp.modulus)) return "cosets do not cover the units for m = " + std::to_string(m);
  }
  return {};
}

std::string check_r(unsigned top, const Limits& limits, unsigned threads) {
  for (unsigned m = 2; m <= top; ++m) {
    const TraceOneCount c = count_trace_one_classes(m, limits, threads);
    const std::uint64_t want[] = {0, 0, 1, 1, 1, 2, 3, 6, 7, 16, 25, 57, 68};
    if (c.r != want[m]) return mismatch("r(" + std::to_string(m) + ")", std::to_string(c.r), std::to_string(want[m]));
    if (c.orbit_only != 0) return "trace orbit tripwire fired for m = " + std::to_string(m);
    if (c.r * m > euler_phi((std::uint64_t{1} << m) - 1)) return "r > phi(2^m-1)/m for m = " + std::to_string(m);
  }
  return {};
}

std::string check_element_tally(unsigned top, const Limits& limits, unsigned threads) {
  for (unsigned m = 2; m <= top; ++m) {
    const TraceOneCount c = count_trace_one_classes(m, limits, threads);
    const auto tally = count_trace_one_elements(m, limits);
    if (tally != 2 * c.r * m) return mismatch("trace-one tally for m = " + std::to_string(m), std::to_string(tally), std::to_string(2 * c.r * m));
  }
  return {};
}

std::string check_search(const std::vector<std::tuple<std::uint64_t, unsigned, unsigned>>& grid, unsigned threads) {
  SearchOptions opt;
  opt.threads = threads;
  for (auto [q, m, n] : grid) {
    const SearchResult r = search_primitive_tsr(q, m, n, opt);
    const std::string why = replay_search(r);
    if (!why.empty()) return "search (" + std::to_string(q) + "," + std::to_string(m) + "," + std::to_string(n) + "): " + why;
  }
  return {};
}

std::string check_conjecture(const std::vector<std::tuple<std::uint64_t, unsigned, unsigned>>& grid, unsigned threads) {
  SearchOptions opt;
  opt.threads = threads;
  for (auto [q, m, n] : grid) {
    const auto d = verify_conjecture(q, m, n, ConjectureForm::Direct, opt);
    const auto c = verify_conjecture(q, m, n, ConjectureForm::Composition, opt);
    const std::string at = "(" + std::to_string(q) + "," + std::to_string(m) + "," + std::to_string(n) + ")";
    if (d.found != c.found) return "direct and composition forms disagree at " + at;
    if (d.found && !d.cross_verified) return "direct witness does not cross-verify at " + at + ": " + d.cross_note;
    if (c.found && !c.cross_verified) return "composition witness does not cross-verify at " + at + ": " + c.cross_note;
  }
  return {};
}

std::string check_quadratics(unsigned top, const Limits& limits) {
  for (unsigned m = 1; m <= top; ++m) {
    const Polynomial f = find_trace_one_quadratic(m, limits);
    if (!(f.coeff(1) == f.coeff(0))) return "X-coefficient != constant for m = " + std::to_string(m);
    if (!is_primitive(conjugate_product(f, 2))) return "conjugate product not primitive for m = " + std::to_string(m);
  }
  return {};
}

}  // namespace

VerifyLevel parse_verify_level(std::string_view name) {
  if (name == "quick") return VerifyLevel::Quick;
  if (name == "full") return VerifyLevel::Full;
  fail(ErrorKind::UnknownKind, "unknown verify level: " + std::string(name));
}

std::vector<CheckResult> run_verify(const VerifyOptions& o, const std::function<void(const CheckResult&)>& on_result) {
  const bool full = o.level == VerifyLevel::Full;
  const unsigned t = o.threads;
  using Grid = std::vector<std::tuple<std::uint64_t, unsigned, unsigned>>;
  std::vector<std::pair<std::string, Check>> checks = {
      {"field-axioms", [&] { return check_field_axioms(o.seed); }},
      {"conway-moduli-primitive", [&] { return check_conway_primitive(); }},
      {"closed-form-counts", [&] { return check_closed_forms(); }},
      {"matrix-count", [&] { return check_matrix_count(o.limits, t); }},
      {"charpoly-formula", [&] { return check_charpoly(o.seed, o.inject_fault, full ? 100 : 20); }},
      {"period", [&] { return check_period(o.seed, o.limits); }},
      {"tsrp-count-theorem",
       [&] {
         Grid g = {{2, 2, 2}, {2, 2, 3}, {2, 3, 2}, {2, 1, 2}};
         if (full) g.insert(g.end(), {{3, 2, 3}, {5, 1, 3}});
         return check_tsrp(g, o.limits, t);
       }},
      {"cyclotomic-cosets", [&] { return check_cosets(full ? 12 : 8, o.limits); }},
      {"r-count", [&] { return check_r(full ? 12 : 8, o.limits, t); }},
      {"trace-one-element-tally", [&] { return check_element_tally(full ? 10 : 7, o.limits, t); }},
      {"search-replay",
       [&] {
         Grid g = {{2, 2, 2}, {2, 2, 3}, {2, 3, 2}, {3, 2, 3}, {5, 2, 3}};
         if (full) g.insert(g.end(), {{2, 2, 7}, {7, 2, 3}, {11, 2, 3}});
         return check_search(g, t);
       }},
      {"conjecture-equivalence",
       [&] {
         Grid g = {{2, 2, 2}, {2, 2, 3}, {2, 3, 2}, {3, 2, 3}};
         if (full) g.insert(g.end(), {{2, 3, 3}, {3, 3, 2}, {3, 3, 3}, {5, 2, 2}, {5, 2, 3}, {5, 3, 2}, {5, 3, 3}});
         return check_conjecture(g, t);
       }},
      {"trace-one-quadratic", [&] { return check_quadratics(full ? 10 : 6, o.limits); }},
  };
  std::vector<CheckResult> out;
  for (auto& [name, run] : checks) {
    CheckResult r{name, false, {}};
    try {
      r.detail = run();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace tsrforge
