#include "tsrforge/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <unordered_map>

#include "tsrforge/factor.hpp"
#include "tsrforge/parallel.hpp"
#include "tsrforge/primitivity.hpp"

namespace tsrforge {

namespace {

BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  BigInt r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

BigInt phi_of(const BigInt& n) { return euler_phi(factor_integer(n)); }

void require_base(std::uint64_t q) {
  if (q < 2) fail(ErrorKind::CompositeCharacteristic, "q must be at least 2");
}

void require_positive(unsigned v, const char* name) {
  if (v == 0) fail(ErrorKind::DimensionMismatch, std::string(name) + " must be positive");
}

BigInt moebius_sum(std::uint64_t q, std::uint64_t n) {
  BigInt s = 0;
  for (std::uint64_t d : divisors(n)) {
    const int mu = mobius(d);
    if (mu != 0) s += mu * big_pow(q, n / d);
  }
  return s;
}

// prod_{i=1}^{m-1} (q^m - q^i)
BigInt stabilizer_factor(std::uint64_t q, unsigned m) {
  BigInt r = 1;
  const BigInt qm = big_pow(q, m);
  for (unsigned i = 1; i < m; ++i) r *= qm - big_pow(q, i);
  return r;
}

std::uint64_t to_u64(const BigInt& v, const char* what) {
  if (v > BigInt(std::numeric_limits<std::uint64_t>::max())) fail(ErrorKind::ScaleExceeded, std::string(what) + " overflows");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

CountKind parse_count_kind(std::string_view name) {
  if (name == "lfsr_prim") return CountKind::LfsrPrim;
  if (name == "lfsr_irr") return CountKind::LfsrIrr;
  if (name == "sigma_prim") return CountKind::SigmaPrim;
  if (name == "sigma_irr") return CountKind::SigmaIrr;
  if (name == "gl_order") return CountKind::GlOrder;
  if (name == "tsr_order1") return CountKind::TsrOrder1;
  if (name == "tsr_m1") return CountKind::TsrM1;
  fail(ErrorKind::UnknownKind, "unknown count kind '" + std::string(name) + "'");
}

std::string_view to_string(CountKind kind) {
  switch (kind) {
    case CountKind::LfsrPrim: return "lfsr_prim";
    case CountKind::LfsrIrr: return "lfsr_irr";
    case CountKind::SigmaPrim: return "sigma_prim";
    case CountKind::SigmaIrr: return "sigma_irr";
    case CountKind::GlOrder: return "gl_order";
    case CountKind::TsrOrder1: return "tsr_order1";
    case CountKind::TsrM1: return "tsr_m1";
  }
  return "?";
}

BigInt gl_order(std::uint64_t q, unsigned m) {
  BigInt r = 1;
  const BigInt qm = big_pow(q, m);
  for (unsigned i = 0; i < m; ++i) r *= qm - big_pow(q, i);
  return r;
}

BigInt closed_form_count(CountKind kind, std::uint64_t q, unsigned m, unsigned n) {
  require_base(q);
  switch (kind) {
    case CountKind::LfsrPrim:
    case CountKind::TsrM1:
      require_positive(n, "n");
      return phi_of(big_pow(q, n) - 1) / n;
    case CountKind::LfsrIrr:
      require_positive(n, "n");
      return moebius_sum(q, n) / n;
    case CountKind::SigmaPrim: {
      require_positive(m, "m");
      require_positive(n, "n");
      const std::uint64_t mn = std::uint64_t{m} * n;
      return phi_of(big_pow(q, mn) - 1) / mn * big_pow(q, std::uint64_t{m} * (m - 1) * (n - 1)) *
             stabilizer_factor(q, m);
    }
    case CountKind::SigmaIrr: {
      require_positive(m, "m");
      require_positive(n, "n");
      const std::uint64_t mn = std::uint64_t{m} * n;
      return moebius_sum(q, mn) / mn * big_pow(q, std::uint64_t{m} * (m - 1) * (n - 1)) * stabilizer_factor(q, m);
    }
    case CountKind::GlOrder:
      return gl_order(q, m);
    case CountKind::TsrOrder1: {
      require_positive(m, "m");
      const BigInt qm1 = big_pow(q, m) - 1;
      return gl_order(q, m) / qm1 * (phi_of(qm1) / m);
    }
  }
  fail(ErrorKind::UnknownKind, "unknown count kind");
}

std::uint64_t count_matrices_with_charpoly(const Polynomial& p, unsigned m, const Limits& limits, unsigned threads) {
  if (p.degree() != Degree(static_cast<int>(m))) fail(ErrorKind::BadDegree, "deg p must equal m");
  const FieldPtr& fp = p.field();
  const std::uint64_t q = fp->order();
  const std::uint64_t total = pow_or_throw(q, m * m, "matrix count");
  require_within(total, limits.matrix_count, "q^{m^2}");
  const Polynomial target = p.monic();
  return parallel_count(total, threads, [&](std::uint64_t idx) {
    Matrix a(fp, m, m, digits(idx, q, std::size_t{m} * m));
    return matrix_charpoly(a) == target;
  });
}

SpecialForm parse_special_form(std::string_view name) {
  if (name == "P_qmn" || name == "Pqmn") return SpecialForm::Pqmn;
  if (name == "P_mnq" || name == "Pmnq") return SpecialForm::Pmnq;
  fail(ErrorKind::UnknownKind, "unknown form '" + std::string(name) + "'");
}

std::vector<Polynomial> enumerate_special_primitives(std::uint64_t q, unsigned m, unsigned n, SpecialForm form,
                                                     const Limits& limits, unsigned threads) {
  require_positive(m, "m");
  require_positive(n, "n");
  Field::prime(q);
  FieldPtr ext = Field::extension(q, m);
  require_within(ext->order(), limits.field_order, "q^m");
  const std::vector<Elem> prims = primitive_elements(*ext);
  const std::uint64_t gcount = pow_or_throw(q, n - 1, "g candidates");
  const BigInt space = BigInt(gcount) * prims.size();
  require_within(to_u64(space, "candidate space"), limits.special_candidates, "special-form candidates");
  const std::uint64_t total = gcount * prims.size();
  auto polys = parallel_filter<Polynomial>(total, threads, [&](std::uint64_t idx) -> std::optional<Polynomial> {
    const Elem lam = prims[idx % prims.size()];
    const auto rest = digits(idx / prims.size(), q, n - 1);
    std::vector<Elem> c(n + 1, 0);
    if (form == SpecialForm::Pqmn) {
      // X^n - mu (1 + g_1 X + ... + g_{n-1} X^{n-1})
      c[n] = 1;
      c[0] = ext->neg(lam);
      for (unsigned i = 1; i < n; ++i) c[i] = ext->neg(ext->mul(lam, rest[i - 1]));
    } else {
      // X^n + g_{n-1} X^{n-1} + ... + g_1 X + lambda
      c[n] = 1;
      c[0] = lam;
      for (unsigned i = 1; i < n; ++i) c[i] = rest[i - 1];
    }
    Polynomial f(ext, std::move(c));
    if (is_primitive(f)) return f;
    return std::nullopt;
  });
  std::vector<std::pair<std::string, Polynomial>> keyed;
  keyed.reserve(polys.size());
  for (auto& p : polys) keyed.emplace_back(to_string(p), std::move(p));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Polynomial> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.second));
  return out;
}

std::vector<Matrix> general_linear_group(const FieldPtr& field, unsigned m, const Limits& limits) {
  const std::uint64_t q = field->order();
  const std::uint64_t total = pow_or_throw(q, m * m, "matrix count");
  require_within(total, limits.matrix_count, "q^{m^2}");
  std::vector<Matrix> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Matrix a(field, m, m, digits_be(idx, q, std::size_t{m} * m));
    if (is_invertible(a)) out.push_back(std::move(a));
  }
  return out;
}

std::vector<TsrSpec> enumerate_tsrp_bruteforce(std::uint64_t q, unsigned m, unsigned n, const Limits& limits,
                                               unsigned threads) {
  require_positive(m, "m");
  require_positive(n, "n");
  FieldPtr fq = Field::prime(q);
  const BigInt gl = gl_order(q, m);
  const std::uint64_t ccount = pow_or_throw(q, n - 1, "c candidates");
  require_within(to_u64(gl * ccount, "TSR candidate space"), limits.enumeration, "q^{n-1} |GL_m(F_q)|");
  const std::vector<Matrix> group = general_linear_group(fq, m, limits);
  const std::uint64_t total = ccount * group.size();
  return parallel_filter<TsrSpec>(total, threads, [&](std::uint64_t idx) -> std::optional<TsrSpec> {
    const Matrix& b = group[idx % group.size()];
    TsrSpec spec{fq, m, n, digits_be(idx / group.size(), q, n - 1), b};
    if (is_primitive_tsr(spec)) return spec;
    return std::nullopt;
  });
}

BigInt tsrp_count_theorem(std::uint64_t q, unsigned m, unsigned n, const BigInt& p_count) {
  require_base(q);
  require_positive(m, "m");
  require_positive(n, "n");
  if (p_count % m != 0) {
    fail(ErrorKind::FiberSizeViolation, "m = " + std::to_string(m) + " does not divide |P| = " + p_count.str());
  }
  return p_count / m * gl_order(q, m) / (big_pow(q, m) - 1);
}

BigInt tsrp_upper_bound(std::uint64_t q, unsigned m, unsigned n) {
  require_base(q);
  require_positive(m, "m");
  require_positive(n, "n");
  const BigInt qm1 = big_pow(q, m) - 1;
  return (big_pow(q, n - 1) - 1) * (phi_of(qm1) / m) * (gl_order(q, m) / qm1);
}

std::vector<std::uint64_t> CosetPartition::coset(std::uint64_t leader) const {
  std::vector<std::uint64_t> out;
  std::uint64_t x = leader;
  do {
    out.push_back(x);
    x = (x * 2) % modulus;
  } while (x != leader);
  return out;
}

namespace {

void require_coset_scale(unsigned m, const Limits& limits) {
  if (m == 0) fail(ErrorKind::DimensionMismatch, "m must be positive");
  if (m > limits.max_coset_m) {
    fail(ErrorKind::ScaleExceeded, "m = " + std::to_string(m) + " exceeds the coset guard " +
                                       std::to_string(limits.max_coset_m));
  }
}

}  // namespace

CosetPartition cyclotomic_partition(unsigned m, const Limits& limits) {
  require_coset_scale(m, limits);
  const unsigned bits = 2 * m;
  const std::uint64_t modulus = (std::uint64_t{1} << bits) - 1;
  const auto primes = factor_cache().get(modulus).primes();
  std::vector<bool> visited(modulus + 1, false);
  CosetPartition part{m, modulus, {}, {}};
  for (std::uint64_t i = 1; i < modulus; ++i) {
    if (visited[i]) continue;
    bool unit = true;
    for (std::uint64_t p : primes) {
      if (i % p == 0) {
        unit = false;
        break;
      }
    }
    if (!unit) continue;
    std::uint32_t size = 0;
    std::uint64_t x = i;
    do {
      visited[x] = true;
      ++size;
      // Doubling modulo 2^{2m} - 1 rotates the bit pattern.
      x = ((x << 1) | (x >> (bits - 1))) & modulus;
    } while (x != i);
    part.leaders.push_back(static_cast<std::uint32_t>(i));
    part.sizes.push_back(size);
  }
  return part;
}

TraceOneCount count_trace_one_classes(unsigned m, const Limits& limits, unsigned threads) {
  require_coset_scale(m, limits);
  FieldPtr big = Field::extension(2, 2 * m);
  const Field& F = *big;
  const Elem alpha = F.generator();
  if (!is_primitive_element(F, alpha)) fail(ErrorKind::ExistenceViolation, "field generator is not primitive");
  const CosetPartition part = cyclotomic_partition(m, limits);
  const std::uint64_t shift = std::uint64_t{1} << m;
  std::atomic<std::uint64_t> orbit_only{0};
  const std::uint64_t r = parallel_count(part.leaders.size(), threads, [&](std::uint64_t i) {
    const std::uint64_t j = part.leaders[i];
    const Elem beta = F.pow(alpha, j);
    const Elem conj = F.pow(alpha, static_cast<std::uint64_t>((static_cast<unsigned __int128>(j) * shift) % part.modulus));
    const Elem t = F.add(beta, conj);
    if (t == 1) return true;
    Elem y = t;
    for (unsigned k = 0; k < m; ++k) {
      y = F.mul(y, y);
      if (y == 1) {
        ++orbit_only;
        break;
      }
    }
    return false;
  });
  return TraceOneCount{m, r, r * m, part.leaders.size(), orbit_only.load()};
}

std::uint64_t count_trace_one_elements(unsigned m, const Limits& limits) {
  require_coset_scale(m, limits);
  FieldPtr big = Field::extension(2, 2 * m);
  const Field& F = *big;
  const unsigned dim = 2 * m;
  auto trace = [&](Elem x) {
    Elem y = x;
    for (unsigned k = 0; k < m; ++k) y = F.mul(y, y);
    return F.add(x, y);
  };
  // Elements of F_{2^k} are bit vectors over the power basis; solve trace(x) = 1.
  std::vector<std::pair<Elem, Elem>> basis(dim, {0, 0});  // pivot bit -> (image, preimage)
  std::vector<Elem> kernel;
  for (unsigned i = 0; i < dim; ++i) {
    Elem v = trace(Elem{1} << i);
    Elem pre = Elem{1} << i;
    for (int bit = static_cast<int>(dim) - 1; bit >= 0 && v != 0; --bit) {
      if (((v >> bit) & 1) == 0) continue;
      if (basis[bit].first == 0) {
        basis[bit] = {v, pre};
        v = 0;
        pre = 0;
        break;
      }
      v ^= basis[bit].first;
      pre ^= basis[bit].second;
    }
    if (pre != 0) kernel.push_back(pre);
  }
  Elem target = 1, particular = 0;
  for (int bit = static_cast<int>(dim) - 1; bit >= 0 && target != 0; --bit) {
    if (((target >> bit) & 1) == 0) continue;
    if (basis[bit].first == 0) return 0;
    target ^= basis[bit].first;
    particular ^= basis[bit].second;
  }
  if (target != 0) return 0;
  std::uint64_t count = 0;
  const std::uint64_t combos = std::uint64_t{1} << kernel.size();
  for (std::uint64_t s = 0; s < combos; ++s) {
    Elem x = particular;
    for (std::size_t k = 0; k < kernel.size(); ++k) {
      if ((s >> k) & 1) x ^= kernel[k];
    }
    if (trace(x) != 1) fail(ErrorKind::ExistenceViolation, "trace solver produced a non-solution");
    if (x != 0 && is_primitive_element(F, x)) ++count;
  }
  return count;
}

ConjugateClassSummary summarize_class(unsigned m, std::uint64_t leader) {
  FieldPtr big = Field::extension(2, 2 * m);
  FieldPtr small = Field::extension(2, m);
  const Field& L = *big;
  const Field& K = *small;
  const std::uint64_t sub_units = (std::uint64_t{1} << m) - 1;
  const Elem gamma = L.pow(L.generator(), sub_units + 2);  // alpha^{2^m + 1}
  const Elem a = K.is_prime_field() ? 1 : K.generator();
  std::unordered_map<Elem, Elem> embed{{0, 0}};
  Elem x = 1, y = 1;
  for (std::uint64_t e = 0; e < sub_units; ++e) {
    embed[x] = y;
    x = L.mul(x, gamma);
    y = K.mul(y, a);
  }
  auto to_small = [&](Elem v) {
    auto it = embed.find(v);
    if (it == embed.end()) fail(ErrorKind::BaseNotSubfield, "value outside the subfield F_{2^m}");
    return it->second;
  };
  const std::uint64_t modulus = (std::uint64_t{1} << (2 * m)) - 1;
  const Elem beta = L.pow(L.generator(), leader % modulus);
  const Elem conj = L.pow(beta, std::uint64_t{1} << m);
  ConjugateClassSummary s;
  s.leader = leader;
  s.subfield = small;
  s.trace = to_small(L.add(beta, conj));
  s.norm = to_small(L.mul(beta, conj));
  Elem t = s.trace, nm = s.norm;
  for (unsigned i = 0; i < m; ++i) {
    s.quadratics.emplace_back(small, std::vector<Elem>{nm, t, 1});
    t = K.mul(t, t);
    nm = K.mul(nm, nm);
  }
  return s;
}

}  // namespace tsrforge
