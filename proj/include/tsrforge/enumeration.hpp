#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tsrforge/bigint.hpp"
#include "tsrforge/limits.hpp"
#include "tsrforge/polynomial.hpp"
#include "tsrforge/tsr.hpp"

namespace tsrforge {

enum class CountKind { LfsrPrim, LfsrIrr, SigmaPrim, SigmaIrr, GlOrder, TsrOrder1, TsrM1 };

/// Accepts lfsr_prim, lfsr_irr, sigma_prim, sigma_irr, gl_order, tsr_order1, tsr_m1.
CountKind parse_count_kind(std::string_view name);
std::string_view to_string(CountKind kind);

/// Exact closed-form counts:
///   lfsr_prim  phi(q^n - 1) / n
///   lfsr_irr   (1/n) sum_{d|n} mu(d) q^{n/d}
///   sigma_prim phi(q^{mn} - 1)/(mn) * q^{m(m-1)(n-1)} * prod_{i=1}^{m-1} (q^m - q^i)
///   sigma_irr  (1/mn) sum_{d|mn} mu(d) q^{mn/d} * q^{m(m-1)(n-1)} * prod_{i=1}^{m-1} (q^m - q^i)
///   gl_order   |GL_m(F_q)|
///   tsr_order1 |GL_m(F_q)| / (q^m - 1) * phi(q^m - 1) / m
///   tsr_m1     phi(q^n - 1) / n
BigInt closed_form_count(CountKind kind, std::uint64_t q, unsigned m, unsigned n);

BigInt gl_order(std::uint64_t q, unsigned m);

/// Number of m x m matrices over the coefficient field of p with characteristic polynomial p.
/// ScaleExceeded when q^{m^2} > limits.matrix_count.
std::uint64_t count_matrices_with_charpoly(const Polynomial& p, unsigned m, const Limits& limits = Limits{},
                                           unsigned threads = 1);

enum class SpecialForm { Pqmn, Pmnq };
SpecialForm parse_special_form(std::string_view name);

/// Primitive X^n - mu g(X) (g(0) = 1, deg g <= n-1) or g(X) + lambda (g monic of degree n,
/// g(0) = 0) over F_{q^m}, mu and lambda primitive. Sorted by canonical text.
std::vector<Polynomial> enumerate_special_primitives(std::uint64_t q, unsigned m, unsigned n, SpecialForm form,
                                                     const Limits& limits = Limits{}, unsigned threads = 1);

/// Every invertible B in lexicographic order of the row-major entry tuple.
std::vector<Matrix> general_linear_group(const FieldPtr& field, unsigned m, const Limits& limits = Limits{});

/// All primitive TSRs of the given shape; c tuples outer, B inner, both lexicographic.
std::vector<TsrSpec> enumerate_tsrp_bruteforce(std::uint64_t q, unsigned m, unsigned n, const Limits& limits = Limits{},
                                               unsigned threads = 1);

/// (p_count / m) * |GL_m(F_q)| / (q^m - 1); FiberSizeViolation when m does not divide p_count.
BigInt tsrp_count_theorem(std::uint64_t q, unsigned m, unsigned n, const BigInt& p_count);
/// (q^{n-1} - 1) * phi(q^m - 1)/m * |GL_m(F_q)| / (q^m - 1).
BigInt tsrp_upper_bound(std::uint64_t q, unsigned m, unsigned n);

/// Orbits of units modulo 2^{2m} - 1 under doubling. Only leaders are stored; every
/// coset of a unit has exactly 2m members.
struct CosetPartition {
  unsigned m = 0;
  std::uint64_t modulus = 0;
  std::vector<std::uint32_t> leaders;
  std::vector<std::uint32_t> sizes;

  std::vector<std::uint64_t> coset(std::uint64_t leader) const;
};

CosetPartition cyclotomic_partition(unsigned m, const Limits& limits = Limits{});

struct TraceOneCount {
  unsigned m = 0;
  std::uint64_t r = 0;
  std::uint64_t p2m2 = 0;
  std::uint64_t classes = 0;
  /// Classes whose trace orbit over F_2 contains 1 although the trace is not 1 (always 0).
  std::uint64_t orbit_only = 0;
};

/// r = number of conjugate classes of primitive elements of F_{2^{2m}} with relative trace 1.
TraceOneCount count_trace_one_classes(unsigned m, const Limits& limits = Limits{}, unsigned threads = 1);

/// Number of primitive beta in F_{2^{2m}} with beta + beta^{2^m} = 1, by solving the
/// F_2-linear trace equation and testing each of its 2^m solutions.
std::uint64_t count_trace_one_elements(unsigned m, const Limits& limits = Limits{});

struct ConjugateClassSummary {
  std::uint64_t leader = 0;
  FieldPtr subfield;                  // F_{2^m}
  Elem trace = 0;                     // beta + beta^{2^m}
  Elem norm = 0;                      // beta^{1 + 2^m}
  std::vector<Polynomial> quadratics; // X^2 + t^{2^i} X + n^{2^i}, i < m
};

/// Class data for the coset with the given leader, with traces and norms mapped into the
/// Conway field F_{2^m}.
ConjugateClassSummary summarize_class(unsigned m, std::uint64_t leader);

}  // namespace tsrforge
