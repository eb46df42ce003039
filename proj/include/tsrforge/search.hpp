#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsrforge/limits.hpp"
#include "tsrforge/primitivity.hpp"
#include "tsrforge/tsr.hpp"

namespace tsrforge {

/// Companion matrix with ones on the subdiagonal and -h_0..-h_{m-1} in the last column.
/// ZeroConstantTerm when h(0) = 0; BadDegree when h is not monic of degree >= 1.
Matrix companion_matrix(const Polynomial& h);

/// Monic X^deg k * k(1/X). ZeroConstantTerm when k(0) = 0.
Polynomial reciprocal(const Polynomial& k);

/// Primitive monic polynomials of degree m over F_q, lexicographic in (c_{m-1}, ..., c_0).
std::vector<Polynomial> primitive_polynomials(std::uint64_t q, unsigned m, const Limits& limits = Limits{});

struct SearchOptions {
  std::uint64_t budget = std::uint64_t{1} << 22;
  bool allow_even_n = false;
  unsigned threads = 1;
  Limits limits{};
};

struct SearchProvenance {
  Polynomial f;             // primitive, degree m over F_q
  Polynomial g;             // monic, degree n, g(0) = 0, over F_q
  Polynomial composite;     // f(g(X)), primitive of degree mn
  FieldPtr ext;             // F_q[X]/(f)
  Elem alpha;               // class of X, a root of f
  Polynomial k;             // g(X) - alpha over ext
  Polynomial reciprocal_k;  // X^n - lambda L(X)
  Elem lambda;              // alpha^{-1}
  Polynomial L;             // X^n g(1/X), L(0) = 1
  Polynomial h;             // minimal polynomial of lambda over F_q
  Matrix A;                 // companion matrix of h
  Polynomial reciprocal_conjugates; // product of the conjugates of reciprocal_k
  std::uint64_t f_index;
  std::uint64_t g_index;
};

struct SearchResult {
  TsrSpec spec;
  Polynomial charpoly;
  PrimitivityCertificate certificate;
  SearchProvenance provenance;
  std::uint64_t candidates_tried;
};

/// Scans (f, g) pairs, f outer and g inner, both lexicographic, for primitive f(g(X)) and
/// turns the first hit into a primitive TSR. InvalidParity for q >= 3 with even n unless
/// allowed; BudgetExhaustedError when no pair within the budget (or the whole space) works.
SearchResult search_primitive_tsr(std::uint64_t q, unsigned m, unsigned n, const SearchOptions& options = {});

/// Rebuilds the TSR of a search from (f, g) alone and checks every step; empty string on
/// success, otherwise the first failed check.
std::string replay_search(const SearchResult& result);

enum class ConjectureForm { Direct, Composition };

struct ConjectureWitness {
  std::uint64_t q = 0;
  unsigned m = 0;
  unsigned n = 0;
  ConjectureForm form = ConjectureForm::Direct;
  bool found = false;
  bool space_exhausted = false;
  std::uint64_t candidates_tried = 0;
  std::optional<Polynomial> direct;  // g(X) + lambda over F_{q^m}
  std::optional<Polynomial> f;       // over F_q
  std::optional<Polynomial> g;       // over F_q
  /// Witness translated to the other form and re-verified there.
  bool cross_verified = false;
  std::string cross_note;
};

/// BudgetExhaustedError when the budget ends the scan before the space is exhausted.
ConjectureWitness verify_conjecture(std::uint64_t q, unsigned m, unsigned n, ConjectureForm form,
                                    const SearchOptions& options = {});

/// First primitive X^2 + lambda X + lambda over F_{2^m} with lambda primitive, lambda ascending.
Polynomial find_trace_one_quadratic(unsigned m, const Limits& limits = Limits{});

}  // namespace tsrforge
