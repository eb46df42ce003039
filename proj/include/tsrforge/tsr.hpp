#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tsrforge/limits.hpp"
#include "tsrforge/matrix.hpp"
#include "tsrforge/polynomial.hpp"

namespace tsrforge {

/// Normalized TSR of order n over F_{q^m}: s_{i+n} = s_i B + s_{i+1} c_1 B + ... + s_{i+n-1} c_{n-1} B.
struct TsrSpec {
  FieldPtr field;  // F_q, q prime
  unsigned m = 0;
  unsigned n = 0;
  std::vector<Elem> c;  // c_1 .. c_{n-1}
  Matrix B;

  /// Validates shapes and field; SingularB when B is not invertible.
  static TsrSpec make(FieldPtr field, unsigned m, unsigned n, std::vector<Elem> c, Matrix B);
  std::uint64_t q() const { return field->order(); }
  bool operator==(const TsrSpec& o) const { return m == o.m && n == o.n && c == o.c && B == o.B; }
};

/// Accepts the general form s_{i+n} = sum_j s_{i+j} (c_j A) and absorbs c_0 into B = c_0 A.
/// c holds c_0 .. c_{n-1}; rejects c_0 = 0 with ZeroConstantTerm.
TsrSpec normalize_general_form(FieldPtr field, unsigned m, unsigned n, const std::vector<Elem>& c, const Matrix& A);

struct TsrState {
  std::vector<std::vector<Elem>> blocks;  // n row vectors of width m
  std::uint64_t step_index = 0;

  std::vector<Elem> flatten() const;
  static TsrState from_flat(const std::vector<Elem>& flat, unsigned m, unsigned n);
};

struct Decomposition {
  Polynomial g;  // g(0) = 1, deg g <= n - 1
  Polynomial h;  // monic, deg m, h(0) != 0
};

Matrix build_transition_matrix(const TsrSpec& spec);
TsrState tsr_step(const TsrSpec& spec, const TsrState& state);

/// 1 + c_1 X + ... + c_{n-1} X^{n-1}.
Polynomial feedback_polynomial(const TsrSpec& spec);
/// g^m * Psi_B(X^n / g) with denominators cleared.
Polynomial tsr_charpoly_formula(const TsrSpec& spec);
Polynomial tsr_charpoly_direct(const TsrSpec& spec);
/// Multiplicative order of the transition matrix. ScaleExceeded above limits.field_order.
std::uint64_t tsr_period(const TsrSpec& spec, const Limits& limits = Limits{});
bool is_primitive_tsr(const TsrSpec& spec);

/// sum_k h_k X^{nk} g^{m-k}.
Polynomial recompose(const Decomposition& d, unsigned m, unsigned n);
/// First decomposition in increasing order of g's packed coefficients, if any. BadDegree if deg f != mn.
std::optional<Decomposition> mn_decompose(const Polynomial& f, unsigned m, unsigned n);
/// Every decomposition, same order.
std::vector<Decomposition> mn_decompose_all(const Polynomial& f, unsigned m, unsigned n);

}  // namespace tsrforge
