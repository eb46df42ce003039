#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tsrforge/field.hpp"
#include "tsrforge/polynomial.hpp"

namespace tsrforge {

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<Elem>& entries() const noexcept { return entries_; }

  Elem at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Elem& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  std::vector<std::vector<Elem>> to_rows() const;

  Matrix operator*(const Matrix& o) const;
  Matrix scaled(Elem c) const;
  /// Row vector times matrix: v * M.
  std::vector<Elem> left_multiply(std::span<const Elem> v) const;
  Matrix pow(std::uint64_t e) const;

  bool operator==(const Matrix& o) const;

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> entries_;
};

Elem determinant(const Matrix& m);
std::size_t rank(const Matrix& m);
bool is_invertible(const Matrix& m);

/// det(X I - M), via similarity reduction to upper Hessenberg form and the
/// Hessenberg recurrence; O(d^3) field operations, valid in any characteristic.
Polynomial matrix_charpoly(const Matrix& m);

}  // namespace tsrforge
