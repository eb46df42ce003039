#include "tsrforge/matrix.hpp"

namespace tsrforge {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) fail(ErrorKind::DimensionMismatch, "entry count != rows * cols");
  for (Elem e : entries_) {
    if (!field_->contains(e)) fail(ErrorKind::DimensionMismatch, "matrix entry outside the field");
  }
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<Elem> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) fail(ErrorKind::DimensionMismatch, "ragged matrix rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Matrix(std::move(field), r, c, std::move(entries));
}

std::vector<std::vector<Elem>> Matrix::to_rows() const {
  std::vector<std::vector<Elem>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r].assign(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_field(field_, o.field_);
  if (cols_ != o.rows_) fail(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  const Field& f = *field_;
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) = f.add(out.at(i, j), f.mul(a, o.at(k, j)));
    }
  }
  return out;
}

Matrix Matrix::scaled(Elem c) const {
  Matrix out = *this;
  for (Elem& e : out.entries_) e = field_->mul(e, c);
  return out;
}

std::vector<Elem> Matrix::left_multiply(std::span<const Elem> v) const {
  if (v.size() != rows_) fail(ErrorKind::DimensionMismatch, "vector length != matrix rows");
  const Field& f = *field_;
  std::vector<Elem> out(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < cols_; ++j) out[j] = f.add(out[j], f.mul(v[i], at(i, j)));
  }
  return out;
}

Matrix Matrix::pow(std::uint64_t e) const {
  if (!is_square()) fail(ErrorKind::NonSquareMatrix, "power of a non-square matrix");
  Matrix result = identity(field_, rows_);
  Matrix base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_ && same_field(*field_, *o.field_);
}

namespace {

// Row-reduces a copy; returns (rank, determinant when square).
std::pair<std::size_t, Elem> eliminate(Matrix m) {
  const Field& f = *m.field();
  Elem det = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) {
      det = 0;
      continue;
    }
    if (pivot != rank) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(rank, j));
      det = f.neg(det);
    }
    const Elem pv = m.at(rank, col);
    det = f.mul(det, pv);
    const Elem inv = f.inv(pv);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      const Elem factor = f.mul(m.at(r, col), inv);
      if (factor == 0) continue;
      for (std::size_t j = col; j < m.cols(); ++j) m.at(r, j) = f.sub(m.at(r, j), f.mul(factor, m.at(rank, j)));
    }
    ++rank;
  }
  if (rank < m.rows()) det = 0;
  return {rank, det};
}

}  // namespace

Elem determinant(const Matrix& m) {
  if (!m.is_square()) fail(ErrorKind::NonSquareMatrix, "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  return eliminate(m).second;
}

std::size_t rank(const Matrix& m) { return eliminate(m).first; }

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Polynomial matrix_charpoly(const Matrix& input) {
  if (!input.is_square()) fail(ErrorKind::NonSquareMatrix, "characteristic polynomial of a non-square matrix");
  const FieldPtr& fp = input.field();
  const Field& f = *fp;
  const std::size_t n = input.rows();
  Matrix h = input;

  // Similarity transforms to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t pivot = j + 1;
    while (pivot < n && h.at(pivot, j) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h.at(pivot, c), h.at(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h.at(r, pivot), h.at(r, j + 1));
    }
    const Elem inv = f.inv(h.at(j + 1, j));
    for (std::size_t r = j + 2; r < n; ++r) {
      const Elem u = f.mul(h.at(r, j), inv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h.at(r, c) = f.sub(h.at(r, c), f.mul(u, h.at(j + 1, c)));
      for (std::size_t rr = 0; rr < n; ++rr) h.at(rr, j + 1) = f.add(h.at(rr, j + 1), f.mul(u, h.at(rr, r)));
    }
  }

  // p_k = (X - h_kk) p_{k-1} - sum_i h_{k-i,k} (prod of subdiagonal h_{t,t-1}) p_{k-i-1}
  std::vector<Polynomial> p;
  p.reserve(n + 1);
  p.push_back(Polynomial::constant(fp, 1));
  const Polynomial x = Polynomial::x(fp);
  for (std::size_t k = 1; k <= n; ++k) {
    Polynomial next = (x - Polynomial::constant(fp, h.at(k - 1, k - 1))) * p[k - 1];
    Elem sub_prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      sub_prod = f.mul(sub_prod, h.at(k - i, k - i - 1));
      if (sub_prod == 0) break;
      const Elem coef = f.mul(h.at(k - i - 1, k - 1), sub_prod);
      if (coef != 0) next = next - p[k - i - 1].scaled(coef);
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

}  // namespace tsrforge
