#include "nmds/matrix.hpp"

#include <algorithm>
#include <string>

#include "nmds/errors.hpp"

namespace nmds {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (!field_) throw PreconditionError("matrix needs a field");
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Element> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (!field_) throw PreconditionError("matrix needs a field");
  if (data_.size() != rows_ * cols_) {
    throw PreconditionError("matrix data has " + std::to_string(data_.size()) +
                            " entries, expected " + std::to_string(rows_ * cols_));
  }
  for (auto e : data_) {
    if (!field_->contains(e)) throw PreconditionError("matrix entry " + std::to_string(e) +
                                                      " is not a field element");
  }
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Element> data;
  data.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw PreconditionError("ragged matrix rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return Matrix(std::move(field), rows.size(), cols, std::move(data));
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::select_columns(std::span<const std::uint32_t> columns) const {
  Matrix s(field_, rows_, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j] >= cols_) throw PreconditionError("column index out of range");
    for (std::size_t r = 0; r < rows_; ++r) s.at(r, j) = at(r, columns[j]);
  }
  return s;
}

Matrix Matrix::select_rows(std::span<const std::uint32_t> rows) const {
  Matrix s(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= rows_) throw PreconditionError("row index out of range");
    std::copy_n(row(rows[i]).begin(), cols_, s.data_.begin() + i * cols_);
  }
  return s;
}

Vector Matrix::apply(std::span<const Element> v) const {
  if (v.size() != cols_) throw PreconditionError("vector length does not match columns");
  const Field& f = *field_;
  Vector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] ^= f.mul(at(r, c), v[c]);
  return out;
}

Vector Matrix::left_apply(std::span<const Element> u) const {
  if (u.size() != rows_) throw PreconditionError("vector length does not match rows");
  const Field& f = *field_;
  Vector out(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (u[r] == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c) out[c] ^= f.mul(u[r], at(r, c));
  }
  return out;
}

bool Matrix::operator==(const Matrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_ &&
         field_->modulus() == other.field_->modulus() && field_->m() == other.field_->m();
}

namespace {

// In-place reduction to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(const Field& f, std::vector<Element>& a, std::size_t rows,
                              std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) std::swap_ranges(a.begin() + p * cols, a.begin() + (p + 1) * cols,
                                 a.begin() + r * cols);
    const Element scale = f.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = f.mul(a[r * cols + j], scale);
    for (std::size_t i = 0; i < rows; ++i) {
      const Element factor = a[i * cols + c];
      if (i == r || factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) a[i * cols + j] ^= f.mul(factor, a[r * cols + j]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RankNullspace rank_and_nullspace(const Matrix& m) {
  const Field& f = m.field();
  auto a = m.data();
  const auto pivots = rref(f, a, m.rows(), m.cols());

  RankNullspace out;
  out.rank = pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = a[i * m.cols() + free];
    out.basis.push_back(std::move(v));
  }
  // Normalize the basis itself to reduced echelon form (leading entries 1).
  if (!out.basis.empty()) {
    std::vector<Element> b;
    for (const auto& v : out.basis) b.insert(b.end(), v.begin(), v.end());
    rref(f, b, out.basis.size(), m.cols());
    for (std::size_t i = 0; i < out.basis.size(); ++i)
      std::copy_n(b.begin() + i * m.cols(), m.cols(), out.basis[i].begin());
  }
  return out;
}

std::size_t rank(const Matrix& m) {
  auto a = m.data();
  return rref(m.field(), a, m.rows(), m.cols()).size();
}

Element determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  const Field& f = m.field();
  const std::size_t n = m.rows();
  auto a = m.data();
  Element det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p * n + c] == 0) ++p;
    if (p == n) return 0;
    // Row swaps flip the sign, which is invisible in characteristic 2.
    if (p != c) std::swap_ranges(a.begin() + p * n, a.begin() + (p + 1) * n, a.begin() + c * n);
    const Element pivot = a[c * n + c];
    det = f.mul(det, pivot);
    const Element inv = f.inv(pivot);
    for (std::size_t i = c + 1; i < n; ++i) {
      const Element factor = f.mul(a[i * n + c], inv);
      if (factor == 0) continue;
      for (std::size_t j = c; j < n; ++j) a[i * n + j] ^= f.mul(factor, a[c * n + j]);
    }
  }
  return det;
}

std::size_t column_rank(const Matrix& m, std::span<const std::uint32_t> columns) {
  const std::size_t rows = m.rows();
  const std::size_t cols = columns.size();
  std::vector<Element> a(rows * cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t r = 0; r < rows; ++r) a[r * cols + j] = m.at(r, columns[j]);
  return rref(m.field(), a, rows, cols).size();
}

Vector elementary_symmetric_all(const Field& f, std::span<const Element> values) {
  Vector sigma(values.size() + 1, 0);
  sigma[0] = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j >= 1; --j) sigma[j] ^= f.mul(sigma[j - 1], values[i]);
  }
  return sigma;
}

Element elementary_symmetric(const Field& f, std::span<const Element> values, std::size_t j) {
  if (j > values.size()) throw PreconditionError("sigma index exceeds the number of values");
  return elementary_symmetric_all(f, values)[j];
}

Element vandermonde_product(const Field& f, std::span<const Element> values) {
  Element p = 1;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j) p = f.mul(p, values[j] ^ values[i]);
  return p;
}

Matrix power_matrix(const FieldPtr& f, std::span<const std::uint32_t> exponents,
                    std::span<const Element> points) {
  Matrix out(f, exponents.size(), points.size());
  for (std::size_t r = 0; r < exponents.size(); ++r)
    for (std::size_t c = 0; c < points.size(); ++c) out.at(r, c) = f->pow(points[c], exponents[r]);
  return out;
}

Matrix generalized_vandermonde_matrix(const FieldPtr& f, std::span<const Element> values,
                                      std::size_t deleted_row) {
  const std::size_t n = values.size();
  if (deleted_row > n) throw PreconditionError("deleted row must lie in [0, n]");
  std::vector<std::uint32_t> exponents;
  for (std::uint32_t e = 0; e <= n; ++e)
    if (e != deleted_row) exponents.push_back(e);
  return power_matrix(f, exponents, values);
}

Element generalized_vandermonde_det(const Field& f, std::span<const Element> values,
                                    std::size_t deleted_row) {
  const std::size_t n = values.size();
  if (deleted_row > n) throw PreconditionError("deleted row must lie in [0, n]");
  const Element v = vandermonde_product(f, values);
  if (v == 0) throw PreconditionError("generalized Vandermonde values must be distinct");
  return f.mul(v, elementary_symmetric(f, values, n - deleted_row));
}

}  // namespace nmds
