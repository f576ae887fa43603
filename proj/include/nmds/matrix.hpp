#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "nmds/gf.hpp"

namespace nmds {

using FieldPtr = std::shared_ptr<const Field>;

inline FieldPtr make_field(int m, std::optional<std::uint32_t> modulus = std::nullopt) {
  return std::make_shared<const Field>(Field::build(m, modulus));
}

using Vector = std::vector<Element>;

// Dense row-major matrix over a shared field.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  // Throws PreconditionError when data.size() != rows * cols or an entry is
  // not a field element.
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Element> data);
  static Matrix from_rows(FieldPtr field, const std::vector<Vector>& rows);
  static Matrix identity(FieldPtr field, std::size_t n);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Element at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Element& at(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  std::span<const Element> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  const std::vector<Element>& data() const noexcept { return data_; }

  Matrix transpose() const;
  Matrix select_columns(std::span<const std::uint32_t> columns) const;
  Matrix select_rows(std::span<const std::uint32_t> rows) const;
  // M * v for a column vector v of length cols().
  Vector apply(std::span<const Element> v) const;
  // u^T * M for a row vector u of length rows().
  Vector left_apply(std::span<const Element> u) const;

  bool operator==(const Matrix& other) const;

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

struct RankNullspace {
  std::size_t rank = 0;
  // Right null space basis in reduced echelon normal form: basis vector j has
  // a 1 at the j-th free column and zeros at the other free columns.
  std::vector<Vector> basis;
};

// Gaussian elimination with first-nonzero pivoting.
RankNullspace rank_and_nullspace(const Matrix& m);
std::size_t rank(const Matrix& m);

// Throws PreconditionError for a non-square matrix.
Element determinant(const Matrix& m);

// Rank of the submatrix formed by the listed columns, without materializing
// it. Intended for the many small rank tests in the counting and NMDS checks.
std::size_t column_rank(const Matrix& m, std::span<const std::uint32_t> columns);

// sigma_j(values); sigma_0 = 1. Throws PreconditionError when j > |values|.
Element elementary_symmetric(const Field& f, std::span<const Element> values, std::size_t j);

// All sigma_0..sigma_n at once via the product expansion prod (1 + u_i z).
Vector elementary_symmetric_all(const Field& f, std::span<const Element> values);

// prod_{i<j} (u_j - u_i).
Element vandermonde_product(const Field& f, std::span<const Element> values);

// n x n matrix with rows x^e for e in {0..n} \ {deleted_row}, columns the
// values in order.
Matrix generalized_vandermonde_matrix(const FieldPtr& f, std::span<const Element> values,
                                      std::size_t deleted_row);

// Closed form prod_{i<j}(u_j - u_i) * sigma_{n - deleted_row}(u). Throws
// PreconditionError for repeated values or deleted_row > n.
Element generalized_vandermonde_det(const Field& f, std::span<const Element> values,
                                    std::size_t deleted_row);

// Matrix with rows x^e for the given exponents evaluated at the given points.
Matrix power_matrix(const FieldPtr& f, std::span<const std::uint32_t> exponents,
                    std::span<const Element> points);

}  // namespace nmds
