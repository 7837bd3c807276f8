#pragma once

// Dense linear algebra over Q with arbitrary-precision rationals.
//
// Every routine is exact. Results that describe subspaces (rref, nullspace
// bases, span bases) are returned in a canonical form so that two runs, or
// two different ways of assembling the same system, compare equal entry for
// entry.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace supertri {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Parses "n", "-n" or "p/q" (q > 0). The result is reduced.
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& value);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t index);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scaled(const Scalar& factor, const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix diagonal(const Vector& diag);
  static Matrix from_rows(std::initializer_list<std::initializer_list<Scalar>> rows);
  /// Columns must all have length `rows`.
  static Matrix from_columns(std::span<const Vector> columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  /// Row-major storage; also the vectorization used for operator spaces.
  const std::vector<Scalar>& entries() const noexcept { return entries_; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& factor, const Matrix& m);
Vector operator*(const Matrix& m, const Vector& v);

Matrix transpose(const Matrix& m);
Matrix power(const Matrix& m, unsigned exponent);

/// Stacks `blocks` along the diagonal.
Matrix block_diagonal(const Matrix& a, const Matrix& b);

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // ascending column indices

  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Reduced row echelon form (unique) with its pivot columns.
RowEchelon rref(Matrix m);

/// Standard free-variable basis of {x : m x = 0}, ordered by free column.
std::vector<Vector> nullspace_basis(const Matrix& m);

/// Coefficients c with sum_i c_i basis_i = target, or nullopt when target is
/// outside the span. Free coefficients of a dependent basis are set to 0.
std::optional<Vector> solve_in_span(std::span<const Vector> basis, const Vector& target);

/// Throws SingularMap when m is not invertible, InputError when not square.
Matrix invert(const Matrix& m);

/// Canonical basis of span(vectors): the nonzero rows of the RREF of the
/// matrix whose rows are `vectors`. `dim` is the ambient dimension.
std::vector<Vector> canonical_span_basis(std::span<const Vector> vectors, std::size_t dim);

/// Canonical basis of span(a) ∩ span(b).
std::vector<Vector> intersect_spans(std::span<const Vector> a, std::span<const Vector> b,
                                    std::size_t dim);

}  // namespace supertri
