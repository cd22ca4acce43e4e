#pragma once

// Dense exact linear algebra over a Field.

#include <cstddef>
#include <optional>
#include <vector>

#include "apl/scalar.hpp"

namespace apl {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& field, std::size_t n);
/// The i-th standard basis vector (0-based).
Vector unit_vector(const Field& field, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& lhs, const Vector& rhs);
Vector operator-(const Vector& lhs, const Vector& rhs);
Vector operator-(const Vector& v);
Vector scaled(const Vector& v, const Scalar& factor);
/// y += a * x
void axpy(Vector& y, const Scalar& a, const Vector& x);

/// Row-major rows x cols array of scalars over one field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  /// Throws shape_mismatch on ragged input.
  static Matrix from_rows(const Field& field, const std::vector<std::vector<Scalar>>& rows);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& cols);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;
  bool is_zero() const;

  Matrix transpose() const;
  Matrix scaled(const Scalar& factor) const;
  /// Matrix-vector product; throws shape_mismatch.
  Vector apply(const Vector& v) const;

  Matrix operator-() const;
  friend Matrix operator+(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator-(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend bool operator==(const Matrix& lhs, const Matrix& rhs);
  friend bool operator!=(const Matrix& lhs, const Matrix& rhs) { return !(lhs == rhs); }

  /// Entries as a flat row-major vector.
  const std::vector<Scalar>& entries() const noexcept { return data_; }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// T, R, theta, phi and other linear maps share the matrix representation:
/// column j is the image of the j-th source basis vector.
using LinearMap = Matrix;

struct Echelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination. Requires Q or GF(p).
Echelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column in increasing order.
std::vector<Vector> nullspace(const Matrix& m);
/// Indices of the first maximal set of linearly independent columns.
std::vector<std::size_t> independent_columns(const Matrix& m);
/// Some x with m x = b, or nullopt when inconsistent. Over a Laurent ring
/// `m` must be square with a unit determinant.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Exact determinant: elimination over a field, cofactor expansion over a
/// Laurent ring.
/// Entrywise conversion, evaluation and substitution.
Matrix convert(const Matrix& m, const Field& target);
Matrix evaluate(const Matrix& m, const Assignment& assignment, const Field& target = Field::rationals());
Matrix substitute(const Matrix& m, const Substitution& replacements);

Scalar determinant(const Matrix& m);
/// Throws not_invertible when the determinant is zero (or not a unit).
Matrix inverse(const Matrix& m);

}  // namespace apl
