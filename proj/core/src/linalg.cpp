#include "apl/linalg.hpp"

#include <string>

#include "apl/error.hpp"

namespace apl {

namespace {

void require_same_length(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    throw shape_mismatch("vector lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
}

void require_field(const Matrix& m, const char* what) {
  if (!m.field().is_field())
    throw field_mismatch(std::string(what) + " requires Q or GF(p), got " + m.field().to_string());
}

Scalar laplace_determinant(const Matrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = m.rows();
  if (row == n) return m.field().one();
  Scalar total = m.field().zero();
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Scalar& entry = m(row, cols[c]);
    if (entry.is_zero()) continue;
    std::size_t col = cols[c];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(c));
    Scalar minor = laplace_determinant(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(c), col);
    if (c % 2 == 0) {
      total += entry * minor;
    } else {
      total -= entry * minor;
    }
  }
  return total;
}

Matrix minor_matrix(const Matrix& m, std::size_t skip_row, std::size_t skip_col) {
  const std::size_t n = m.rows();
  Matrix out(m.field(), n - 1, n - 1);
  for (std::size_t i = 0, r = 0; i < n; ++i) {
    if (i == skip_row) continue;
    for (std::size_t j = 0, c = 0; j < n; ++j) {
      if (j == skip_col) continue;
      out(r, c++) = m(i, j);
    }
    ++r;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- vectors

Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, field.zero()); }

Vector unit_vector(const Field& field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = field.one();
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector operator+(const Vector& lhs, const Vector& rhs) {
  require_same_length(lhs, rhs);
  Vector out(lhs);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += rhs[i];
  return out;
}

Vector operator-(const Vector& lhs, const Vector& rhs) {
  require_same_length(lhs, rhs);
  Vector out(lhs);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= rhs[i];
  return out;
}

Vector operator-(const Vector& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(-x);
  return out;
}

Vector scaled(const Vector& v, const Scalar& factor) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x * factor);
  return out;
}

void axpy(Vector& y, const Scalar& a, const Vector& x) {
  require_same_length(y, x);
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw shape_mismatch("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) {
      if (rows[i][j].field() != field) throw field_mismatch("matrix entry over " + rows[i][j].field().to_string());
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw shape_mismatch("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

bool Matrix::is_zero() const { return apl::is_zero(data_); }

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::scaled(const Scalar& factor) const {
  Matrix out(*this);
  for (auto& x : out.data_) x *= factor;
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_)
    throw shape_mismatch("matrix with " + std::to_string(cols_) + " columns applied to vector of length " +
                         std::to_string(v.size()));
  Vector out = zero_vector(field_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero()) out[i] += a * v[j];
    }
  }
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out(*this);
  for (auto& x : out.data_) x = -x;
  return out;
}

Matrix operator+(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) throw shape_mismatch("matrix sum shape mismatch");
  Matrix out(lhs);
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

Matrix operator-(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) throw shape_mismatch("matrix difference shape mismatch");
  Matrix out(lhs);
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw shape_mismatch("matrix product shape mismatch");
  if (lhs.field_ != rhs.field_) throw field_mismatch("matrix product over different fields");
  Matrix out(lhs.field_, lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i)
    for (std::size_t l = 0; l < lhs.cols_; ++l) {
      const Scalar& a = lhs(i, l);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Scalar& b = rhs(l, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  return out;
}

bool operator==(const Matrix& lhs, const Matrix& rhs) {
  return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.field_ == rhs.field_ && lhs.data_ == rhs.data_;
}

// ---------------------------------------------------------------- elimination

Echelon row_reduce(const Matrix& m) {
  require_field(m, "row reduction");
  Echelon e{m, {}};
  Matrix& a = e.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(row, j));
    Scalar inv = a(row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      Scalar factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (!a(row, j).is_zero()) a(i, j) -= factor * a(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& m) {
  Echelon e = row_reduce(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(f, m.cols());
    v[free] = f.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::size_t> independent_columns(const Matrix& m) { return row_reduce(m).pivots; }

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw shape_mismatch("right-hand side length mismatch");
  if (!m.field().is_field()) {
    if (!m.is_square()) throw field_mismatch("non-square solve over " + m.field().to_string());
    return inverse(m).apply(b);
  }
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw shape_mismatch("determinant of a non-square matrix");
  const Field& f = m.field();
  if (!f.is_field()) {
    std::vector<std::size_t> cols(m.cols());
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    return laplace_determinant(m, cols, 0);
  }
  Matrix a(m);
  Scalar det = f.one();
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return f.zero();
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    Scalar inv = a(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      Scalar factor = a(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) a(i, j) -= factor * a(col, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw shape_mismatch("inverse of a non-square matrix");
  const Field& f = m.field();
  const std::size_t n = m.rows();
  if (!f.is_field()) {
    Scalar det = determinant(m);
    if (det.is_zero()) throw not_invertible("singular matrix");
    Scalar det_inv;
    try {
      det_inv = det.inverse();
    } catch (const not_invertible&) {
      throw not_invertible("determinant " + det.to_string() + " is not a unit");
    }
    Matrix out(f, n, n);
    if (n == 1) {
      out(0, 0) = det_inv;
      return out;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Scalar cof = determinant(minor_matrix(m, j, i)) * det_inv;
        out(i, j) = (i + j) % 2 == 0 ? cof : -cof;
      }
    return out;
  }
  Matrix aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  Echelon e = row_reduce(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw not_invertible("singular matrix");
  Matrix out(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = e.reduced(i, n + j);
  return out;
}

namespace {

template <class F>
Matrix map_entries(const Matrix& m, const Field& target, F f) {
  Matrix out(target, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = f(m(i, j));
  return out;
}

}  // namespace

Matrix convert(const Matrix& m, const Field& target) {
  return map_entries(m, target, [&](const Scalar& s) { return convert(s, target); });
}

Matrix evaluate(const Matrix& m, const Assignment& assignment, const Field& target) {
  return map_entries(m, target, [&](const Scalar& s) { return evaluate(s, assignment, target); });
}

Matrix substitute(const Matrix& m, const Substitution& replacements) {
  return map_entries(m, m.field(), [&](const Scalar& s) { return substitute(s, replacements); });
}

}  // namespace apl
