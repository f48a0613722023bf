#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gelfand/rational.hpp"

namespace gelfand {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;
  std::vector<Vector> columns() const;
  void set_column(std::size_t j, const Vector& v);

  Matrix transpose() const;
  bool is_zero() const;
  bool is_diagonal() const;
  std::size_t nonzeros() const;

  /// Column-major flattening, used to treat matrices as vectors.
  Vector flatten() const;
  static Matrix unflatten(std::size_t rows, std::size_t cols, const Vector& v);

  Matrix select_columns(const std::vector<std::size_t>& idx) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend Vector operator*(const Matrix& a, const Vector& v);

  Matrix& operator+=(const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Commutator ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Horizontal concatenation; row counts must agree.
Matrix hconcat(const Matrix& a, const Matrix& b);

/// Block diagonal sum.
Matrix block_diagonal(const Matrix& a, const Matrix& b);

/// Kronecker product.
Matrix kronecker(const Matrix& a, const Matrix& b);

Rational trace(const Matrix& a);

std::size_t rank(const Matrix& a);

/// Columns spanning the right kernel.
Matrix kernel(const Matrix& a);

/// The columns of `a` that are independent of all earlier columns.
std::vector<std::size_t> independent_columns(const Matrix& a);

/// A column basis of the column space, taken from the columns of `a`.
Matrix column_basis(const Matrix& a);

std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Throws std::domain_error when `a` is singular.
Matrix inverse(const Matrix& a);

/// Basis (as columns) of colspace(a) intersected with colspace(b).
Matrix intersect_columns(const Matrix& a, const Matrix& b);

/// Exponential of a nilpotent matrix; throws std::domain_error otherwise.
Matrix nilpotent_exp(const Matrix& a, const Rational& t);

bool is_nilpotent(const Matrix& a);

/// Coordinates with respect to a fixed full-column-rank basis.
///
/// Selects pivot positions P with basis[P] invertible, so coordinates are
/// basis[P]^{-1} x[P]; `contains` verifies membership exactly.
class SubspaceCoordinates {
 public:
  SubspaceCoordinates() = default;
  explicit SubspaceCoordinates(const Matrix& basis);

  std::size_t dim() const { return basis_.cols(); }
  std::size_t ambient_dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }

  /// Coordinates assuming x lies in the span.
  Vector coordinates(const Vector& x) const;
  std::optional<Vector> try_coordinates(const Vector& x) const;
  bool contains(const Vector& x) const;

 private:
  Matrix basis_;
  std::vector<std::size_t> positions_;
  // Sparse rows of basis[P]^{-1}.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> inverse_rows_;
};

std::string to_string(const Matrix& m);

}  // namespace gelfand
