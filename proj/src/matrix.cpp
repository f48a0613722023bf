#include "gelfand/matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "gelfand/sparse_linalg.hpp"

namespace gelfand {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

void Matrix::set_column(std::size_t j, const Vector& v) {
  if (v.size() != rows_) throw std::invalid_argument("set_column: length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& x : data_)
    if (x != 0) ++n;
  return n;
}

Vector Matrix::flatten() const {
  Vector v(rows_ * cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i) v[j * rows_ + i] = (*this)(i, j);
  return v;
}

Matrix Matrix::unflatten(std::size_t rows, std::size_t cols, const Vector& v) {
  Matrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = v[j * rows + i];
  return m;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  Matrix m(rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) m(i, j) = (*this)(i, idx[j]);
  return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix m(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix c = a;
  c += b;
  return c;
}

Matrix& Matrix::operator+=(const Matrix& b) {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (b.data_[k] != 0) data_[k] += b.data_[k];
  return *this;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape");
  Matrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k)
    if (b.data_[k] != 0) c.data_[k] -= b.data_[k];
  return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b(k, j);
        if (y != 0) c(i, j) += x * y;
      }
    }
  return c;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix c = a;
  for (auto& x : c.data_)
    if (x != 0) x *= s;
  return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape");
  Vector r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (v[k] != 0 && a(i, k) != 0) r[i] += a(i, k) * v[k];
  return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix hconcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row mismatch");
  Matrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
  return c;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (b(k, l) != 0) c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return c;
}

Rational trace(const Matrix& a) {
  Rational t = 0;
  for (std::size_t i = 0; i < a.rows() && i < a.cols(); ++i) t += a(i, i);
  return t;
}

std::size_t rank(const Matrix& a) {
  Echelon e(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) e.insert(a.row(i));
  return e.rank();
}

Matrix kernel(const Matrix& a) {
  Echelon e(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) e.insert(a.row(i));
  return Matrix::from_columns(a.cols(), e.kernel());
}

std::vector<std::size_t> independent_columns(const Matrix& a) {
  Echelon e(a.rows());
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (e.insert(a.column(j))) idx.push_back(j);
  return idx;
}

Matrix column_basis(const Matrix& a) { return a.select_columns(independent_columns(a)); }

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  Echelon e(a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Vector r = a.row(i);
    r.push_back(b[i]);
    e.insert(r);
  }
  Vector x;
  if (!e.particular_solution(x)) return std::nullopt;
  return x;
}

Matrix inverse(const Matrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::domain_error("inverse: not square");
  Matrix m = a;
  Matrix inv = Matrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) throw std::domain_error("inverse: singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(p, j), m(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    Rational s = 1 / m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      if (m(c, j) != 0) m(c, j) *= s;
      if (inv(c, j) != 0) inv(c, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (m(c, j) != 0) m(i, j) -= f * m(c, j);
        if (inv(c, j) != 0) inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Matrix intersect_columns(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("intersect_columns: row mismatch");
  Matrix joint = hconcat(a, Rational(-1) * b);
  Matrix ker = kernel(joint);
  std::vector<Vector> vecs;
  for (std::size_t k = 0; k < ker.cols(); ++k) {
    Vector x(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) x[j] = ker(j, k);
    vecs.push_back(a * x);
  }
  return column_basis(Matrix::from_columns(a.rows(), vecs));
}

bool is_nilpotent(const Matrix& a) {
  if (a.rows() != a.cols()) return false;
  Matrix p = a;
  for (std::size_t k = 1; k < a.rows(); ++k) {
    if (p.is_zero()) return true;
    p = p * a;
  }
  return p.is_zero();
}

Matrix nilpotent_exp(const Matrix& a, const Rational& t) {
  const std::size_t n = a.rows();
  Matrix result = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = (t / Rational(static_cast<long>(k))) * (term * a);
    if (term.is_zero()) return result;
    result += term;
  }
  if (!term.is_zero()) throw std::domain_error("nilpotent_exp: matrix is not nilpotent");
  return result;
}

SubspaceCoordinates::SubspaceCoordinates(const Matrix& basis) : basis_(basis) {
  Echelon e(basis.rows());
  for (std::size_t j = 0; j < basis.cols(); ++j)
    if (!e.insert(basis.column(j)))
      throw std::invalid_argument("SubspaceCoordinates: basis is not independent");
  positions_ = e.pivot_columns();
  Matrix inv = inverse(basis.select_rows(positions_));
  inverse_rows_.resize(inv.rows());
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t j = 0; j < inv.cols(); ++j)
      if (inv(i, j) != 0) inverse_rows_[i].emplace_back(j, inv(i, j));
}

Vector SubspaceCoordinates::coordinates(const Vector& x) const {
  Vector c(basis_.cols());
  for (std::size_t i = 0; i < inverse_rows_.size(); ++i)
    for (const auto& [j, v] : inverse_rows_[i]) {
      const Rational& xi = x[positions_[j]];
      if (xi != 0) c[i] += v * xi;
    }
  return c;
}

std::optional<Vector> SubspaceCoordinates::try_coordinates(const Vector& x) const {
  Vector c = coordinates(x);
  if (basis_ * c != x) return std::nullopt;
  return c;
}

bool SubspaceCoordinates::contains(const Vector& x) const { return try_coordinates(x).has_value(); }

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << to_string(m(i, j));
  }
  os << "]";
  return os.str();
}

}  // namespace gelfand
