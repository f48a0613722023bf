#include "gelfand/classical.hpp"

#include <vector>

namespace gelfand {

std::string to_string(ClassicalFamily family) {
  switch (family) {
    case ClassicalFamily::gl: return "gl";
    case ClassicalFamily::sl: return "sl";
    case ClassicalFamily::so: return "so";
    case ClassicalFamily::sp: return "sp";
  }
  return "gl";
}

Matrix matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

Matrix anti_diagonal_form(std::size_t m) {
  Matrix j(m, m);
  for (std::size_t i = 0; i < m; ++i) j(i, m - 1 - i) = 1;
  return j;
}

Matrix symplectic_form(std::size_t size) {
  const std::size_t n = size / 2;
  Matrix j(size, size);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, size - 1 - i) = 1;
    j(size - 1 - i, i) = -1;
  }
  return j;
}

namespace {

std::string unit_label(const std::string& head, std::size_t i, std::size_t j) {
  return head + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

struct Builder {
  std::size_t n;
  std::vector<Matrix> diag, upper, lower;
  std::vector<std::string> diag_labels, upper_labels, lower_labels;

  void add(const Matrix& m, const std::string& label, std::size_t i, std::size_t j) {
    if (i == j) {
      diag.push_back(m);
      diag_labels.push_back(label);
    } else if (i < j) {
      upper.push_back(m);
      upper_labels.push_back(label);
    } else {
      lower.push_back(m);
      lower_labels.push_back(label);
    }
  }

  LieAlgebra finish() const {
    std::vector<Matrix> basis = diag;
    basis.insert(basis.end(), upper.begin(), upper.end());
    basis.insert(basis.end(), lower.begin(), lower.end());
    std::vector<std::string> labels = diag_labels;
    labels.insert(labels.end(), upper_labels.begin(), upper_labels.end());
    labels.insert(labels.end(), lower_labels.begin(), lower_labels.end());
    std::vector<std::size_t> borel;
    for (std::size_t i = 0; i < diag.size() + upper.size(); ++i) borel.push_back(i);
    return algebra_from_matrices(basis, labels, AlgebraKind::Reductive, borel);
  }
};

}  // namespace

LieAlgebra classical_algebra(ClassicalFamily family, std::size_t size) {
  if (size == 0) throw GelfandError(ErrorKind::UnsupportedSize, "matrix size must be positive");
  if (family == ClassicalFamily::sp && size % 2 != 0)
    throw GelfandError(ErrorKind::UnsupportedSize, "symplectic algebras need an even matrix size");
  const std::size_t n = size;
  Builder b{n, {}, {}, {}, {}, {}, {}};
  switch (family) {
    case ClassicalFamily::gl:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b.add(matrix_unit(n, i, j), unit_label("E", i, j), i, j);
      break;
    case ClassicalFamily::sl:
      for (std::size_t i = 0; i + 1 < n; ++i)
        b.add(matrix_unit(n, i, i) - matrix_unit(n, i + 1, i + 1), "H" + std::to_string(i + 1), i, i);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) b.add(matrix_unit(n, i, j), unit_label("E", i, j), i, j);
      break;
    case ClassicalFamily::so:
      // E_ij - E_{j'i'} with i' = n-1-i; one representative per pair with i + j < n-1.
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (i + j >= n - 1) continue;
          Matrix m = matrix_unit(n, i, j) - matrix_unit(n, n - 1 - j, n - 1 - i);
          b.add(m, unit_label("X", i, j), i, j);
        }
      break;
    case ClassicalFamily::sp: {
      // E_ij - eps_i eps_j E_{j'i'} with eps = +1 on the first half.
      auto eps = [&](std::size_t i) { return i < n / 2 ? 1 : -1; };
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (i + j > n - 1) continue;
          Matrix m = matrix_unit(n, i, j);
          if (i + j < n - 1) m = m - Rational(eps(i) * eps(j)) * matrix_unit(n, n - 1 - j, n - 1 - i);
          b.add(m, unit_label("X", i, j), i, j);
        }
      break;
    }
  }
  LieAlgebra alg = b.finish();
  if (alg.dim() == 0) alg.kind = AlgebraKind::General;
  return alg;
}

LieAlgebra form_preserving_algebra(const Matrix& form, const std::string& prefix) {
  const std::size_t n = form.rows();
  // Unknown X flattened column-major: X(i, j) at index j * n + i.
  Matrix sys(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t row = a * n + c;
      // (X^T B)(a, c) = sum_i X(i, a) B(i, c); (B X)(a, c) = sum_i B(a, i) X(i, c).
      for (std::size_t i = 0; i < n; ++i) {
        if (form(i, c) != 0) sys(row, a * n + i) += form(i, c);
        if (form(a, i) != 0) sys(row, c * n + i) += form(a, i);
      }
    }
  Matrix ker = kernel(sys);
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < ker.cols(); ++k) {
    basis.push_back(Matrix::unflatten(n, n, primitive(ker.column(k))));
    labels.push_back(prefix + std::to_string(k + 1));
  }
  return algebra_from_matrices(basis, labels, AlgebraKind::Reductive);
}

}  // namespace gelfand
