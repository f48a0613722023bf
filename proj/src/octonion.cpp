#include "gelfand/octonion.hpp"

#include <array>

#include "gelfand/classical.hpp"
#include "gelfand/sparse_linalg.hpp"

namespace gelfand {

CompositionAlgebra::CompositionAlgebra(std::vector<Vector> table, Matrix form, Vector unit, Matrix imaginary)
    : table_(std::move(table)), form_(std::move(form)), unit_(std::move(unit)), imaginary_(std::move(imaginary)) {}

Vector CompositionAlgebra::multiply(const Vector& x, const Vector& y) const {
  const std::size_t d = dim();
  Vector r(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j] == 0) continue;
      const Rational s = x[i] * y[j];
      const Vector& p = basis_product(i, j);
      for (std::size_t k = 0; k < d; ++k)
        if (p[k] != 0) r[k] += s * p[k];
    }
  }
  return r;
}

Matrix CompositionAlgebra::left_multiplication(const Vector& x) const {
  const std::size_t d = dim();
  Matrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) m.set_column(j, multiply(x, unit_vector(d, j)));
  return m;
}

Rational CompositionAlgebra::norm(const Vector& x) const { return dot(x, form_ * x) / 2; }

CompositionAlgebra definite_octonions() {
  std::vector<Vector> table(64, Vector(8));
  for (std::size_t i = 0; i < 8; ++i) {
    table[i] = unit_vector(8, i);
    table[i * 8] = unit_vector(8, i);
  }
  for (std::size_t i = 1; i < 8; ++i) table[i * 8 + i][0] = -1;
  for (std::size_t i = 0; i < 7; ++i) {
    // (a, b, c) = (e_i, e_{i+1}, e_{i+3}) and its cyclic shifts multiply as quaternions.
    std::array<std::size_t, 3> t{i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1};
    for (std::size_t s = 0; s < 3; ++s) {
      std::size_t a = t[s], b = t[(s + 1) % 3], c = t[(s + 2) % 3];
      table[a * 8 + b] = unit_vector(8, c);
      table[b * 8 + a] = Rational(-1) * unit_vector(8, c);
    }
  }
  Matrix imaginary(8, 7);
  for (std::size_t i = 0; i < 7; ++i) imaginary(i + 1, i) = 1;
  return CompositionAlgebra(std::move(table), Rational(2) * Matrix::identity(8), unit_vector(8, 0),
                            std::move(imaginary));
}

namespace {

using Triple = std::array<Rational, 3>;

Triple cross(const Triple& x, const Triple& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

Rational dot3(const Triple& x, const Triple& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; }

// Zorn vector matrix (a, v, w, b) stored as (a, v1, v2, v3, w1, w2, w3, b).
Vector zorn_product(const Vector& x, const Vector& y) {
  const Rational &a = x[0], &b = x[7], &a2 = y[0], &b2 = y[7];
  Triple v{x[1], x[2], x[3]}, w{x[4], x[5], x[6]};
  Triple v2{y[1], y[2], y[3]}, w2{y[4], y[5], y[6]};
  Triple ww = cross(w, w2), vv = cross(v, v2);
  Vector r(8);
  r[0] = a * a2 + dot3(v, w2);
  r[7] = b * b2 + dot3(w, v2);
  for (std::size_t i = 0; i < 3; ++i) {
    r[1 + i] = a * v2[i] + b2 * v[i] + ww[i];
    r[4 + i] = a2 * w[i] + b * w2[i] - vv[i];
  }
  return r;
}

}  // namespace

CompositionAlgebra split_octonions() {
  // New basis (a, v1, v2, v3, -w3, -w2, -w1, b) in Zorn coordinates.
  Matrix change(8, 8);
  change(0, 0) = 1;
  for (std::size_t i = 0; i < 3; ++i) {
    change(1 + i, 1 + i) = 1;
    change(6 - i, 4 + i) = -1;
  }
  change(7, 7) = 1;
  Matrix back = inverse(change);
  std::vector<Vector> table(64);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      table[i * 8 + j] = back * zorn_product(change.column(i), change.column(j));
  Vector unit(8);
  unit[0] = 1;
  unit[7] = 1;
  // Imaginary basis (v1, v2, v3, a - b, 2w3, 2w2, 2w1).
  Matrix imaginary(8, 7);
  for (std::size_t i = 0; i < 3; ++i) {
    imaginary(1 + i, i) = 1;
    imaginary(4 + i, 4 + i) = -2;
  }
  imaginary(0, 3) = 1;
  imaginary(7, 3) = -1;
  return CompositionAlgebra(std::move(table), anti_diagonal_form(8), std::move(unit), std::move(imaginary));
}

std::vector<Matrix> derivation_basis(const CompositionAlgebra& alg) {
  const std::size_t d = alg.dim();
  // Unknown D(r, c) at index c * d + r; one equation per (i, j, r).
  Echelon ech(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t r = 0; r < d; ++r) {
        Vector row(d * d);
        const Vector& p = alg.basis_product(i, j);
        for (std::size_t k = 0; k < d; ++k)
          if (p[k] != 0) row[k * d + r] += p[k];
        for (std::size_t s = 0; s < d; ++s) {
          const Rational& left = alg.basis_product(s, j)[r];
          if (left != 0) row[i * d + s] -= left;
          const Rational& right = alg.basis_product(i, s)[r];
          if (right != 0) row[j * d + s] -= right;
        }
        if (!is_zero(row)) ech.insert(row);
      }
  std::vector<Matrix> out;
  for (const Vector& v : ech.kernel()) out.push_back(Matrix::unflatten(d, d, primitive(v)));
  return out;
}

std::vector<Matrix> imaginary_derivations(const CompositionAlgebra& alg) {
  SubspaceCoordinates coords(alg.imaginary());
  const std::size_t m = alg.imaginary().cols();
  std::vector<Matrix> out;
  for (const Matrix& d : derivation_basis(alg)) {
    Matrix r(m, m);
    for (std::size_t c = 0; c < m; ++c) r.set_column(c, coords.coordinates(d * alg.imaginary().column(c)));
    out.push_back(r);
  }
  return out;
}

Vector cross_product(const CompositionAlgebra& alg, const Vector& x, const Vector& y) {
  const Matrix& im = alg.imaginary();
  Vector px = im * x, py = im * y;
  Vector c = alg.multiply(px, py) - alg.multiply(py, px);
  return Rational(1, 2) * SubspaceCoordinates(im).coordinates(c);
}

std::vector<Matrix> spin7_matrices(const CompositionAlgebra& alg) {
  const Matrix& im = alg.imaginary();
  std::vector<Matrix> left;
  for (std::size_t i = 0; i < im.cols(); ++i) left.push_back(alg.left_multiplication(im.column(i)));
  const std::size_t d = alg.dim();
  Echelon ech(d * d);
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = i + 1; j < left.size(); ++j) {
      Matrix c = commutator(left[i], left[j]);
      if (ech.insert(c.flatten())) out.push_back(c);
    }
  return out;
}

namespace {

AlgebraPtr orthogonal_ambient(OctonionForm form, std::size_t m) {
  if (form == OctonionForm::Split) return share(classical_algebra(ClassicalFamily::so, m));
  return share(form_preserving_algebra(Matrix::identity(m)));
}

}  // namespace

SubalgebraEmbedding g2_in_so7(OctonionForm form) {
  CompositionAlgebra alg = form == OctonionForm::Split ? split_octonions() : definite_octonions();
  return embed_matrices(orthogonal_ambient(form, 7), imaginary_derivations(alg));
}

SubalgebraEmbedding spin7_in_so8(OctonionForm form) {
  CompositionAlgebra alg = form == OctonionForm::Split ? split_octonions() : definite_octonions();
  return embed_matrices(orthogonal_ambient(form, 8), spin7_matrices(alg));
}

}  // namespace gelfand
