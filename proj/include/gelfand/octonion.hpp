#pragma once

#include <vector>

#include "gelfand/lie_algebra.hpp"

namespace gelfand {

/// Unital algebra with a nondegenerate multiplicative norm N(x) = B(x, x) / 2.
class CompositionAlgebra {
 public:
  /// table[i * dim + j] is the product of basis vectors i and j; the
  /// columns of `imaginary` span the orthogonal complement of the unit.
  CompositionAlgebra(std::vector<Vector> table, Matrix form, Vector unit, Matrix imaginary);

  std::size_t dim() const { return form_.rows(); }
  const Vector& basis_product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Vector multiply(const Vector& x, const Vector& y) const;
  Matrix left_multiplication(const Vector& x) const;
  /// Polarized norm, B(x, x) = 2 N(x).
  const Matrix& form() const { return form_; }
  Rational norm(const Vector& x) const;
  const Vector& unit() const { return unit_; }
  const Matrix& imaginary() const { return imaginary_; }

 private:
  std::vector<Vector> table_;
  Matrix form_;
  Vector unit_;
  Matrix imaginary_;
};

/// Real octonions on 1, e1..e7 with e_i e_{i+1} = e_{i+3} (indices mod 7).
/// The polarized norm is twice the identity.
CompositionAlgebra definite_octonions();

/// Split octonions (Zorn vector matrices) in a basis where the polarized
/// norm is the anti-diagonal form; the imaginary basis is chosen so the
/// restricted form is -2 times the anti-diagonal form.
CompositionAlgebra split_octonions();

/// Basis of {D : D(xy) = D(x)y + xD(y)}.
std::vector<Matrix> derivation_basis(const CompositionAlgebra& alg);

/// Derivations restricted to the imaginary part, in the imaginary basis.
std::vector<Matrix> imaginary_derivations(const CompositionAlgebra& alg);

/// Cross product x * y = Im(xy) on imaginary coordinates.
Vector cross_product(const CompositionAlgebra& alg, const Vector& x, const Vector& y);

/// Span of [L_u, L_v] over imaginary u, v: the spin representation of so_7.
std::vector<Matrix> spin7_matrices(const CompositionAlgebra& alg);

enum class OctonionForm { Split, Definite };

/// G2 as derivations of the octonions inside so_7. The split form lands in
/// classical so_7 (anti-diagonal, with Borel); the definite form lands in
/// skew-symmetric matrices.
SubalgebraEmbedding g2_in_so7(OctonionForm form = OctonionForm::Split);

/// Spin_7 acting on the octonions inside so_8, same conventions.
SubalgebraEmbedding spin7_in_so8(OctonionForm form = OctonionForm::Split);

}  // namespace gelfand
