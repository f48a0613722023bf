#pragma once

#include <cstddef>
#include <string>

#include "gelfand/lie_algebra.hpp"

namespace gelfand {

enum class ClassicalFamily { gl, sl, so, sp };

std::string to_string(ClassicalFamily family);

/// Complexified classical algebra realized by `size` x `size` matrices.
///
/// so preserves the anti-diagonal form and sp preserves
/// [[0, K], [-K, 0]] with K anti-diagonal, so in every family the
/// upper-triangular part is a Borel subalgebra. Basis order: diagonal
/// (Cartan) elements, then upper, then lower root vectors.
/// Throws UnsupportedSize for size 0 or odd symplectic size.
LieAlgebra classical_algebra(ClassicalFamily family, std::size_t size);

/// Symmetric form with ones on the anti-diagonal.
Matrix anti_diagonal_form(std::size_t m);

/// Skew form [[0, K], [-K, 0]] of size 2n with K the n x n anti-diagonal.
Matrix symplectic_form(std::size_t size);

/// {X : X^T B + B X = 0} for a nondegenerate bilinear form B, spanned by
/// a kernel basis; carries no Borel data.
LieAlgebra form_preserving_algebra(const Matrix& form, const std::string& prefix = "o");

/// Matrix unit E_{ij} (0-based).
Matrix matrix_unit(std::size_t n, std::size_t i, std::size_t j);

}  // namespace gelfand
