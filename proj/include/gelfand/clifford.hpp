#pragma once

#include <vector>

#include "gelfand/lie_algebra.hpp"

namespace gelfand {

/// `count` pairwise anticommuting symmetric signed-permutation matrices of
/// size 2^factors that square to the identity, built as tensor words in
/// {1, sigma_x, sigma_z, i sigma_y}. Throws UnsupportedSize when the
/// search cannot find that many.
std::vector<Matrix> clifford_generators(std::size_t count, std::size_t factors);

/// Span of products g_a g_b (a < b) of Clifford generators: a spin algebra.
std::vector<Matrix> spin_matrices(const std::vector<Matrix>& generators);

/// Spin_9 acting on its 16-dimensional spinor module inside skew-symmetric
/// 16 x 16 matrices.
SubalgebraEmbedding spin9_in_so16();

}  // namespace gelfand
