#pragma once

#include <vector>

#include "gelfand/lie_algebra.hpp"

namespace gelfand {

/// Dual module, rho*(x) = -rho(x)^T.
ModuleAction dual(const ModuleAction& act);

/// V + W for two modules of the same algebra.
ModuleAction direct_sum(const ModuleAction& a, const ModuleAction& b);

/// V (x) W for two modules of the same algebra.
ModuleAction tensor(const ModuleAction& a, const ModuleAction& b);

/// Exterior square in the basis v_i ^ v_j, i < j (lexicographic).
ModuleAction exterior_square(const ModuleAction& act);

/// Symmetric square in the basis v_i v_j, i <= j (lexicographic).
ModuleAction symmetric_square(const ModuleAction& act);

ModuleAction trivial_module(const AlgebraPtr& alg, std::size_t dim);

/// Complexification of the realification of a complex module: V + V*.
ModuleAction realified(const ModuleAction& act);

/// Pulls an action back along a homomorphism `target -> act.algebra`
/// given by the matrix `hom` (columns: images of target basis vectors).
ModuleAction along(const ModuleAction& act, const AlgebraPtr& target, const Matrix& hom);

/// Action on an invariant subspace, in the coordinates of its column basis.
/// Throws InvalidInput when the subspace is not invariant.
ModuleAction submodule(const ModuleAction& act, const Matrix& basis);

/// Projections from a direct sum of algebras onto its two summands.
Matrix first_projection(std::size_t da, std::size_t db);
Matrix second_projection(std::size_t da, std::size_t db);

/// Basis of equivariant linear maps V -> W, as matrices dimW x dimV.
std::vector<Matrix> equivariant_maps(const ModuleAction& from, const ModuleAction& to);

/// Dimension of the commutant of the action; 1 for absolutely irreducible
/// modules of reductive algebras.
std::size_t commutant_dim(const ModuleAction& act);

/// Joint kernel of the action: vectors annihilated by every rho[i].
Matrix invariant_vectors(const ModuleAction& act);

/// Invariant complement of the invariant subspace `sub` (columns): the
/// kernel of an equivariant projection onto it. Throws InvalidInput when
/// no such projection exists.
Matrix module_complement(const ModuleAction& act, const Matrix& sub);

/// The span of `sub` in a basis of joint eigenvectors of the basis elements
/// acting by diagonal matrices; `sub` must be stable under them.
Matrix weight_adapted(const ModuleAction& act, const Matrix& sub);

/// One-dimensional module on which e_i acts by values[i].
ModuleAction character(const AlgebraPtr& alg, const Vector& values);

}  // namespace gelfand
