#pragma once

#include <string>
#include <vector>

#include "gelfand/lie_algebra.hpp"
#include "gelfand/space.hpp"

namespace gelfand {

// Construction helpers shared by the named fixtures and the catalog.

/// Lifts a module of the summand starting at basis position `offset` of
/// `sum` (a direct sum of algebras) to the whole sum.
ModuleAction on_summand(const ModuleAction& act, const AlgebraPtr& sum, std::size_t offset);

/// Direct sum of several modules of one algebra.
ModuleAction direct_sum_all(const std::vector<ModuleAction>& parts);

/// Two-step nilpotent algebra w + z_1 + ... + z_r whose bracket w x w -> z_i
/// is the unique equivariant alternating map for each piece. Throws
/// EquivariantBracketNotUnique when some piece admits no map or several.
LieAlgebra two_step_algebra(const ModuleAction& w, const std::vector<ModuleAction>& z_pieces,
                            std::vector<std::string> labels = {});

/// Two-step algebra on w + z with the bracket given by a map
/// Lambda^2 w -> z (columns in the order of exterior_square).
LieAlgebra two_step_from_map(std::size_t dim_w, const Matrix& bracket, std::vector<std::string> labels = {});

/// Direct sum of algebras with the offsets of the summands.
struct ProductAlgebra {
  AlgebraPtr algebra;
  std::vector<AlgebraPtr> factors;
  std::vector<std::size_t> offsets;

  /// A module of one factor, the others acting trivially.
  ModuleAction lift(std::size_t factor, const ModuleAction& act) const;
  ModuleAction standard(std::size_t factor) const;
  ModuleAction adjoint(std::size_t factor) const;
  ModuleAction trivial(std::size_t dim) const;
  /// Columns (factor coordinates) carried to product coordinates.
  std::vector<Vector> embed(std::size_t factor, const Matrix& columns) const;
  std::vector<Vector> embed_all(std::size_t factor) const;
};

ProductAlgebra product_algebra(const std::vector<AlgebraPtr>& factors);

/// Heisenberg algebra on V + V* + C with [v, f] = f(v), built for a matrix
/// algebra acting on V by its standard action.
LieAlgebra heisenberg_over(std::size_t size);

/// Embedding of the span of given columns (ambient coordinates).
SubalgebraEmbedding span_embedding(const AlgebraPtr& ambient, const std::vector<Vector>& columns);

/// Diagonal copy of the first summand in a ⊕ a (both summands of dimension `dim`).
std::vector<Vector> diagonal_columns(std::size_t dim);

/// sp_n inside sl_2n or gl_2n, from the symplectic realization.
SubalgebraEmbedding symplectic_in(const AlgebraPtr& linear, std::size_t n);

/// gl_n inside so_2n (anti-diagonal form): stabilizer of both halves.
SubalgebraEmbedding unitary_in_orthogonal(const AlgebraPtr& so2n);

// Named fixtures.

/// (H_2 x| SU_2)/SU_2.
SpaceSpec fixture_h2_su2();
/// ((C^2 x H_2) x| SU_2)/SU_2.
SpaceSpec fixture_c2h2_su2();
/// (R^2n x| SO_2n)/U_n.
SpaceSpec fixture_r2n_so2n_un(std::size_t n);

enum class LinearGroup { Special, Full };
enum class SymplecticGroup { Plain, WithCenter };

/// (C^2n (+ R) x| (S)U_2n)/Sp_n(.U_1); `center` includes the central line.
SpaceSpec fixture_c2n_sp(std::size_t n, LinearGroup l, SymplecticGroup k, bool center);
/// (R^6 x| SU_4)/U_3 with R^6 = Λ^2 C^4.
SpaceSpec fixture_r6_su4_u3();
/// ((R^n x| SO_n) x SO_n)/SO_n with the diagonal SO_n.
SpaceSpec fixture_diag_so(std::size_t n);
/// ((H_n x| U_n) x SU_n)/U_n with the diagonal SU_n times the center.
SpaceSpec fixture_hn_un_sun(std::size_t n);
/// ((N x| (Sp_n x Sp_1)) x Sp_1)/(Sp_n x Sp_1), n = H^n + H_0, diagonal Sp_1.
SpaceSpec fixture_ex6_sp(std::size_t n);

}  // namespace gelfand
