#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gelfand/lie_algebra.hpp"
#include "gelfand/polynomial.hpp"

namespace gelfand {

/// X = (N x| L)/K at the Lie algebra level.
struct SpaceSpec {
  std::string name;
  LieAlgebra n;
  AlgebraPtr l;
  /// Invariant symmetric form on l; may be empty when k = l.
  Matrix form;
  ModuleAction act;
  SubalgebraEmbedding k;
  /// Columns span the k-stable complement m of k in l (l coordinates).
  Matrix m_basis;
};

/// Field-wise equality, comparing l by value.
bool operator==(const SpaceSpec& a, const SpaceSpec& b);

/// Assembles a space, computing m from `form` (the trace form of l when
/// empty). Does not validate; see validate_space.
SpaceSpec make_space(std::string name, LieAlgebra n, AlgebraPtr l, ModuleAction act, SubalgebraEmbedding k,
                     Matrix form = {});

/// Heisenberg-type space (l = k, m = 0).
SpaceSpec heisenberg_type_space(std::string name, LieAlgebra n, ModuleAction act);

/// Throws NotDerivation, InvalidInput (n not nilpotent, m not a k-stable
/// complement, action not a homomorphism).
void validate_space(const SpaceSpec& space);

/// True iff k = l.
bool is_heisenberg_type(const SpaceSpec& space);

/// The semidirect sum g = l + n in the adapted basis (n, m, k) with the
/// variable spaces and the k-action on S(n + m) that all checks share.
struct AdaptedSpace {
  SpaceSpec spec;
  /// m basis refined into weight spaces of the diagonal torus of k.
  Matrix m_basis;
  LieAlgebra g;
  std::size_t dn = 0, dm = 0, dk = 0;
  /// Blocks n, m, k.
  VarSpacePtr full;
  /// Blocks n, m (the reduced bracket lives here).
  VarSpacePtr reduced;
  /// One operator per k basis vector, acting on the reduced variables.
  std::vector<SparseOperator> k_ops;
};

AdaptedSpace adapt(const SpaceSpec& space);

/// Splits the columns of `basis` (a subspace of l stable under the torus)
/// into joint weight spaces of the k elements whose matrices are diagonal.
Matrix weight_refined(const LieAlgebra& l, const SubalgebraEmbedding& k, const Matrix& basis);

/// Elements of the embedding (ambient coordinates) whose matrices are diagonal.
Matrix diagonal_part(const SubalgebraEmbedding& emb);

/// The same algebra in a new basis (columns in old coordinates), with the
/// matrix realization transported when present.
LieAlgebra rebase(const LieAlgebra& alg, const Matrix& basis, std::vector<std::string> labels = {});

/// Quotient of n by an l-invariant central ideal z0 of [n, n]; the default
/// z0 is center(n) intersected with [n, n]. Throws InvalidInput when z0 is
/// not central or not invariant.
SpaceSpec central_reduction(const SpaceSpec& space, std::optional<Matrix> z0 = std::nullopt);

/// The same data with the bracket of n replaced by zero.
SpaceSpec zero_bracket(const SpaceSpec& space);

}  // namespace gelfand
