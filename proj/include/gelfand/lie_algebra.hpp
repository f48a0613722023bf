#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gelfand/errors.hpp"
#include "gelfand/matrix.hpp"
#include "gelfand/rational.hpp"

namespace gelfand {

/// One nonzero coordinate of a sparse vector.
struct Term {
  std::size_t index;
  Rational coeff;
};
using SparseVector = std::vector<Term>;

/// Table c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : dim_(dim), table_(dim * dim) {}

  std::size_t dim() const { return dim_; }

  /// Adds `value` to c[i][j][k] without touching c[j][i][k].
  void add(std::size_t i, std::size_t j, std::size_t k, const Rational& value);
  /// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket(std::size_t i, std::size_t j, const Vector& v);

  const SparseVector& bracket(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  Rational coeff(std::size_t i, std::size_t j, std::size_t k) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  bool is_abelian() const;

  friend bool operator==(const StructureConstants& a, const StructureConstants& b);

 private:
  std::size_t dim_ = 0;
  std::vector<SparseVector> table_;
};

enum class AlgebraKind { Reductive, Nilpotent, General };

std::string to_string(AlgebraKind kind);

/// Finite-dimensional Lie algebra over the rationals.
struct LieAlgebra {
  StructureConstants sc;
  std::vector<std::string> labels;
  /// Faithful matrix realization, one matrix per basis vector.
  std::optional<std::vector<Matrix>> matrix_rep;
  /// Basis indices spanning a Borel subalgebra.
  std::optional<std::vector<std::size_t>> borel_indices;
  AlgebraKind kind = AlgebraKind::General;

  std::size_t dim() const { return sc.dim(); }
  Vector bracket(const Vector& x, const Vector& y) const { return sc.bracket(x, y); }
  /// Matrix of ad(x) in the basis.
  Matrix ad(const Vector& x) const;
  Matrix ad(std::size_t i) const;
  /// Sum of x_i times the i-th representing matrix.
  Matrix represent(const Vector& x) const;
  std::size_t rep_size() const;
};

bool operator==(const LieAlgebra& a, const LieAlgebra& b);

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

AlgebraPtr share(LieAlgebra alg);

/// Action of a Lie algebra on V: rho[i] is the matrix of e_i.
struct ModuleAction {
  AlgebraPtr algebra;
  std::size_t dimV = 0;
  std::vector<Matrix> rho;

  Matrix act(const Vector& x) const;
};

/// Subalgebra given by the images of its basis in the ambient coordinates.
struct SubalgebraEmbedding {
  AlgebraPtr ambient;
  Matrix inj;

  std::size_t dim() const { return inj.cols(); }
};

/// First basis triple (i < j < k) violating the Jacobi identity.
std::optional<std::vector<std::size_t>> jacobi_violation(const StructureConstants& sc);

/// Validates antisymmetry and the Jacobi identity.
/// Throws AntisymmetryViolation (i, j, k) or JacobiViolation (i, j, k).
LieAlgebra build_algebra(StructureConstants sc, std::vector<std::string> labels = {},
                         AlgebraKind kind = AlgebraKind::General);

/// Throws when the matrices fail to reproduce the brackets or Borel
/// indices fail to span a subalgebra.
void validate_realization(const LieAlgebra& alg);

/// Structure constants of the span of linearly independent matrices.
LieAlgebra algebra_from_matrices(const std::vector<Matrix>& basis, std::vector<std::string> labels,
                                 AlgebraKind kind, std::optional<std::vector<std::size_t>> borel = {});

LieAlgebra abelian_algebra(std::size_t dim, const std::string& prefix = "a");

/// Heisenberg algebra: x_1..x_n, y_1..y_n, z with [x_i, y_i] = z.
LieAlgebra heisenberg_algebra(std::size_t n);

/// Direct sum with block-diagonal matrices when both sides carry them.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Checks rho[[e_i,e_j]] = [rho_i, rho_j]; throws InvalidInput with (i, j).
void validate_action(const ModuleAction& act);

/// Throws NotDerivation with witness (xi, x, y) when some rho[xi] is not a
/// derivation of `n`.
void check_derivations(const LieAlgebra& n, const ModuleAction& act);

/// Semidirect sum with basis (l, n).
LieAlgebra semidirect(const LieAlgebra& l, const LieAlgebra& n, const ModuleAction& act);

/// Dimensions of the lower central series g, [g,g], [g,[g,g]], ...
/// ending at the first repeated dimension.
std::vector<std::size_t> lower_central_series_dims(const LieAlgebra& alg);
bool is_nilpotent(const LieAlgebra& alg);

/// Basis (columns) of [g, g].
Matrix derived_subalgebra(const LieAlgebra& alg);
/// Basis (columns) of the center.
Matrix center(const LieAlgebra& alg);

/// Embedding whose columns are the ambient coordinates of `mats`; throws
/// InvalidInput when some matrix is outside the ambient matrix span.
SubalgebraEmbedding embed_matrices(const AlgebraPtr& ambient, const std::vector<Matrix>& mats);

/// Throws InvalidInput unless inj has full column rank and a closed image.
void validate_embedding(const SubalgebraEmbedding& emb);

/// The subalgebra as an algebra in its own right, with induced matrices.
LieAlgebra induced_algebra(const SubalgebraEmbedding& emb, const std::string& prefix = "k");

/// Restriction of an action along an embedding into the acting algebra.
ModuleAction restrict_action(const ModuleAction& act, const SubalgebraEmbedding& emb);

/// True iff the column span is closed under the bracket.
bool is_subalgebra(const LieAlgebra& alg, const Matrix& span);

/// Adjoint action of an algebra on itself.
ModuleAction adjoint_action(const AlgebraPtr& alg);

/// Action on V given by the algebra's own matrices.
ModuleAction standard_action(const AlgebraPtr& alg);

}  // namespace gelfand
