#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gelfand/polynomial.hpp"
#include "gelfand/space.hpp"

namespace gelfand {

/// A Lie algebra acting linearly on the variables of a varspace; invariants
/// are the joint kernel of the extended derivations.
struct VarAction {
  VarSpacePtr vars;
  std::string algebra_id;
  std::vector<SparseOperator> ops;
  /// Weights of the variables under the diagonal span of `ops`
  /// (vars x torus rank); invariants have weight zero.
  Matrix weights;
};

/// Builds a VarAction from one module per block; every block of `vars`
/// must be covered. Throws BlockMismatch.
VarAction make_var_action(const VarSpacePtr& vars, const std::vector<std::pair<Block, ModuleAction>>& parts,
                          std::string algebra_id = "");

/// Completes `weights` from the operators.
VarAction with_weights(VarSpacePtr vars, std::vector<SparseOperator> ops, std::string algebra_id);

struct InvariantBasis {
  std::size_t degree = 0;
  std::optional<std::pair<std::size_t, std::size_t>> bidegree;
  GradedBasis basis;
  std::string algebra_id;

  std::size_t size() const { return basis.size(); }
};

/// Invariants of bidegree (dn, dl).
InvariantBasis invariant_basis(const VarAction& act, std::size_t dn, std::size_t dl);

/// Invariants of total degree d, as the union of the bidegree pieces with
/// decreasing n-degree.
InvariantBasis invariant_basis(const VarAction& act, std::size_t d);

struct HilbertProfile {
  /// dims[d] = dimension of the invariants of degree d.
  std::vector<std::size_t> dims;
};

HilbertProfile hilbert_profile(const VarAction& act, std::size_t d_max);

struct ConditionI {
  bool holds_up_to = true;
  std::optional<std::size_t> first_failure;
  HilbertProfile l_profile, k_profile;
  std::size_t d_max = 0;
};

/// Compares the invariants of l and of k on S(n) degree by degree.
ConditionI check_condition_i(const SpaceSpec& space, std::size_t d_max);

/// Action of l (resp. k) on the n variables.
VarAction l_on_n(const SpaceSpec& space);
VarAction k_on_n(const SpaceSpec& space);

/// Action of k on S(n + m) in the adapted basis.
VarAction k_on_reduced(const AdaptedSpace& space);

}  // namespace gelfand
