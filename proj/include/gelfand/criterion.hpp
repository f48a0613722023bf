#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gelfand/invariants.hpp"
#include "gelfand/poisson.hpp"
#include "gelfand/space.hpp"

namespace gelfand {

/// Default number of random points per check.
inline constexpr std::size_t kDefaultSamples = 5;

/// One factor exp(coeff * ad e_index) of the unipotent element u.
struct UnipotentFactor {
  std::size_t index;
  Rational coeff;
};

struct SphericalityVerdict {
  /// True only with a witness u reaching the full dimension.
  bool spherical = false;
  std::size_t samples_used = 0;
  /// Largest dim(b + Ad(u) h) seen.
  std::size_t achieved_dim = 0;
  std::size_t target_dim = 0;
  std::vector<UnipotentFactor> witness;
  /// dim b + dim h < dim g: no orbit can be open.
  bool dimension_obstruction = false;
};

/// Tests whether B has an open orbit on G/H: dim(b + Ad(u) h) = dim g for
/// some u in the unipotent radical opposite to b, sampled as a product of
/// exponentials of the nilpotent basis vectors outside b. Throws
/// MissingBorelData without borel_indices or matrix_rep.
SphericalityVerdict sphericality_check(const LieAlgebra& g, const SubalgebraEmbedding& h, std::size_t samples,
                                       std::uint64_t seed);

/// A subalgebra of l in a basis (Cartan, positive, negative) adapted to a
/// regular element of its diagonal part.
struct BorelBasis {
  LieAlgebra algebra;
  /// Basis in l coordinates.
  Matrix basis;
};

/// Borel data for a reductive subalgebra of a matrix algebra from a random
/// element of its diagonal part. Throws BorelConstructionFailed when that
/// element does not cut out a Cartan subalgebra or the eigenvalues are not
/// paired (non-reductive input).
BorelBasis borel_basis(const SubalgebraEmbedding& sub, std::mt19937_64& rng);

struct ConditionII {
  std::optional<SphericalityVerdict> verdict;
  /// The covector used (a structured generic point).
  Vector gamma;
  std::size_t orbit_dim = 0, l_gamma_dim = 0, k_gamma_dim = 0;
  /// Set when l_gamma lies in k, so the pair is trivially spherical.
  bool trivial = false;
  std::optional<std::string> error;

  bool holds() const { return verdict && verdict->spherical; }
};

/// Sphericality of (l_gamma, k_gamma) at a generic gamma in n*. The point is
/// searched among sparse covectors supported on pairs of opposite weights
/// so that l_gamma contains a Cartan subalgebra of diagonal matrices.
/// BorelConstructionFailed is recorded in `error`, never guessed.
ConditionII check_condition_ii(const SpaceSpec& space, std::size_t samples, std::uint64_t seed,
                               const std::optional<Vector>& gamma_hint = std::nullopt);

struct ConditionIII {
  CommutativityVerdict verdict;
  std::size_t k_beta_dim = 0;
  Vector beta;
  std::size_t samples_used = 0;
  /// The maximal orbit dimension was met by a single sample even after
  /// escalating the sample count.
  bool low_confidence = false;

  bool holds() const { return verdict.status != CommutativityStatus::NonCommutative; }
};

/// Action of k on m = l/k: rho(xi) u = projection of [xi, u] to m.
ModuleAction k_on_m(const AdaptedSpace& space);

/// Commutativity of (N x| K_beta)/K_beta at a generic beta in m*.
ConditionIII check_condition_iii(const SpaceSpec& space, std::size_t samples, std::uint64_t seed, std::size_t d_max);

struct CriterionReport {
  std::string space_name;
  std::size_t d_max = 0, samples = 0;
  std::uint64_t seed = 0;
  std::optional<ConditionI> cond_i;
  ConditionII cond_ii;
  std::optional<ConditionIII> cond_iii;
  std::optional<CommutativityVerdict> direct;
  /// Failures of the sub-checks, as "<check>: <message>".
  std::vector<std::string> errors;

  bool conditions_hold() const;
  bool direct_commutative() const;
  /// Conditions and direct check agree and nothing failed to run.
  bool agreement = false;
};

/// Runs (i), (ii), (iii) and the direct check; sub-check errors are recorded
/// in the report.
CriterionReport run_criterion(const SpaceSpec& space, std::size_t d_max, std::size_t samples, std::uint64_t seed);

struct HeisenbergComponent {
  /// Indices of the invariant pieces of n/[n, n] forming w_i.
  std::vector<std::size_t> pieces;
  std::size_t w_dim = 0, n_dim = 0;
  /// Generic stabilizer in k of the other components.
  std::size_t k_dim = 0;
  CommutativityVerdict verdict;
};

struct HeisenbergDecomposition {
  /// Dimensions of the k-invariant pieces of n/[n, n].
  std::vector<std::size_t> piece_dims;
  std::vector<HeisenbergComponent> components;
  /// Pairs of components (i, j) with [w_i, w_j] != 0.
  std::vector<std::pair<std::size_t, std::size_t>> violations;
  /// Some piece has a commutant larger than the scalars but no rational
  /// splitting was found; its block is kept whole.
  bool split_incomplete = false;

  bool commutative() const;
};

/// Splits n/[n, n] into k-invariant pieces, groups the pieces that together
/// complexify one real irreducible (dual pairs of complex type, symplectic
/// pairs of quaternionic type) when they bracket, and checks each
/// n_i = w_i + [w_i, w_i] under the generic stabilizer of the other
/// components. Throws InvalidInput unless k = l.
HeisenbergDecomposition heisenberg_type_decompose(const SpaceSpec& space, std::size_t d_max, std::size_t samples,
                                                  std::uint64_t seed);

}  // namespace gelfand
