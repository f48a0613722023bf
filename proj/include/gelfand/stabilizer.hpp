#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gelfand/lie_algebra.hpp"

namespace gelfand {

/// Default half-width of the integer box for random points.
inline constexpr int kSampleBound = 7;

/// Point with integer coordinates uniform in [-bound, bound].
Vector random_point(std::mt19937_64& rng, std::size_t dim, int bound = kSampleBound);

/// Stabilizer {xi : point o rho[xi] = 0} of a covector under the dual action.
SubalgebraEmbedding coadjoint_stabilizer(const ModuleAction& act, const Vector& point);

struct GenericStabilizer {
  SubalgebraEmbedding stabilizer;
  std::size_t orbit_dim = 0;
  /// The sampled covector realizing the maximum.
  Vector point;
};

/// Coadjoint stabilizer at the first of `samples` random covectors with the
/// largest orbit dimension. Deterministic in (samples, seed).
GenericStabilizer generic_stabilizer(const ModuleAction& act, std::size_t samples, std::uint64_t seed);

/// {xi : rho[xi] v = 0 for every column v}.
SubalgebraEmbedding vector_stabilizer(const ModuleAction& act, const Matrix& vectors);

/// {xi : rho[xi] W is contained in W} for W the column span.
SubalgebraEmbedding subspace_stabilizer(const ModuleAction& act, const Matrix& subspace);

/// {x : [x, y] = 0 for every column y}.
SubalgebraEmbedding centralizer(const AlgebraPtr& alg, const Matrix& elements);

/// Intersection of two embeddings into the same ambient algebra.
SubalgebraEmbedding intersect(const SubalgebraEmbedding& a, const SubalgebraEmbedding& b);

/// Embedding of the whole algebra.
SubalgebraEmbedding whole(const AlgebraPtr& alg);

/// Trace form tr(rho(x) rho(y)) of the matrix realization.
Matrix trace_form(const LieAlgebra& alg);

/// Orthogonal complement of k with respect to an invariant form; throws
/// DegenerateRestriction when the form is degenerate on k.
Matrix invariant_complement(const LieAlgebra& l, const SubalgebraEmbedding& k, const Matrix& form);

struct Factorization {
  bool holds = false;
  std::size_t intersection_dim = 0;
  std::size_t sum_dim = 0;
};

/// Whether g = g1 + g2 as vector spaces, with the intersection dimension.
Factorization factorization_check(const LieAlgebra& g, const SubalgebraEmbedding& g1, const SubalgebraEmbedding& g2);

}  // namespace gelfand
