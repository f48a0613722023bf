#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gelfand/invariants.hpp"
#include "gelfand/space.hpp"

namespace gelfand {

/// The Lie algebra g whose symmetric algebra carries the bracket, with its
/// basis identified with the variables of `vars` (block map = var blocks).
struct BracketContext {
  LieAlgebra g;
  VarSpacePtr vars;
};

/// Throws InvalidInput when the sizes differ or the brackets leave the
/// blocks: [n, n] and [l, n] must lie in n, [l, l] must avoid n.
BracketContext make_context(LieAlgebra g, VarSpacePtr vars);

/// Context on the full adapted basis (n, m, k).
BracketContext make_context(const AdaptedSpace& space);

/// Extension of the Lie bracket to S(g) as a biderivation.
Polynomial poisson_bracket(const Polynomial& p, const Polynomial& q, const BracketContext& ctx);

struct BracketSplit {
  /// Terms from pairs of n letters.
  Polynomial bracket_n;
  /// Terms from pairs with at least one letter outside n.
  Polynomial bracket_l;
};

/// Throws NotBiHomogeneous.
BracketSplit bidegree_split(const Polynomial& p, const Polynomial& q, const BracketContext& ctx);

/// Bracket on S(n + m) = S(g)/(k): brackets of S(g) with k components of
/// [x_i, x_j] dropped. Arguments live over space.reduced.
Polynomial reduced_bracket(const Polynomial& a, const Polynomial& b, const AdaptedSpace& space);

/// The two parts of reduced_bracket, split as in bidegree_split.
BracketSplit reduced_split(const Polynomial& a, const Polynomial& b, const AdaptedSpace& space);

enum class CommutativityStatus { NonCommutative, CommutativeUpTo };

std::string to_string(CommutativityStatus status);

struct Witness {
  Polynomial a, b;
  /// reduced_bracket(a, b), exactly nonzero.
  Polynomial bracket;
  bool n_part_nonzero = false, l_part_nonzero = false;
};

struct CommutativityVerdict {
  CommutativityStatus status = CommutativityStatus::CommutativeUpTo;
  std::optional<Witness> witness;
  std::size_t degree_checked = 0;
  /// Invariant dimensions of S(n + m) per degree 0..degree_checked.
  std::vector<std::size_t> invariant_dims;
  std::size_t pairs_checked = 0;
};

/// Brackets of all invariant pairs (a, b), a before b, with degree sum at
/// most d_max + 1; pairs ordered by degree sum, then basis position. The
/// first nonzero bracket is the witness.
CommutativityVerdict check_commutative_direct(const AdaptedSpace& space, std::size_t d_max);
CommutativityVerdict check_commutative_direct(const SpaceSpec& space, std::size_t d_max);

/// Substitutes gamma (a covector on n) for the n letters.
Polynomial specialize_gamma(const Polynomial& a, const Vector& gamma, const AdaptedSpace& space);

/// Substitutes beta (a covector on m, in the adapted m basis) for the m letters.
Polynomial specialize_beta(const Polynomial& a, const Vector& beta, const AdaptedSpace& space);

/// The bracket of S(l_gamma / k_gamma) carried to the m letters through
/// l_gamma / k_gamma = l / k = m. Requires l = k + l_gamma; throws
/// InvalidInput otherwise.
Polynomial stabilizer_bracket(const Polynomial& a, const Polynomial& b, const Vector& gamma, const AdaptedSpace& space);

}  // namespace gelfand
