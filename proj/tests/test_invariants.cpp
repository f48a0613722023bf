#include <gtest/gtest.h>

#include <random>

#include "gelfand/classical.hpp"
#include "gelfand/invariants.hpp"
#include "gelfand/modules.hpp"
#include "gelfand/stabilizer.hpp"

using namespace gelfand;

namespace {

VarSpacePtr n_vars(std::size_t count) { return std::make_shared<VarSpace>(std::vector<VarBlock>{{Block::n, count}}); }

VarAction on_n(const ModuleAction& act) { return make_var_action(n_vars(act.dimV), {{Block::n, act}}); }

void expect_annihilated(const VarAction& act, const GradedBasis& basis) {
  for (const Polynomial& p : basis.elements)
    for (const SparseOperator& op : act.ops) EXPECT_TRUE(apply_derivation(op, p).is_zero()) << to_string(p);
}

// gl2 inside so4 (anti-diagonal form): stabilizer of both isotropic planes.
SubalgebraEmbedding unitary_in_so4(const AlgebraPtr& so4) {
  Matrix lagrangian(4, 2), other(4, 2);
  lagrangian(0, 0) = lagrangian(1, 1) = 1;
  other(2, 0) = other(3, 1) = 1;
  ModuleAction std4 = standard_action(so4);
  return intersect(subspace_stabilizer(std4, lagrangian), subspace_stabilizer(std4, other));
}

}  // namespace

TEST(InvariantBasis, TrivialActionGivesWholePiece) {
  auto so3 = share(classical_algebra(ClassicalFamily::so, 3));
  VarAction act = on_n(trivial_module(so3, 3));
  for (std::size_t d = 0; d <= 4; ++d) EXPECT_EQ(invariant_basis(act, d).size(), multiset_coefficient(3, d));
}

TEST(InvariantBasis, OrthogonalQuadraticForm) {
  auto so3 = share(classical_algebra(ClassicalFamily::so, 3));
  VarAction act = on_n(standard_action(so3));
  InvariantBasis q = invariant_basis(act, 2);
  ASSERT_EQ(q.size(), 1u);
  // The inverse of the anti-diagonal form is itself: q = 2 x1 x3 + x2^2.
  const VarSpacePtr& vars = q.basis.elements[0].vars();
  Polynomial expected = Rational(2) * Polynomial::variable(vars, 0) * Polynomial::variable(vars, 2) +
                        Polynomial::variable(vars, 1) * Polynomial::variable(vars, 1);
  EXPECT_EQ(q.basis.elements[0], expected);
  expect_annihilated(act, q.basis);
}

TEST(InvariantBasis, SymplecticHasNoQuadratic) {
  auto sp4 = share(classical_algebra(ClassicalFamily::sp, 4));
  VarAction act = on_n(standard_action(sp4));
  EXPECT_EQ(invariant_basis(act, 2).size(), 0u);
  EXPECT_EQ(invariant_basis(act, 1).size(), 0u);
}

TEST(InvariantBasis, PairingOfVectorAndCovector) {
  auto gl3 = share(classical_algebra(ClassicalFamily::gl, 3));
  ModuleAction v = standard_action(gl3);
  auto vars = std::make_shared<VarSpace>(std::vector<VarBlock>{{Block::n, 3}, {Block::m, 3}});
  VarAction act = make_var_action(vars, {{Block::n, v}, {Block::m, dual(v)}});
  InvariantBasis pairing = invariant_basis(act, 1, 1);
  ASSERT_EQ(pairing.size(), 1u);
  EXPECT_EQ(pairing.bidegree, (std::pair<std::size_t, std::size_t>{1, 1}));
  EXPECT_EQ(invariant_basis(act, 2, 0).size(), 0u);
  EXPECT_EQ(invariant_basis(act, 0, 2).size(), 0u);
  EXPECT_EQ(invariant_basis(act, 2).size(), 1u);
}

TEST(InvariantBasis, MissingBlockIsRejected) {
  auto gl2 = share(classical_algebra(ClassicalFamily::gl, 2));
  auto vars = std::make_shared<VarSpace>(std::vector<VarBlock>{{Block::n, 2}, {Block::m, 2}});
  try {
    make_var_action(vars, {{Block::n, standard_action(gl2)}});
    FAIL() << "expected BlockMismatch";
  } catch (const GelfandError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BlockMismatch);
  }
  try {
    make_var_action(vars, {{Block::n, standard_action(gl2)}, {Block::m, trivial_module(gl2, 3)}});
    FAIL() << "expected BlockMismatch";
  } catch (const GelfandError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BlockMismatch);
  }
}

TEST(InvariantBasis, WeightFilterMatchesUnfilteredKernel) {
  // The weight filter only discards monomials no invariant can use.
  auto sl3 = share(classical_algebra(ClassicalFamily::sl, 3));
  ModuleAction adj = adjoint_action(sl3);
  VarAction act = on_n(adj);
  EXPECT_GT(act.weights.cols(), 0u);
  VarAction unweighted = act;
  unweighted.weights = Matrix(adj.dimV, 0);
  for (std::size_t d = 0; d <= 3; ++d)
    EXPECT_EQ(invariant_basis(act, d).size(), invariant_basis(unweighted, d).size()) << d;
  EXPECT_EQ(invariant_basis(act, 2).size(), 1u);
  EXPECT_EQ(invariant_basis(act, 3).size(), 1u);
}

TEST(HilbertProfile, OrthogonalAndUnitaryOnFourSpace) {
  auto so4 = share(classical_algebra(ClassicalFamily::so, 4));
  ModuleAction std4 = standard_action(so4);
  std::vector<std::size_t> expected{1, 0, 1, 0, 1};
  EXPECT_EQ(hilbert_profile(on_n(std4), 4).dims, expected);
  EXPECT_EQ(hilbert_profile(on_n(restrict_action(std4, unitary_in_so4(so4))), 4).dims, expected);
}

TEST(HilbertProfile, ZeroAlgebraOnOneVariable) {
  auto zero = share(abelian_algebra(0));
  std::vector<std::size_t> expected{1, 1, 1};
  EXPECT_EQ(hilbert_profile(on_n(trivial_module(zero, 1)), 2).dims, expected);
}

TEST(ConditionI, OrthogonalVersusUnitary) {
  auto so4 = share(classical_algebra(ClassicalFamily::so, 4));
  SpaceSpec s = make_space("r4", abelian_algebra(4, "x"), so4, standard_action(so4), unitary_in_so4(so4));
  ConditionI c = check_condition_i(s, 4);
  EXPECT_TRUE(c.holds_up_to);
  EXPECT_FALSE(c.first_failure.has_value());
  EXPECT_EQ(c.l_profile.dims, c.k_profile.dims);
}

TEST(ConditionI, TorusInSl2Fails) {
  auto sl2 = share(classical_algebra(ClassicalFamily::sl, 2));
  SpaceSpec s = make_space("c2", abelian_algebra(2, "x"), sl2, standard_action(sl2),
                           embed_matrices(sl2, {sl2->represent(unit_vector(3, 0))}));
  ConditionI c = check_condition_i(s, 4);
  EXPECT_FALSE(c.holds_up_to);
  ASSERT_TRUE(c.first_failure.has_value());
  EXPECT_EQ(*c.first_failure, 2u);
  EXPECT_EQ(c.k_profile.dims[2], 1u);
  EXPECT_EQ(c.l_profile.dims[2], 0u);
}

TEST(InvariantProperties, LargerAlgebraInvariantsAreContained) {
  auto so4 = share(classical_algebra(ClassicalFamily::so, 4));
  ModuleAction std4 = standard_action(so4);
  VarAction big = on_n(std4), small = on_n(restrict_action(std4, unitary_in_so4(so4)));
  for (std::size_t d = 0; d <= 4; ++d) {
    InvariantBasis l = invariant_basis(big, d), k = invariant_basis(small, d);
    expect_annihilated(small, l.basis);
    std::vector<Polynomial> both = k.basis.elements;
    both.insert(both.end(), l.basis.elements.begin(), l.basis.elements.end());
    EXPECT_EQ(polynomial_rank(both), k.size()) << "degree " << d;
  }
}

TEST(InvariantProperties, ProductsOfInvariantsAreInvariant) {
  auto so4 = share(classical_algebra(ClassicalFamily::so, 4));
  ModuleAction std4 = standard_action(so4);
  VarAction act = on_n(restrict_action(std4, unitary_in_so4(so4)));
  std::mt19937_64 rng(3);
  std::vector<Polynomial> pool;
  for (std::size_t d = 1; d <= 2; ++d)
    for (const Polynomial& p : invariant_basis(act, d).basis.elements) pool.push_back(p);
  ASSERT_FALSE(pool.empty());
  for (int trial = 0; trial < 6; ++trial) {
    const Polynomial& a = pool[rng() % pool.size()];
    const Polynomial& b = pool[rng() % pool.size()];
    GradedBasis prod;
    prod.elements.push_back(a * b);
    expect_annihilated(act, prod);
  }
}
