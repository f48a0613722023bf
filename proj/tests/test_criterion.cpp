#include <gtest/gtest.h>

#include "gelfand/classical.hpp"
#include "gelfand/criterion.hpp"
#include "gelfand/fixtures.hpp"
#include "gelfand/modules.hpp"
#include "gelfand/octonion.hpp"
#include "gelfand/stabilizer.hpp"

using namespace gelfand;

namespace {

AlgebraPtr sl(std::size_t n) { return share(classical_algebra(ClassicalFamily::sl, n)); }

SubalgebraEmbedding sl2_torus(const AlgebraPtr& sl2) { return embed_matrices(sl2, {sl2->represent(unit_vector(3, 0))}); }

// Diagonal sl_2 in the direct sum of `copies` copies.
SubalgebraEmbedding diagonal_sl2(const AlgebraPtr& sum, std::size_t copies) {
  std::vector<Vector> cols;
  for (std::size_t a = 0; a < 3; ++a) {
    Vector v(3 * copies);
    for (std::size_t c = 0; c < copies; ++c) v[3 * c + a] = 1;
    cols.push_back(v);
  }
  return span_embedding(sum, cols);
}

AlgebraPtr sl2_power(std::size_t copies) {
  LieAlgebra out = *sl(2);
  for (std::size_t c = 1; c < copies; ++c) out = direct_sum(out, *sl(2));
  return share(std::move(out));
}

std::vector<SpaceSpec> criterion_fixtures() {
  return {fixture_h2_su2(),
          fixture_c2h2_su2(),
          fixture_r2n_so2n_un(2),
          fixture_c2n_sp(2, LinearGroup::Special, SymplecticGroup::Plain, true),
          fixture_r6_su4_u3(),
          fixture_diag_so(3),
          fixture_ex6_sp(1)};
}

// (C^2 (x) C^2 x| SL_2 x SL_2)/SL_2 with K the first factor.
SpaceSpec one_factor_of_so4() {
  auto s = sl(2);
  auto l = share(direct_sum(*s, *s));
  ModuleAction act = tensor(on_summand(standard_action(s), l, 0), on_summand(standard_action(s), l, 3));
  return make_space("r4_so4_su2", abelian_algebra(4, "x"), l, act,
                    span_embedding(l, {unit_vector(6, 0), unit_vector(6, 1), unit_vector(6, 2)}));
}

// Pair (l, k) with n = 0.
SpaceSpec reductive_pair(const AlgebraPtr& l, const SubalgebraEmbedding& k) {
  return make_space("pair", abelian_algebra(0), l, trivial_module(l, 0), k);
}

}  // namespace

TEST(Sphericality, TorusInSl2) {
  auto s = sl(2);
  SphericalityVerdict v = sphericality_check(*s, sl2_torus(s), 8, 0);
  EXPECT_TRUE(v.spherical);
  EXPECT_EQ(v.achieved_dim, 3u);
  EXPECT_EQ(v.target_dim, 3u);
  EXPECT_FALSE(v.witness.empty());
}

TEST(Sphericality, DiagonalInSl2Squared) {
  auto g = sl2_power(2);
  SphericalityVerdict v = sphericality_check(*g, diagonal_sl2(g, 2), 8, 0);
  EXPECT_TRUE(v.spherical);
  EXPECT_EQ(v.achieved_dim, 6u);
  EXPECT_FALSE(v.witness.empty());
}

TEST(Sphericality, G2InSo7) {
  SubalgebraEmbedding g2 = g2_in_so7();
  SphericalityVerdict v = sphericality_check(*g2.ambient, g2, 8, 0);
  EXPECT_TRUE(v.spherical);
  EXPECT_EQ(v.achieved_dim, 21u);
  EXPECT_FALSE(v.witness.empty());
}

TEST(Sphericality, DiagonalInSl2FourthPowerIsNotSpherical) {
  auto g = sl2_power(4);
  for (std::uint64_t seed : {0u, 1u}) {
    SphericalityVerdict v = sphericality_check(*g, diagonal_sl2(g, 4), 8, seed);
    EXPECT_FALSE(v.spherical);
    EXPECT_EQ(v.samples_used, 8u);
    EXPECT_EQ(v.achieved_dim, 11u);
    // dim b = 8 and dim h = 3 fall short of 12.
    EXPECT_TRUE(v.dimension_obstruction);
  }
}

TEST(Sphericality, WitnessReproducesFullDimension) {
  auto g = sl2_power(2);
  SubalgebraEmbedding h = diagonal_sl2(g, 2);
  SphericalityVerdict v = sphericality_check(*g, h, 8, 3);
  ASSERT_TRUE(v.spherical);
  Matrix ad_u = Matrix::identity(g->dim());
  for (const UnipotentFactor& f : v.witness) ad_u = ad_u * nilpotent_exp(g->ad(f.index), f.coeff);
  Matrix b(g->dim(), g->borel_indices->size());
  for (std::size_t c = 0; c < b.cols(); ++c) b((*g->borel_indices)[c], c) = 1;
  EXPECT_EQ(rank(hconcat(b, ad_u * h.inj)), g->dim());
}

TEST(Sphericality, MonotoneInSamples) {
  auto g = sl2_power(3);
  SubalgebraEmbedding h = diagonal_sl2(g, 3);
  std::size_t previous = 0;
  for (std::size_t samples = 1; samples <= 6; ++samples) {
    SphericalityVerdict v = sphericality_check(*g, h, samples, 9);
    EXPECT_GE(v.achieved_dim, previous);
    previous = v.achieved_dim;
  }
}

TEST(Sphericality, MissingBorelData) {
  LieAlgebra h = heisenberg_algebra(1);
  auto hp = share(h);
  try {
    sphericality_check(h, whole(hp), 2, 0);
    FAIL() << "expected MissingBorelData";
  } catch (const GelfandError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingBorelData);
  }
}

TEST(BorelBasis, WholeSo5) {
  auto so5 = share(classical_algebra(ClassicalFamily::so, 5));
  std::mt19937_64 rng(1);
  BorelBasis b = borel_basis(whole(so5), rng);
  ASSERT_TRUE(b.algebra.borel_indices.has_value());
  // Rank 2 plus 4 positive roots.
  EXPECT_EQ(b.algebra.borel_indices->size(), 6u);
  EXPECT_TRUE(is_subalgebra(*so5, b.basis.select_columns(*b.algebra.borel_indices)));
  validate_realization(b.algebra);
}

TEST(BorelBasis, RejectsNonReductive) {
  auto s = sl(2);
  // Upper triangular: eigenvalues 0 and 2 are not paired.
  SubalgebraEmbedding upper = span_embedding(s, {unit_vector(3, 0), unit_vector(3, 1)});
  std::mt19937_64 rng(1);
  try {
    borel_basis(upper, rng);
    FAIL() << "expected BorelConstructionFailed";
  } catch (const GelfandError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BorelConstructionFailed);
  }
}

TEST(BorelBasis, RejectsSubalgebraWithoutDiagonalCartan) {
  // G2 on the definite octonions has no diagonal elements.
  std::mt19937_64 rng(1);
  try {
    borel_basis(g2_in_so7(OctonionForm::Definite), rng);
    FAIL() << "expected BorelConstructionFailed";
  } catch (const GelfandError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BorelConstructionFailed);
  }
}

TEST(ConditionII, OrthogonalOnFourSpace) {
  ConditionII c = check_condition_ii(fixture_r2n_so2n_un(2), 5, 0);
  EXPECT_FALSE(c.error.has_value());
  EXPECT_EQ(c.l_gamma_dim, 3u);
  EXPECT_EQ(c.k_gamma_dim, 1u);
  EXPECT_TRUE(c.holds());
}

TEST(ConditionII, HeisenbergUnderSpecialUnitary) {
  ConditionII c = check_condition_ii(fixture_c2n_sp(2, LinearGroup::Special, SymplecticGroup::Plain, true), 5, 0);
  EXPECT_FALSE(c.error.has_value());
  EXPECT_EQ(c.l_gamma_dim, 8u);
  EXPECT_EQ(c.k_gamma_dim, 3u);
  EXPECT_TRUE(c.holds());
}

TEST(ConditionII, ZeroNilradicalFallsBackToThePair) {
  auto g = sl2_power(4);
  ConditionII c = check_condition_ii(reductive_pair(g, diagonal_sl2(g, 4)), 8, 0);
  EXPECT_FALSE(c.error.has_value());
  EXPECT_EQ(c.l_gamma_dim, 12u);
  EXPECT_EQ(c.k_gamma_dim, 3u);
  ASSERT_TRUE(c.verdict.has_value());
  EXPECT_FALSE(c.verdict->spherical);
  EXPECT_TRUE(c.verdict->dimension_obstruction);
}

TEST(ConditionII, OneFactorOfSo4Fails) {
  ConditionII c = check_condition_ii(one_factor_of_so4(), 5, 0);
  EXPECT_EQ(c.l_gamma_dim, 3u);
  EXPECT_EQ(c.k_gamma_dim, 0u);
  EXPECT_FALSE(c.holds());
}

TEST(ConditionII, StabilizerDimensionIdentities) {
  for (const SpaceSpec& s : criterion_fixtures()) {
    ConditionII c = check_condition_ii(s, 5, 0);
    const std::size_t dl = s.l->dim(), dk = s.k.dim();
    SubalgebraEmbedding lg = coadjoint_stabilizer(s.act, c.gamma);
    EXPECT_EQ(lg.dim() + c.orbit_dim, dl) << s.name;
    EXPECT_EQ(lg.dim(), c.l_gamma_dim) << s.name;
    // k_gamma two ways: inside l_gamma, and as a stabilizer in k.
    SubalgebraEmbedding in_k = coadjoint_stabilizer(restrict_action(s.act, s.k), c.gamma);
    EXPECT_EQ(in_k.dim(), c.k_gamma_dim) << s.name;
    EXPECT_EQ(dl - dk, c.l_gamma_dim - c.k_gamma_dim) << s.name;
  }
}

TEST(ConditionII, UnitaryStabilizerMatchesGl3) {
  // gl_4 on C^4 + C^4*: generic stabilizer gl_3, meeting sp_4 in sp_2.
  auto gl4 = share(classical_algebra(ClassicalFamily::gl, 4));
  ModuleAction act = realified(standard_action(gl4));
  GenericStabilizer st = generic_stabilizer(act, 5, 0);
  EXPECT_EQ(st.stabilizer.dim(), 9u);
  EXPECT_EQ(intersect(st.stabilizer, symplectic_in(gl4, 2)).dim(), 3u);
}

TEST(GenericStabilizer, SymplecticAndOrthogonal) {
  auto sp4 = share(classical_algebra(ClassicalFamily::sp, 4));
  EXPECT_EQ(generic_stabilizer(realified(standard_action(sp4)), 5, 0).stabilizer.dim(), 3u);
  auto so4 = share(classical_algebra(ClassicalFamily::so, 4));
  EXPECT_EQ(generic_stabilizer(standard_action(so4), 5, 0).stabilizer.dim(), 3u);
}

TEST(ConditionIII, HeisenbergUnderSpecialUnitary) {
  ConditionIII c = check_condition_iii(fixture_c2n_sp(2, LinearGroup::Special, SymplecticGroup::Plain, true), 5, 0, 4);
  // sp_4 on sl_4 / sp_4 (the 5-dimensional orthogonal module): so_4.
  EXPECT_EQ(c.k_beta_dim, 6u);
  EXPECT_TRUE(c.holds());
}

TEST(ConditionIII, EmptyComplementKeepsK) {
  ConditionIII c = check_condition_iii(fixture_h2_su2(), 5, 0, 4);
  EXPECT_EQ(c.k_beta_dim, 3u);
  EXPECT_EQ(c.samples_used, 0u);
  EXPECT_TRUE(c.holds());
  ConditionIII bad = check_condition_iii(fixture_c2h2_su2(), 5, 0, 4);
  EXPECT_FALSE(bad.holds());
}

TEST(ConditionIII, DiagonalOrthogonal) {
  ConditionIII c = check_condition_iii(fixture_diag_so(3), 5, 0, 4);
  // so_3 on m = so_3: a generic stabilizer is a torus.
  EXPECT_EQ(c.k_beta_dim, 1u);
  EXPECT_TRUE(c.holds());
}

TEST(RunCriterion, AgreesWithDirectCheckOnFixtures) {
  for (const SpaceSpec& s : criterion_fixtures()) {
    CriterionReport r = run_criterion(s, 4, 5, 0);
    EXPECT_TRUE(r.errors.empty()) << s.name;
    EXPECT_TRUE(r.agreement) << s.name;
    const bool counterexample = s.name == "c2h2_su2";
    EXPECT_EQ(r.direct_commutative(), !counterexample) << s.name;
    EXPECT_EQ(r.conditions_hold(), !counterexample) << s.name;
  }
}

TEST(RunCriterion, CounterexampleFailsConditionIII) {
  CriterionReport r = run_criterion(fixture_c2h2_su2(), 4, 5, 0);
  ASSERT_TRUE(r.direct.has_value());
  EXPECT_EQ(r.direct->status, CommutativityStatus::NonCommutative);
  EXPECT_TRUE(r.direct->witness.has_value());
  EXPECT_TRUE(r.cond_i->holds_up_to);
  EXPECT_TRUE(r.cond_ii.holds());
  EXPECT_FALSE(r.cond_iii->holds());
  EXPECT_TRUE(r.agreement);
}

TEST(RunCriterion, OneFactorOfSo4) {
  CriterionReport r = run_criterion(one_factor_of_so4(), 4, 5, 0);
  EXPECT_FALSE(r.direct_commutative());
  EXPECT_FALSE(r.cond_ii.holds());
  EXPECT_TRUE(r.agreement);
}

TEST(RunCriterion, TorusInSl2FailsConditionI) {
  auto s = sl(2);
  SpaceSpec space = make_space("c2_torus", abelian_algebra(2, "x"), s, standard_action(s), sl2_torus(s));
  CriterionReport r = run_criterion(space, 4, 5, 0);
  EXPECT_FALSE(r.cond_i->holds_up_to);
  EXPECT_FALSE(r.direct_commutative());
  EXPECT_TRUE(r.agreement);
}

TEST(RunCriterion, EmptySpaceIsVacuous) {
  auto s = sl(2);
  CriterionReport r = run_criterion(reductive_pair(s, whole(s)), 4, 5, 0);
  EXPECT_TRUE(r.conditions_hold());
  EXPECT_TRUE(r.direct_commutative());
  EXPECT_TRUE(r.agreement);
}

TEST(RunCriterion, DeterministicGivenSeed) {
  SpaceSpec s = fixture_r6_su4_u3();
  CriterionReport a = run_criterion(s, 4, 5, 7), b = run_criterion(s, 4, 5, 7);
  EXPECT_EQ(a.cond_ii.gamma, b.cond_ii.gamma);
  EXPECT_EQ(a.cond_iii->beta, b.cond_iii->beta);
  EXPECT_EQ(a.cond_ii.verdict->samples_used, b.cond_ii.verdict->samples_used);
}

TEST(HeisenbergDecompose, UnitaryOnHeisenbergIsOneComponent) {
  auto gl2 = share(classical_algebra(ClassicalFamily::gl, 2));
  SpaceSpec s = heisenberg_type_space("h2_u2", heisenberg_over(2),
                                      direct_sum(realified(standard_action(gl2)), trivial_module(gl2, 1)));
  HeisenbergDecomposition d = heisenberg_type_decompose(s, 4, 5, 0);
  EXPECT_EQ(d.piece_dims, (std::vector<std::size_t>{2, 2}));
  ASSERT_EQ(d.components.size(), 1u);
  EXPECT_EQ(d.components[0].w_dim, 4u);
  EXPECT_EQ(d.components[0].n_dim, 5u);
  EXPECT_EQ(d.components[0].k_dim, 4u);
  EXPECT_TRUE(d.violations.empty());
  EXPECT_TRUE(d.commutative());
}

TEST(HeisenbergDecompose, TwoQuaternionicBlocksWithTori) {
  // l = sl_2 + gl_1 + gl_1; block i is H^1 + R with the i-th circle.
  auto s = sl(2);
  auto gl1 = share(classical_algebra(ClassicalFamily::gl, 1));
  auto l = share(direct_sum(direct_sum(*s, *gl1), *gl1));
  ModuleAction v = on_summand(standard_action(s), l, 0);
  std::vector<LieAlgebra> blocks;
  std::vector<ModuleAction> modules;
  for (std::size_t i = 0; i < 2; ++i) {
    ModuleAction twisted = realified(tensor(v, on_summand(standard_action(gl1), l, 3 + i)));
    blocks.push_back(two_step_algebra(twisted, {trivial_module(l, 1)}));
    modules.push_back(direct_sum(twisted, trivial_module(l, 1)));
  }
  LieAlgebra n = direct_sum(blocks[0], blocks[1]);
  n.kind = AlgebraKind::Nilpotent;
  SpaceSpec space = heisenberg_type_space("h1r_h1r", std::move(n), direct_sum(modules[0], modules[1]));
  validate_space(space);
  HeisenbergDecomposition d = heisenberg_type_decompose(space, 4, 5, 0);
  EXPECT_EQ(d.piece_dims, (std::vector<std::size_t>{2, 2, 2, 2}));
  ASSERT_EQ(d.components.size(), 2u);
  for (const HeisenbergComponent& c : d.components) {
    EXPECT_EQ(c.w_dim, 4u);
    EXPECT_EQ(c.n_dim, 5u);
    EXPECT_EQ(c.verdict.status, CommutativityStatus::CommutativeUpTo);
  }
  EXPECT_TRUE(d.violations.empty());
  EXPECT_FALSE(d.split_incomplete);
  EXPECT_TRUE(d.commutative());
}

TEST(HeisenbergDecompose, MutualBracketOfOrthogonalBlocksIsAViolation) {
  auto so3 = share(classical_algebra(ClassicalFamily::so, 3));
  ModuleAction v = standard_action(so3);
  ModuleAction w = direct_sum(v, v);
  LieAlgebra n = two_step_algebra(w, {trivial_module(so3, 1)});
  SpaceSpec space = heisenberg_type_space("r3r3_so3", std::move(n), direct_sum(w, trivial_module(so3, 1)));
  validate_space(space);
  HeisenbergDecomposition d = heisenberg_type_decompose(space, 4, 5, 0);
  EXPECT_EQ(d.piece_dims, (std::vector<std::size_t>{3, 3}));
  EXPECT_EQ(d.components.size(), 2u);
  EXPECT_EQ(d.violations, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}}));
  EXPECT_FALSE(d.commutative());
  EXPECT_EQ(check_commutative_direct(space, 4).status, CommutativityStatus::NonCommutative);
}

TEST(HeisenbergDecompose, RequiresHeisenbergType) {
  EXPECT_THROW(heisenberg_type_decompose(fixture_r2n_so2n_un(2), 4, 5, 0), GelfandError);
}
