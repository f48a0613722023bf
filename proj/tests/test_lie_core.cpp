#include <gtest/gtest.h>

#include <random>

#include "gelfand/classical.hpp"
#include "gelfand/clifford.hpp"
#include "gelfand/lie_algebra.hpp"
#include "gelfand/modules.hpp"
#include "gelfand/octonion.hpp"
#include "gelfand/stabilizer.hpp"

using namespace gelfand;

namespace {

StructureConstants sl2_constants() {
  // h, e, f
  StructureConstants sc(3);
  sc.set_bracket(0, 1, {0, 2, 0});
  sc.set_bracket(0, 2, {0, 0, -2});
  sc.set_bracket(1, 2, {1, 0, 0});
  return sc;
}

void expect_lie(const LieAlgebra& alg) {
  const std::size_t d = alg.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        ASSERT_EQ(alg.sc.coeff(i, j, k), -alg.sc.coeff(j, i, k)) << i << " " << j << " " << k;
  EXPECT_FALSE(jacobi_violation(alg.sc).has_value());
  validate_realization(alg);
}

}  // namespace

TEST(BuildAlgebra, OneDimensionalIsAbelian) {
  LieAlgebra a = build_algebra(StructureConstants(1));
  EXPECT_EQ(a.dim(), 1u);
  EXPECT_TRUE(a.sc.is_abelian());
}

TEST(BuildAlgebra, Sl2IsValid) {
  LieAlgebra a = build_algebra(sl2_constants(), {"h", "e", "f"});
  EXPECT_EQ(a.dim(), 3u);
  EXPECT_EQ(a.sc.coeff(0, 1, 1), 2);
  EXPECT_EQ(a.sc.coeff(2, 1, 0), -1);
}

TEST(BuildAlgebra, SymmetricBracketIsRejected) {
  StructureConstants sc(3);
  sc.add(0, 1, 2, 1);
  sc.add(1, 0, 2, 1);
  try {
    build_algebra(sc);
    FAIL() << "expected AntisymmetryViolation";
  } catch (const GelfandError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AntisymmetryViolation);
    EXPECT_EQ(e.witness(), (std::vector<std::size_t>{0, 1, 2}));
  }
}

TEST(BuildAlgebra, JacobiFailureCarriesTriple) {
  // [e1,e2] = e1, [e2,e3] = e2, [e1,e3] = e3 breaks Jacobi.
  StructureConstants sc(3);
  sc.set_bracket(0, 1, {1, 0, 0});
  sc.set_bracket(1, 2, {0, 1, 0});
  sc.set_bracket(0, 2, {0, 0, 1});
  try {
    build_algebra(sc);
    FAIL() << "expected JacobiViolation";
  } catch (const GelfandError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::JacobiViolation);
    EXPECT_EQ(e.witness().size(), 3u);
  }
}

TEST(Classical, DimensionsMatchFormulas) {
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_EQ(classical_algebra(ClassicalFamily::gl, n).dim(), n * n);
    EXPECT_EQ(classical_algebra(ClassicalFamily::sl, n).dim(), n * n - 1);
    EXPECT_EQ(classical_algebra(ClassicalFamily::so, n).dim(), n * (n - 1) / 2);
  }
  for (std::size_t n = 1; n <= 3; ++n)
    EXPECT_EQ(classical_algebra(ClassicalFamily::sp, 2 * n).dim(), n * (2 * n + 1));
  EXPECT_EQ(classical_algebra(ClassicalFamily::sl, 2).dim(), 3u);
  EXPECT_EQ(classical_algebra(ClassicalFamily::sp, 4).dim(), 10u);
  EXPECT_EQ(classical_algebra(ClassicalFamily::so, 7).dim(), 21u);
}

TEST(Classical, BorelIsUpperTriangularSubalgebra) {
  for (auto [family, size] : {std::pair{ClassicalFamily::sl, 3}, {ClassicalFamily::so, 7},
                              {ClassicalFamily::so, 8}, {ClassicalFamily::sp, 6}}) {
    LieAlgebra a = classical_algebra(family, size);
    expect_lie(a);
    ASSERT_TRUE(a.borel_indices.has_value());
    const std::size_t rank = family == ClassicalFamily::sl ? size - 1 : size / 2;
    // dim b = rank + (dim - rank) / 2
    EXPECT_EQ(a.borel_indices->size(), rank + (a.dim() - rank) / 2) << to_string(family) << size;
    for (std::size_t i : *a.borel_indices) {
      const Matrix& m = (*a.matrix_rep)[i];
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < r; ++c) EXPECT_EQ(m(r, c), 0);
    }
  }
}

TEST(Classical, PreservesForms) {
  LieAlgebra so = classical_algebra(ClassicalFamily::so, 5);
  Matrix j = anti_diagonal_form(5);
  for (const Matrix& x : *so.matrix_rep) EXPECT_TRUE((x.transpose() * j + j * x).is_zero());
  LieAlgebra sp = classical_algebra(ClassicalFamily::sp, 4);
  Matrix w = symplectic_form(4);
  for (const Matrix& x : *sp.matrix_rep) EXPECT_TRUE((x.transpose() * w + w * x).is_zero());
  EXPECT_EQ(form_preserving_algebra(Matrix::identity(4)).dim(), 6u);
  EXPECT_EQ(form_preserving_algebra(w).dim(), 10u);
}

TEST(Classical, RejectsBadSizes) {
  EXPECT_THROW(classical_algebra(ClassicalFamily::sp, 3), GelfandError);
  EXPECT_THROW(classical_algebra(ClassicalFamily::gl, 0), GelfandError);
}

TEST(Heisenberg, Structure) {
  LieAlgebra h1 = heisenberg_algebra(1);
  EXPECT_EQ(h1.dim(), 3u);
  EXPECT_EQ(h1.bracket(unit_vector(3, 0), unit_vector(3, 1)), unit_vector(3, 2));
  EXPECT_TRUE(is_zero(h1.bracket(unit_vector(3, 0), unit_vector(3, 2))));
  LieAlgebra h2 = heisenberg_algebra(2);
  EXPECT_EQ(h2.dim(), 5u);
  EXPECT_EQ(derived_subalgebra(h2).cols(), 1u);
  EXPECT_EQ(center(h2).cols(), 1u);
  EXPECT_EQ(derived_subalgebra(h2).column(0), primitive(unit_vector(5, 4)));
  EXPECT_EQ(lower_central_series_dims(h2), (std::vector<std::size_t>{5, 1, 0}));
  EXPECT_TRUE(is_nilpotent(h2));
}

TEST(Semidirect, TrivialAndStandard) {
  LieAlgebra h1 = heisenberg_algebra(1);
  auto zero = share(abelian_algebra(0));
  LieAlgebra same = semidirect(*zero, h1, ModuleAction{zero, 3, {}});
  EXPECT_EQ(same.sc, h1.sc);

  auto sl2 = share(classical_algebra(ClassicalFamily::sl, 2));
  LieAlgebra c2 = abelian_algebra(2);
  LieAlgebra g = semidirect(*sl2, c2, standard_action(sl2));
  EXPECT_EQ(g.dim(), 5u);
  EXPECT_FALSE(jacobi_violation(g.sc).has_value());
  EXPECT_TRUE(is_zero(g.bracket(unit_vector(5, 3), unit_vector(5, 4))));
}

TEST(Semidirect, NonDerivationIsRejected) {
  auto sl2 = share(classical_algebra(ClassicalFamily::sl, 2));
  LieAlgebra h1 = heisenberg_algebra(1);
  // sl2 acting on span{x, y} standardly and on z by 1: fails on h.
  std::vector<Matrix> rho;
  for (const Matrix& m : *sl2->matrix_rep) {
    Matrix r(3, 3);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) r(i, j) = m(i, j);
    r(2, 2) = m(0, 0);
    rho.push_back(r);
  }
  try {
    semidirect(*sl2, h1, ModuleAction{sl2, 3, rho});
    FAIL() << "expected NotDerivation";
  } catch (const GelfandError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotDerivation);
    EXPECT_EQ(e.witness().size(), 3u);
  }
}

TEST(Octonions, NormIsMultiplicative) {
  std::mt19937_64 rng(11);
  for (const CompositionAlgebra& alg : {definite_octonions(), split_octonions()}) {
    EXPECT_EQ(alg.multiply(alg.unit(), unit_vector(8, 3)), unit_vector(8, 3));
    for (int t = 0; t < 20; ++t) {
      Vector x = random_point(rng, 8), y = random_point(rng, 8);
      EXPECT_EQ(alg.norm(alg.multiply(x, y)), alg.norm(x) * alg.norm(y));
      // alternative: (xx)y = x(xy)
      EXPECT_EQ(alg.multiply(alg.multiply(x, x), y), alg.multiply(x, alg.multiply(x, y)));
    }
    for (std::size_t i = 0; i < 7; ++i)
      EXPECT_EQ(dot(alg.unit(), alg.form() * alg.imaginary().column(i)), 0) << "imaginary basis " << i;
  }
}

TEST(Octonions, SplitImaginaryFormIsAntiDiagonal) {
  CompositionAlgebra alg = split_octonions();
  Matrix gram = alg.imaginary().transpose() * alg.form() * alg.imaginary();
  EXPECT_EQ(gram, Rational(-2) * anti_diagonal_form(7));
}

TEST(Octonions, DerivationsFormG2) {
  for (const CompositionAlgebra& alg : {definite_octonions(), split_octonions()}) {
    std::vector<Matrix> der = derivation_basis(alg);
    EXPECT_EQ(der.size(), 14u);
    for (const Matrix& d : der) EXPECT_TRUE(is_zero(d * alg.unit()));
    std::vector<Matrix> im = imaginary_derivations(alg);
    // xi(x * y) = xi x * y + x * xi y
    for (const Matrix& xi : im)
      for (std::size_t a = 0; a < 7; ++a)
        for (std::size_t b = 0; b < 7; ++b) {
          Vector x = unit_vector(7, a), y = unit_vector(7, b);
          EXPECT_EQ(xi * cross_product(alg, x, y),
                    cross_product(alg, xi * x, y) + cross_product(alg, x, xi * y));
        }
  }
}

TEST(Octonions, G2AndSpin7Embeddings) {
  for (OctonionForm form : {OctonionForm::Split, OctonionForm::Definite}) {
    SubalgebraEmbedding g2 = g2_in_so7(form);
    EXPECT_EQ(g2.dim(), 14u);
    EXPECT_EQ(rank(g2.inj), 14u);
    validate_embedding(g2);
    ModuleAction on7 = restrict_action(standard_action(g2.ambient), g2);
    EXPECT_EQ(invariant_vectors(on7).cols(), 0u) << "g2 fixes no vector";
    EXPECT_EQ(commutant_dim(on7), 1u) << "irreducible on 7 dimensions";

    SubalgebraEmbedding spin7 = spin7_in_so8(form);
    EXPECT_EQ(spin7.dim(), 21u);
    validate_embedding(spin7);
    EXPECT_EQ(commutant_dim(restrict_action(standard_action(spin7.ambient), spin7)), 1u);
  }
}

TEST(Clifford, Spin9InSo16) {
  std::vector<Matrix> gens = clifford_generators(9, 4);
  ASSERT_EQ(gens.size(), 9u);
  for (std::size_t a = 0; a < 9; ++a) {
    EXPECT_EQ(gens[a] * gens[a], Matrix::identity(16));
    EXPECT_EQ(gens[a].transpose(), gens[a]);
    for (std::size_t b = a + 1; b < 9; ++b) EXPECT_TRUE((gens[a] * gens[b] + gens[b] * gens[a]).is_zero());
  }
  SubalgebraEmbedding spin9 = spin9_in_so16();
  EXPECT_EQ(spin9.ambient->dim(), 120u);
  EXPECT_EQ(spin9.dim(), 36u);
  EXPECT_EQ(rank(spin9.inj), 36u);
}

namespace {

// Realified C^4 with sp4 acting: C^4 (x) C^2.
ModuleAction sp4_on_c4() {
  auto sp4 = share(classical_algebra(ClassicalFamily::sp, 4));
  return realified(standard_action(sp4));
}

}  // namespace

TEST(Stabilizer, ZeroPointGivesWholeAlgebra) {
  ModuleAction act = sp4_on_c4();
  EXPECT_EQ(coadjoint_stabilizer(act, Vector(8)).dim(), 10u);
}

TEST(Stabilizer, GenericPointsMatchCompactStabilizers) {
  std::mt19937_64 rng(3);
  ModuleAction sp = sp4_on_c4();
  SubalgebraEmbedding st = coadjoint_stabilizer(sp, random_point(rng, 8));
  EXPECT_EQ(st.dim(), 3u) << "sp_1 in sp_2";
  EXPECT_TRUE(is_subalgebra(*st.ambient, st.inj));

  auto so4 = share(classical_algebra(ClassicalFamily::so, 4));
  EXPECT_EQ(coadjoint_stabilizer(standard_action(so4), random_point(rng, 4)).dim(), 3u) << "so_3 in so_4";
}

TEST(Stabilizer, GenericStabilizerSamples) {
  auto ab = share(abelian_algebra(2));
  GenericStabilizer zero = generic_stabilizer(trivial_module(ab, 3), 5, 0);
  EXPECT_EQ(zero.stabilizer.dim(), 2u);
  EXPECT_EQ(zero.orbit_dim, 0u);

  // sp4 + sp2 on C^4 (x) C^2
  auto sp4 = share(classical_algebra(ClassicalFamily::sp, 4));
  auto sp2 = share(classical_algebra(ClassicalFamily::sp, 2));
  auto sum = share(direct_sum(*sp4, *sp2));
  ModuleAction a = along(standard_action(sp4), sum, first_projection(10, 3));
  ModuleAction b = along(standard_action(sp2), sum, second_projection(10, 3));
  GenericStabilizer g = generic_stabilizer(tensor(a, b), 5, 0);
  // The contraction of the two symplectic forms is an invariant quadratic
  // form on C^8, so generic orbits are its level hypersurfaces.
  EXPECT_EQ(g.orbit_dim, 7u);
  EXPECT_EQ(g.stabilizer.dim() + g.orbit_dim, 13u);

  auto gl2 = share(classical_algebra(ClassicalFamily::gl, 2));
  EXPECT_EQ(generic_stabilizer(realified(standard_action(gl2)), 5, 0).stabilizer.dim(), 1u);
}

TEST(Stabilizer, OrbitDimensionIsMonotoneInSamples) {
  ModuleAction act = sp4_on_c4();
  std::size_t last = 0;
  for (std::size_t s = 1; s <= 6; ++s) {
    std::size_t orbit = generic_stabilizer(act, s, 42).orbit_dim;
    EXPECT_GE(orbit, last);
    last = orbit;
  }
}

TEST(InvariantComplement, Examples) {
  auto sl2 = share(classical_algebra(ClassicalFamily::sl, 2));
  Matrix form = trace_form(*sl2);
  EXPECT_EQ(invariant_complement(*sl2, whole(sl2), form).cols(), 0u);

  Matrix torus(3, 1);
  torus(0, 0) = 1;
  Matrix m = invariant_complement(*sl2, {sl2, torus}, form);
  ASSERT_EQ(m.cols(), 2u);
  EXPECT_EQ(rank(hconcat(m, Matrix::from_columns(3, {unit_vector(3, 1), unit_vector(3, 2)}))), 2u);
  for (std::size_t c = 0; c < 2; ++c) {
    Vector br = sl2->bracket(torus.column(0), m.column(c));
    EXPECT_EQ(rank(hconcat(m, Matrix::from_columns(3, {br}))), 2u) << "ad-stable";
  }

  auto so4 = share(classical_algebra(ClassicalFamily::so, 4));
  Matrix lagrangian(4, 2), other(4, 2);
  lagrangian(0, 0) = lagrangian(1, 1) = 1;
  other(2, 0) = other(3, 1) = 1;
  ModuleAction std4 = standard_action(so4);
  SubalgebraEmbedding gl2 = intersect(subspace_stabilizer(std4, lagrangian), subspace_stabilizer(std4, other));
  EXPECT_EQ(gl2.dim(), 4u);
  EXPECT_EQ(invariant_complement(*so4, gl2, trace_form(*so4)).cols(), 2u);

  Matrix nilpotent(3, 1);
  nilpotent(1, 0) = 1;
  try {
    invariant_complement(*sl2, {sl2, nilpotent}, form);
    FAIL() << "expected DegenerateRestriction";
  } catch (const GelfandError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateRestriction);
  }
}

TEST(Factorization, Examples) {
  auto sl4 = share(classical_algebra(ClassicalFamily::sl, 4));
  std::vector<Matrix> sp4 = *form_preserving_algebra(symplectic_form(4)).matrix_rep;
  SubalgebraEmbedding sp = embed_matrices(sl4, sp4);
  Matrix e4(4, 1);
  e4(3, 0) = 1;
  Matrix first3(4, 3);
  for (std::size_t i = 0; i < 3; ++i) first3(i, i) = 1;
  ModuleAction std4 = standard_action(sl4);
  SubalgebraEmbedding corner = intersect(vector_stabilizer(std4, e4), subspace_stabilizer(dual(std4), e4));
  EXPECT_EQ(corner.dim(), 8u);
  Factorization f = factorization_check(*sl4, sp, corner);
  EXPECT_TRUE(f.holds);
  EXPECT_EQ(f.intersection_dim, 3u);
  EXPECT_EQ(sp.dim() + corner.dim() - f.intersection_dim, f.sum_dim);
  EXPECT_FALSE(factorization_check(*sl4, sp, sp).holds);

  SubalgebraEmbedding g2 = g2_in_so7(OctonionForm::Definite);
  Matrix e1(7, 1);
  e1(0, 0) = 1;
  SubalgebraEmbedding so6 = vector_stabilizer(standard_action(g2.ambient), e1);
  EXPECT_EQ(so6.dim(), 15u);
  Factorization h = factorization_check(*g2.ambient, g2, so6);
  EXPECT_TRUE(h.holds);
  EXPECT_EQ(h.intersection_dim, 8u);
}
