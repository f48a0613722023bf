#include <gtest/gtest.h>

#include <random>

#include "gelfand/classical.hpp"
#include "gelfand/modules.hpp"
#include "gelfand/polynomial.hpp"

using namespace gelfand;

namespace {

VarSpacePtr space(std::size_t n, std::size_t m = 0, std::size_t k = 0) {
  std::vector<VarBlock> blocks{{Block::n, n}};
  if (m > 0) blocks.push_back({Block::m, m});
  if (k > 0) blocks.push_back({Block::k, k});
  return std::make_shared<VarSpace>(blocks);
}

Polynomial random_polynomial(std::mt19937_64& rng, const VarSpacePtr& vs, std::size_t max_degree, std::size_t terms) {
  Polynomial p(vs);
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial m(vs->total(), 0);
    std::size_t d = rng() % (max_degree + 1);
    for (std::size_t i = 0; i < d; ++i) ++m[rng() % vs->total()];
    p.add_term(m, static_cast<long>(rng() % 11) - 5);
  }
  return p;
}

}  // namespace

TEST(MonomialBasis, SmallExamples) {
  GradedBasis xy = monomial_basis(space(1, 1), 1, 1);
  ASSERT_EQ(xy.size(), 1u);
  EXPECT_EQ(to_string(xy.elements[0]), "n:v1*m:v1");

  GradedBasis quad = monomial_basis(space(2), 2, 0);
  ASSERT_EQ(quad.size(), 3u);
  EXPECT_EQ(to_string(quad.elements[0]), "n:v1^2");
  EXPECT_EQ(to_string(quad.elements[1]), "n:v1*n:v2");
  EXPECT_EQ(to_string(quad.elements[2]), "n:v2^2");

  EXPECT_EQ(monomial_basis(space(3), 4, 0).size(), 15u);
}

TEST(MonomialBasis, SizesMatchMultisetFormula) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t m = 0; m <= 3; ++m)
      for (std::size_t dn = 0; dn <= 3; ++dn)
        for (std::size_t dl = 0; dl <= 3; ++dl) {
          auto vs = space(n, m);
          EXPECT_EQ(monomial_basis(vs, dn, dl).size(), multiset_coefficient(n, dn) * multiset_coefficient(m, dl))
              << n << " " << m << " " << dn << " " << dl;
        }
  EXPECT_EQ(multiset_coefficient(3, 4), 15u);
  EXPECT_EQ(monomial_basis(space(4, 2), 3).size(), multiset_coefficient(6, 3));
}

TEST(Polynomial, RingAxioms) {
  std::mt19937_64 rng(5);
  auto vs = space(3, 2);
  for (int t = 0; t < 30; ++t) {
    Polynomial a = random_polynomial(rng, vs, 3, 4), b = random_polynomial(rng, vs, 3, 4),
               c = random_polynomial(rng, vs, 3, 4);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(DerivationAction, Examples) {
  auto vs = space(2);
  auto gl = share(classical_algebra(ClassicalFamily::gl, 2));
  // E11 + E22 acts as the identity: Euler operator.
  ModuleAction id{gl, 2, {Matrix::identity(2)}};
  Polynomial x1x2 = Polynomial::variable(vs, 0) * Polynomial::variable(vs, 1);
  EXPECT_EQ(derivation_action(id, Block::n, 0, x1x2), Rational(2) * x1x2);

  // sl2's e: e.y = x, e.x = 0 on C^2 = {x, y}.
  auto sl2 = share(classical_algebra(ClassicalFamily::sl, 2));
  ModuleAction std2 = standard_action(sl2);
  std::size_t e = 1;  // basis H1, E1_2, E2_1
  EXPECT_EQ(sl2->labels[e], "E1_2");
  Polynomial x = Polynomial::variable(vs, 0), y = Polynomial::variable(vs, 1);
  EXPECT_EQ(derivation_action(std2, Block::n, e, x * y), x * x);
  EXPECT_TRUE(derivation_action(std2, Block::n, e, Polynomial::constant(vs, 7)).is_zero());

  EXPECT_THROW(derivation_action(std2, Block::n, e, Polynomial::variable(space(3), 0)), GelfandError);
}

TEST(DerivationAction, LeibnizRule) {
  std::mt19937_64 rng(9);
  auto vs = space(4);
  auto sl4 = share(classical_algebra(ClassicalFamily::sl, 4));
  ModuleAction act = standard_action(sl4);
  for (int t = 0; t < 40; ++t) {
    Polynomial p = random_polynomial(rng, vs, 3, 5), q = random_polynomial(rng, vs, 3, 5);
    std::size_t xi = rng() % sl4->dim();
    auto d = [&](const Polynomial& f) { return derivation_action(act, Block::n, xi, f); };
    EXPECT_EQ(d(p * q), d(p) * q + p * d(q));
  }
}

TEST(KernelBasis, TrivialCases) {
  auto vs = space(3);
  GradedBasis dom = monomial_basis(vs, 2, 0);
  EXPECT_EQ(kernel_basis(dom, {}).size(), dom.size());
  LinearOperator twice = [](const Polynomial& p) { return Rational(2) * p; };
  EXPECT_EQ(kernel_basis(dom, {twice}).size(), 0u);
}

TEST(KernelBasis, ContractionInvariant) {
  // sl2 on C^2 + (C^2)*, degree 2: only the pairing x u + y v survives.
  auto sl2 = share(classical_algebra(ClassicalFamily::sl, 2));
  ModuleAction act = realified(standard_action(sl2));
  auto vs = space(4);
  GradedBasis dom = monomial_basis(vs, 2, 0);
  std::vector<LinearOperator> ops;
  for (std::size_t i = 0; i < 3; ++i)
    ops.push_back([&, i](const Polynomial& p) { return derivation_action(act, Block::n, i, p); });
  GradedBasis ker = kernel_basis(dom, ops);
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_EQ(to_string(ker.elements[0]), "n:v1*n:v3 + n:v2*n:v4");
  for (const auto& op : ops) EXPECT_TRUE(op(ker.elements[0]).is_zero());

  // Second elimination order: reversed domain gives the same dimension.
  GradedBasis rev = dom;
  std::reverse(rev.elements.begin(), rev.elements.end());
  EXPECT_EQ(kernel_basis(rev, ops).size(), 1u);
}

TEST(Substitute, Examples) {
  auto vs = space(1, 1, 1);
  Polynomial x = Polynomial::variable(vs, 0), a = Polynomial::variable(vs, 1), z = Polynomial::variable(vs, 2);
  EXPECT_EQ(substitute(x + z, {{2, Rational(1)}}), x + Polynomial::constant(vs, 1));
  EXPECT_EQ(substitute(x * x, {{0, Rational(3)}}), Polynomial::constant(vs, 9));
  EXPECT_EQ(substitute(x * a, {{0, Rational(2)}}), Rational(2) * a);
}

TEST(Polynomial, Bidegree) {
  auto vs = space(2, 2);
  Polynomial p = Polynomial::variable(vs, 0) * Polynomial::variable(vs, 2);
  EXPECT_EQ(p.bidegree(), (std::pair<std::size_t, std::size_t>{1, 1}));
  EXPECT_FALSE((p + Polynomial::variable(vs, 1) * Polynomial::variable(vs, 0)).bidegree().has_value());
}
