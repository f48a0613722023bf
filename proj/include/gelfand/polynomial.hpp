#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gelfand/lie_algebra.hpp"

namespace gelfand {

enum class Block { n, m, k };

std::string to_string(Block b);

struct VarBlock {
  Block name;
  std::size_t size;
};

/// Ordered, block-partitioned set of polynomial variables.
class VarSpace {
 public:
  /// Throws InvalidInput on repeated block names. Missing labels default
  /// to "<block>:v<i>".
  explicit VarSpace(std::vector<VarBlock> blocks, std::vector<std::string> labels = {});

  std::size_t total() const { return labels_.size(); }
  const std::vector<VarBlock>& blocks() const { return blocks_; }
  bool has(Block b) const;
  std::size_t offset(Block b) const;
  std::size_t size(Block b) const;
  Block block_of(std::size_t var) const;
  const std::string& label(std::size_t var) const { return labels_[var]; }
  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const VarSpace& a, const VarSpace& b);

 private:
  std::vector<VarBlock> blocks_;
  std::vector<std::string> labels_;
};

using VarSpacePtr = std::shared_ptr<const VarSpace>;

using Monomial = std::vector<std::uint8_t>;

std::size_t degree(const Monomial& m);

/// Strict weak order placing the graded-lex larger monomial first.
struct GrLexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial with exact rational coefficients; zero terms are never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GrLexDescending>;

  explicit Polynomial(VarSpacePtr vars) : vars_(std::move(vars)) {}

  static Polynomial constant(VarSpacePtr vars, const Rational& c);
  static Polynomial variable(VarSpacePtr vars, std::size_t i);
  static Polynomial monomial(VarSpacePtr vars, Monomial m, const Rational& c = 1);

  const VarSpacePtr& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const Rational& c);

  /// Total degree of the highest term; 0 for the zero polynomial.
  std::size_t degree() const;
  bool is_homogeneous() const;
  /// (n-block degree, remaining degree) when every term agrees.
  std::optional<std::pair<std::size_t, std::size_t>> bidegree() const;
  /// True iff some term involves a variable of block b.
  bool uses(Block b) const;

  Polynomial derivative(std::size_t var) const;

  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.terms_ == q.terms_; }

  /// Scales to coprime integer coefficients with positive leading coefficient.
  Polynomial primitive() const;

 private:
  VarSpacePtr vars_;
  Terms terms_;
};

/// Deterministic text: terms in descending graded-lex order, variables by label.
std::string to_string(const Polynomial& p);

/// A basis of one (bi)graded piece.
struct GradedBasis {
  std::size_t degree = 0;
  std::optional<std::pair<std::size_t, std::size_t>> bidegree;
  std::vector<Polynomial> elements;

  std::size_t size() const { return elements.size(); }
};

/// Number of monomials of degree d in n variables.
std::size_t multiset_coefficient(std::size_t n, std::size_t d);

/// Exponent vectors of degree d in `count` variables, graded-lex descending.
std::vector<std::vector<std::uint8_t>> exponent_vectors(std::size_t count, std::size_t d);

/// Monomials of n-degree dn and degree dl in the other blocks.
GradedBasis monomial_basis(const VarSpacePtr& vars, std::size_t dn, std::size_t dl);

/// Monomials of total degree d.
GradedBasis monomial_basis(const VarSpacePtr& vars, std::size_t d);

/// The derivation extending x_j -> sum_i op(i, j) x_i, op acting on all variables.
Polynomial apply_derivation(const Matrix& op, const Polynomial& p);

/// Same, with op given sparsely per variable: images[j] lists (i, op(i, j)).
using SparseOperator = std::vector<std::vector<std::pair<std::size_t, Rational>>>;
SparseOperator to_sparse(const Matrix& op);
Polynomial apply_derivation(const SparseOperator& op, const Polynomial& p);

/// The derivation extending the action of basis element `xi` on the
/// variables of block `block`; throws BlockMismatch when act.dimV differs
/// from the block size.
Polynomial derivation_action(const ModuleAction& act, Block block, std::size_t xi, const Polynomial& p);

using LinearOperator = std::function<Polynomial(const Polynomial&)>;

/// Basis of the joint kernel of `ops` restricted to span(domain), by
/// fraction-free elimination. Elements are primitive.
GradedBasis kernel_basis(const GradedBasis& domain, const std::vector<LinearOperator>& ops);

/// Rank of a family of polynomials.
std::size_t polynomial_rank(const std::vector<Polynomial>& polys);

/// Substitutes values for some variables; the result keeps the varspace.
Polynomial substitute(const Polynomial& p, const std::map<std::size_t, Rational>& assignment);

/// Rewrites p over another varspace via an injective variable map
/// old index -> new index.
Polynomial relabel(const Polynomial& p, const VarSpacePtr& target, const std::vector<std::size_t>& var_map);

}  // namespace gelfand
