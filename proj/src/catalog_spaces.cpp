// Constructions behind the catalog rows. Every compact group is replaced by
// its complexified Lie algebra and every real module by its
// complexification: C^n becomes V + V*, H^n becomes C^2n (x) C^2, H_0 the
// adjoint module of sp_1.
#include "catalog_spaces.hpp"

#include <array>

#include "gelfand/classical.hpp"
#include "gelfand/clifford.hpp"
#include "gelfand/fixtures.hpp"
#include "gelfand/modules.hpp"
#include "gelfand/octonion.hpp"

namespace gelfand::catalog_detail {

namespace {

AlgebraPtr gl(std::size_t n) { return share(classical_algebra(ClassicalFamily::gl, n)); }
AlgebraPtr sl(std::size_t n) { return share(classical_algebra(ClassicalFamily::sl, n)); }
AlgebraPtr sp(std::size_t n) { return share(classical_algebra(ClassicalFamily::sp, 2 * n)); }
AlgebraPtr so(std::size_t n) { return share(classical_algebra(ClassicalFamily::so, n)); }

AlgebraPtr spin7() { return share(induced_algebra(spin7_in_so8(), "s")); }
AlgebraPtr g2() { return share(induced_algebra(g2_in_so7(), "g")); }

std::size_t param(const Params& params, const std::string& name) {
  auto it = params.find(name);
  if (it == params.end()) throw GelfandError(ErrorKind::RowOutOfRange, "missing parameter " + name);
  return it->second;
}

std::string suffix(const Params& params) {
  std::string out;
  for (const auto& [name, value] : params) out += "_" + name + std::to_string(value);
  return out;
}

// Coordinates of the identity matrix in a gl_n.
Vector identity_of(const AlgebraPtr& gl_n) {
  return embed_matrices(gl_n, {Matrix::identity(gl_n->rep_size())}).inj.column(0);
}

Vector trace_values(const AlgebraPtr& alg, const Rational& scale) {
  Vector out;
  for (std::size_t i = 0; i < alg->dim(); ++i) out.push_back(scale * trace((*alg->matrix_rep)[i]));
  return out;
}

// Lambda^2 C^4 with the center of gl_4 acting trivially: the module R^6 of
// U_4 through SU_4.
ModuleAction r6_of(const AlgebraPtr& linear4) {
  ModuleAction wedge = exterior_square(standard_action(linear4));
  return tensor(wedge, character(linear4, trace_values(linear4, Rational(-1, 2))));
}

// Lambda^3 in the basis e_i ^ e_j ^ e_k, i < j < k.
ModuleAction exterior_cube(const ModuleAction& act) {
  const std::size_t d = act.dimV;
  std::vector<std::array<std::size_t, 3>> basis;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) basis.push_back({i, j, k});
  auto index_of = [&](std::array<std::size_t, 3> t) -> std::pair<std::size_t, int> {
    int sign = 1;
    for (int pass = 0; pass < 2; ++pass)
      for (int a = 0; a < 2; ++a)
        if (t[a] > t[a + 1]) {
          std::swap(t[a], t[a + 1]);
          sign = -sign;
        }
    if (t[0] == t[1] || t[1] == t[2]) return {0, 0};
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (basis[b] == t) return {b, sign};
    return {0, 0};
  };
  ModuleAction out{act.algebra, basis.size(), {}};
  for (const Matrix& x : act.rho) {
    Matrix m(basis.size(), basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (int slot = 0; slot < 3; ++slot)
        for (std::size_t r = 0; r < d; ++r) {
          const Rational& c = x(r, basis[b][slot]);
          if (c == 0) continue;
          std::array<std::size_t, 3> t = basis[b];
          t[slot] = r;
          auto [idx, sign] = index_of(t);
          if (sign != 0) m(idx, b) += sign * c;
        }
    out.rho.push_back(std::move(m));
  }
  return out;
}

// The vector module of spin_7: the complement of the adjoint module inside
// Lambda^2 of the spinor module.
ModuleAction vector7_of(const ModuleAction& spinor) {
  ModuleAction wedge = exterior_square(spinor);
  std::vector<Matrix> maps = equivariant_maps(wedge, adjoint_action(spinor.algebra));
  if (maps.size() != 1) throw GelfandError(ErrorKind::InvalidInput, "spinor square has no unique adjoint part");
  return submodule(wedge, weight_adapted(wedge, kernel(maps.front())));
}

// Zero-weight vector of a module whose zero weight space is a line.
Vector zero_weight_vector(const ModuleAction& act) {
  for (std::size_t r = 0; r < act.dimV; ++r) {
    bool zero = true;
    for (const Matrix& m : act.rho)
      if (m.is_diagonal() && m(r, r) != 0) zero = false;
    if (zero) return unit_vector(act.dimV, r);
  }
  throw GelfandError(ErrorKind::InvalidInput, "no zero weight coordinate");
}

// Trace-free part of the adjoint module of gl_n.
ModuleAction adjoint_tracefree(const ProductAlgebra& e, std::size_t factor) {
  ModuleAction ad = e.adjoint(factor);
  const AlgebraPtr& f = e.factors[factor];
  Matrix tr(1, ad.dimV);
  for (std::size_t i = 0; i < f->dim(); ++i) tr(0, i) = trace((*f->matrix_rep)[i]);
  return submodule(ad, weight_adapted(ad, kernel(tr)));
}

// The sl_n (or gl_n) subalgebras used as alternatives for a U_n factor.
enum class Unitary { Special, Full, SymplecticTimesCenter };

Matrix unitary_variant(const AlgebraPtr& gl_n, Unitary kind) {
  const std::size_t n = gl_n->rep_size();
  Vector id = identity_of(gl_n);
  switch (kind) {
    case Unitary::Full:
      return Matrix::identity(gl_n->dim());
    case Unitary::Special: {
      Matrix tr(1, gl_n->dim());
      for (std::size_t i = 0; i < gl_n->dim(); ++i) tr(0, i) = trace((*gl_n->matrix_rep)[i]);
      return kernel(tr);
    }
    case Unitary::SymplecticTimesCenter: {
      if (n % 2 != 0) throw GelfandError(ErrorKind::RowOutOfRange, "Sp_{n/2} needs even n");
      std::vector<Vector> cols = symplectic_in(gl_n, n / 2).inj.columns();
      cols.push_back(id);
      return Matrix::from_columns(gl_n->dim(), cols);
    }
  }
  return {};
}

Unitary unitary_from(const std::string& tag) {
  if (tag == "su") return Unitary::Special;
  if (tag == "u") return Unitary::Full;
  if (tag == "usp") return Unitary::SymplecticTimesCenter;
  throw GelfandError(ErrorKind::RowOutOfRange, "unknown alternative " + tag);
}

// Torus (first Cartan element) of sp_1 = sl_2.
Matrix sp1_torus() { return Matrix::from_columns(3, {unit_vector(3, 0)}); }

// One summand w + [w, w] of n.
struct Summand {
  ModuleAction w;
  std::vector<ModuleAction> z;
  /// Explicit bracket Lambda^2 w -> z when equivariance leaves a choice.
  std::optional<Matrix> bracket;
};

Summand heisenberg_block(const ModuleAction& complex_module) {
  return {realified(complex_module), {trivial_module(complex_module.algebra, 1)}, std::nullopt};
}

Summand abelian_block(const ModuleAction& m) { return {m, {}, std::nullopt}; }

std::vector<std::string> block_labels(const Summand& b, std::size_t index, bool single) {
  std::size_t dz = 0;
  for (const ModuleAction& z : b.z) dz += z.dimV;
  const std::string tag = single ? "" : std::to_string(index + 1) + "_";
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < b.w.dimV; ++i) labels.push_back("w" + tag + std::to_string(i + 1));
  for (std::size_t i = 0; i < dz; ++i) labels.push_back("z" + tag + std::to_string(i + 1));
  return labels;
}

// Heisenberg-type space: n = sum of the blocks, k spanned by k_cols inside
// the product algebra that fixes the brackets.
SpaceSpec assemble(const std::string& name, const ProductAlgebra& e, const std::vector<Summand>& blocks,
                   const std::vector<Vector>& k_cols) {
  std::optional<LieAlgebra> n;
  std::vector<ModuleAction> parts;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Summand& blk = blocks[b];
    std::vector<std::string> labels = block_labels(blk, b, blocks.size() == 1);
    LieAlgebra piece = blk.bracket ? two_step_from_map(blk.w.dimV, *blk.bracket, labels)
                                   : two_step_algebra(blk.w, blk.z, labels);
    n = n ? direct_sum(*n, piece) : piece;
    parts.push_back(blk.w);
    for (const ModuleAction& z : blk.z) parts.push_back(z);
  }
  n->kind = AlgebraKind::Nilpotent;
  ModuleAction act = direct_sum_all(parts);
  SubalgebraEmbedding k = span_embedding(e.algebra, k_cols);
  SpaceSpec s = heisenberg_type_space(name, std::move(*n), restrict_action(act, k));
  validate_space(s);
  return s;
}

std::vector<Vector> concat(std::vector<std::vector<Vector>> groups) {
  std::vector<Vector> out;
  for (auto& g : groups)
    for (auto& v : g) out.push_back(std::move(v));
  return out;
}

// The combination of `maps` vanishing on the given columns (unique up to scale).
Matrix map_vanishing_on(const std::vector<Matrix>& maps, const std::vector<std::size_t>& columns) {
  const std::size_t rows = maps.front().rows();
  Matrix system(rows * columns.size(), maps.size());
  for (std::size_t m = 0; m < maps.size(); ++m)
    for (std::size_t c = 0; c < columns.size(); ++c)
      for (std::size_t r = 0; r < rows; ++r) system(c * rows + r, m) = maps[m](r, columns[c]);
  Matrix coeffs = kernel(system);
  if (coeffs.cols() != 1) throw GelfandError(ErrorKind::EquivariantBracketNotUnique, "no unique partial bracket");
  Matrix out(rows, maps.front().cols());
  for (std::size_t m = 0; m < maps.size(); ++m) out += coeffs(m, 0) * maps[m];
  return out;
}

std::vector<Vector> all_of(const ProductAlgebra& e) {
  std::vector<Vector> out;
  for (std::size_t f = 0; f < e.factors.size(); ++f)
    for (Vector& v : e.embed_all(f)) out.push_back(std::move(v));
  return out;
}

// Basis change P with P^T form P anti-diagonal, for a symmetric form whose
// rows each carry one off-diagonal entry +-1.
Matrix anti_diagonal_frame(const Matrix& form) {
  const std::size_t d = form.rows();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<Rational> signs;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (form(i, j) != 0) {
        pairs.emplace_back(i, j);
        signs.push_back(form(i, j));
      }
  if (2 * pairs.size() != d) throw GelfandError(ErrorKind::InvalidInput, "form is not a sum of hyperbolic pairs");
  Matrix p(d, d);
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    p(pairs[a].first, a) = 1;
    p(pairs[a].second, d - 1 - a) = 1 / signs[a];
  }
  return p;
}

// sp_n + sp_1 acting on C^2n (x) C^2, carried into classical so_4n.
SubalgebraEmbedding sp_times_sp1_in(const AlgebraPtr& so4n, std::size_t n, bool with_sp1) {
  LieAlgebra spn = classical_algebra(ClassicalFamily::sp, 2 * n), sp1 = classical_algebra(ClassicalFamily::sp, 2);
  Matrix frame = anti_diagonal_frame(kronecker(symplectic_form(2 * n), symplectic_form(2)));
  Matrix inv = inverse(frame);
  std::vector<Matrix> mats;
  for (const Matrix& m : *spn.matrix_rep) mats.push_back(inv * kronecker(m, Matrix::identity(2)) * frame);
  if (with_sp1)
    for (const Matrix& m : *sp1.matrix_rep) mats.push_back(inv * kronecker(Matrix::identity(2 * n), m) * frame);
  return embed_matrices(so4n, mats);
}

SubalgebraEmbedding spin6_in(const ModuleAction& vec7) {
  return vector_stabilizer(vec7, Matrix::from_columns(7, {zero_weight_vector(vec7)}));
}

// Stabilizer of a hyperbolic weight plane of the vector module: spin_5 + u_1.
SubalgebraEmbedding spin5u1_in(const ModuleAction& vec7) {
  std::vector<std::size_t> nonzero;
  for (std::size_t r = 0; r < 7; ++r)
    for (const Matrix& m : vec7.rho)
      if (m.is_diagonal() && m(r, r) != 0) {
        nonzero.push_back(r);
        break;
      }
  // Pair a weight with its negative.
  for (std::size_t a : nonzero)
    for (std::size_t b : nonzero) {
      bool opposite = true;
      for (const Matrix& m : vec7.rho)
        if (m.is_diagonal() && m(a, a) != -m(b, b)) opposite = false;
      if (a < b && opposite)
        return subspace_stabilizer(vec7, Matrix::from_columns(7, {unit_vector(7, a), unit_vector(7, b)}));
    }
  throw GelfandError(ErrorKind::InvalidInput, "no opposite weights");
}

SpaceSpec criterion_space(std::string name, LieAlgebra n, AlgebraPtr l, ModuleAction act, SubalgebraEmbedding k) {
  SpaceSpec s = make_space(std::move(name), std::move(n), std::move(l), std::move(act), std::move(k));
  validate_space(s);
  return s;
}

}  // namespace

// ---------------------------------------------------------------- Table 2b

SpaceSpec table2b(const std::string& row, const Params& params) {
  if (row.rfind("1a-", 0) == 0) {
    const std::size_t n = param(params, "n");
    const std::string variant = row.substr(3);
    const bool center = variant.size() > 2 && variant.substr(variant.size() - 2) == "-h";
    const std::string groups = center ? variant.substr(0, variant.size() - 2) : variant;
    LinearGroup lg;
    SymplecticGroup kg = SymplecticGroup::Plain;
    if (groups == "su")
      lg = LinearGroup::Special;
    else if (groups == "u")
      lg = LinearGroup::Full;
    else if (groups == "u-u1") {
      lg = LinearGroup::Full;
      kg = SymplecticGroup::WithCenter;
    } else
      throw GelfandError(ErrorKind::RowOutOfRange, "unknown Table 2b row " + row);
    return fixture_c2n_sp(n, lg, kg, center);
  }
  if (row == "1b") return fixture_r6_su4_u3();
  if (row == "2a") {
    SubalgebraEmbedding k = g2_in_so7();
    return criterion_space("r7_so7_g2", abelian_algebra(7, "x"), k.ambient, standard_action(k.ambient), k);
  }
  if (row == "2b") {
    AlgebraPtr l = spin7();
    ModuleAction spinor = standard_action(l);
    return criterion_space("r8_spin7_spin6", abelian_algebra(8, "x"), l, spinor, spin6_in(vector7_of(spinor)));
  }
  if (row == "3") return fixture_r2n_so2n_un(param(params, "n"));
  if (row == "4a") {
    SubalgebraEmbedding spin = spin7_in_so8();
    ProductAlgebra e = product_algebra({spin.ambient, so(2)});
    ModuleAction act = tensor(e.standard(0), e.standard(1));
    SubalgebraEmbedding k = span_embedding(e.algebra, concat({e.embed(0, spin.inj), e.embed_all(1)}));
    return criterion_space("r16_so8so2_spin7so2", abelian_algebra(16, "x"), e.algebra, act, k);
  }
  if (row == "4b" || row == "4c") {
    SubalgebraEmbedding spin = spin7_in_so8();
    ModuleAction act = standard_action(spin.ambient);
    if (row == "4b") act = direct_sum(act, act);
    return criterion_space(row == "4b" ? "r16_so8_spin7" : "r8_so8_spin7", abelian_algebra(act.dimV, "x"),
                           spin.ambient, act, spin);
  }
  if (row == "4d") {
    AlgebraPtr l = so(8);
    return criterion_space("r8_so8_sp2sp1", abelian_algebra(8, "x"), l, standard_action(l),
                           sp_times_sp1_in(l, 2, true));
  }
  throw GelfandError(ErrorKind::RowOutOfRange, "unknown Table 2b row " + row);
}

// ---------------------------------------------------------------- Table 3

SpaceSpec table3(const std::string& row, const Params& params) {
  const std::string name = "t3_row" + row + suffix(params);
  if (row == "1") {
    const std::size_t n = param(params, "n");
    ProductAlgebra e = product_algebra({so(n)});
    return assemble(name, e, {{e.standard(0), {e.adjoint(0)}, std::nullopt}}, all_of(e));
  }
  if (row == "2") {
    ProductAlgebra e = product_algebra({spin7()});
    ModuleAction spinor = e.standard(0);
    return assemble(name, e, {{spinor, {vector7_of(spinor)}, std::nullopt}}, all_of(e));
  }
  if (row == "3") {
    ProductAlgebra e = product_algebra({g2()});
    return assemble(name, e, {{e.standard(0), {e.standard(0)}, std::nullopt}}, all_of(e));
  }
  if (row == "4-su" || row == "4-u" || row == "5-su" || row == "5-u") {
    const std::size_t n = param(params, "n");
    ProductAlgebra e = product_algebra({gl(n)});
    ModuleAction v = e.standard(0), wedge = exterior_square(v);
    std::vector<ModuleAction> z{wedge, dual(wedge)};
    if (row[0] == '4') z.push_back(e.trivial(1));
    Matrix k = unitary_variant(e.factors[0], row.substr(2) == "su" ? Unitary::Special : Unitary::Full);
    return assemble(name, e, {{realified(v), z, std::nullopt}}, e.embed(0, k));
  }
  if (row == "6") {
    ProductAlgebra e = product_algebra({gl(param(params, "n"))});
    return assemble(name, e, {{realified(e.standard(0)), {adjoint_tracefree(e, 0), e.trivial(1)}, std::nullopt}},
                    all_of(e));
  }
  if (row == "7-sp" || row == "7-usp") {
    // U_1 inside the right Sp_1: weights +-1 on C^2, so H_0 splits into
    // the weights 2, 0, -2.
    const std::size_t n = param(params, "n");
    ProductAlgebra e = product_algebra({sp(n), gl(1)});
    ModuleAction w = tensor(e.standard(0), e.standard(1));
    ModuleAction sp_wedge = exterior_square(e.standard(0));
    std::vector<Matrix> contraction = equivariant_maps(sp_wedge, e.trivial(1));
    ModuleAction hs0 = submodule(sp_wedge, weight_adapted(sp_wedge, kernel(contraction.front())));
    ModuleAction plus2 = character(e.algebra, trace_values(e.algebra, 2));
    // trace_values counts the sp_n trace too; it vanishes there.
    std::vector<ModuleAction> z;
    if (hs0.dimV > 0) z.push_back(hs0);
    z.push_back(plus2);
    z.push_back(e.trivial(1));
    z.push_back(dual(plus2));
    std::vector<Vector> k = e.embed_all(0);
    if (row == "7-usp") k.push_back(e.embed_all(1).front());
    return assemble(name, e, {{realified(w), z, std::nullopt}}, k);
  }
  if (row == "8") {
    ProductAlgebra e = product_algebra({gl(1), spin7()});
    ModuleAction spinor = e.standard(1);
    ModuleAction w = tensor(spinor, e.standard(0));
    return assemble(name, e, {{realified(w), {vector7_of(spinor), e.trivial(1)}, std::nullopt}}, all_of(e));
  }
  if (row == "9" || row == "10") {
    ProductAlgebra e = product_algebra({sp(row == "9" ? 1 : 2), sp(param(params, "n"))});
    return assemble(name, e, {{tensor(e.standard(0), e.standard(1)), {e.adjoint(0)}, std::nullopt}}, all_of(e));
  }
  if (row == "11-su" || row == "11-u") {
    ProductAlgebra e = product_algebra({gl(2), sl(param(params, "n"))});
    ModuleAction w = tensor(e.standard(0), e.standard(1));
    Matrix first = unitary_variant(e.factors[0], row == "11-su" ? Unitary::Special : Unitary::Full);
    return assemble(name, e, {{realified(w), {adjoint_tracefree(e, 0), e.trivial(1)}, std::nullopt}},
                    concat({e.embed(0, first), e.embed_all(1)}));
  }
  if (row == "12") {
    ProductAlgebra e = product_algebra({gl(2), sp(param(params, "n"))});
    ModuleAction w = tensor(e.standard(0), e.standard(1));
    return assemble(name, e, {{realified(w), {adjoint_tracefree(e, 0), e.trivial(1)}, std::nullopt}}, all_of(e));
  }
  throw GelfandError(ErrorKind::RowOutOfRange, "unknown Table 3 row " + row);
}

// ---------------------------------------------------------------- Table 4

namespace {

// (H^n + H_0) over sp_n (factor a) and sp_1 (factor b).
Summand quaternionic_block(const ProductAlgebra& e, std::size_t a, std::size_t b) {
  return {tensor(e.standard(a), e.standard(b)), {e.adjoint(b)}, std::nullopt};
}

// Third factor alternatives: the whole sp_1, its torus, or nothing.
std::vector<Vector> sp1_alternative(const ProductAlgebra& e, std::size_t factor, const std::string& tag) {
  if (tag == "sp1") return e.embed_all(factor);
  if (tag == "u1") return e.embed(factor, sp1_torus());
  if (tag == "e") return {};
  throw GelfandError(ErrorKind::RowOutOfRange, "unknown alternative " + tag);
}

std::pair<std::string, std::string> split_row(const std::string& row) {
  const auto dash = row.find('-');
  if (dash == std::string::npos) return {row, ""};
  return {row.substr(0, dash), row.substr(dash + 1)};
}

}  // namespace

SpaceSpec table4(const std::string& row, const Params& params) {
  const std::string name = "t4_row" + row + suffix(params);
  const auto [base, alt] = split_row(row);
  if (base == "1") {
    ProductAlgebra e = product_algebra({gl(param(params, "n"))});
    return assemble(name, e, {heisenberg_block(e.standard(0)), abelian_block(adjoint_tracefree(e, 0))}, all_of(e));
  }
  if (base == "2") {
    ProductAlgebra e = product_algebra({gl(4)});
    ModuleAction v = e.standard(0), wedge = exterior_square(v);
    Summand first{realified(v), {wedge, dual(wedge), e.trivial(1)}, std::nullopt};
    return assemble(name, e, {first, abelian_block(e.lift(0, r6_of(e.factors[0])))}, all_of(e));
  }
  if (base == "3") {
    const std::size_t n = param(params, "n");
    ProductAlgebra e = product_algebra({gl(1), gl(n)});
    ModuleAction second = tensor(exterior_square(e.standard(1)), e.standard(0));
    return assemble(name, e, {heisenberg_block(e.standard(1)), heisenberg_block(second)}, all_of(e));
  }
  if (base == "4") {
    // w = C^4 under SU_4 with [w, w] the real module R^6: the bracket is
    // the sum of the maps from Lambda^2 V and from Lambda^2 V*.
    ProductAlgebra e = product_algebra({sl(4)});
    ModuleAction w = realified(e.standard(0)), z = exterior_square(e.standard(0));
    ModuleAction wedge = exterior_square(w);
    std::vector<Matrix> maps = equivariant_maps(wedge, z);
    std::vector<std::size_t> from_v, from_dual;
    std::size_t pair = 0;
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = i + 1; j < 8; ++j, ++pair) {
        if (j < 4) from_v.push_back(pair);
        if (i >= 4) from_dual.push_back(pair);
      }
    Matrix bracket = map_vanishing_on(maps, from_dual) + map_vanishing_on(maps, from_v);
    return assemble(name, e, {{w, {z}, bracket}, abelian_block(z)}, all_of(e));
  }
  if (base == "5") {
    ProductAlgebra e = product_algebra({gl(2), gl(4)});
    ModuleAction w = tensor(e.standard(0), e.standard(1));
    Summand first{realified(w), {adjoint_tracefree(e, 0), e.trivial(1)}, std::nullopt};
    return assemble(name, e, {first, abelian_block(e.lift(1, r6_of(e.factors[1])))}, all_of(e));
  }
  if (base == "6") {
    ProductAlgebra e = product_algebra({sl(4), gl(param(params, "m"))});
    ModuleAction w = tensor(e.standard(0), e.standard(1));
    return assemble(name, e, {heisenberg_block(w), abelian_block(e.lift(0, r6_of(e.factors[0])))}, all_of(e));
  }
  if (base == "7") {
    ProductAlgebra e = product_algebra({gl(param(params, "m")), gl(param(params, "n"))});
    return assemble(name, e,
                    {heisenberg_block(tensor(e.standard(0), e.standard(1))), heisenberg_block(e.standard(0))},
                    all_of(e));
  }
  if (base == "8") {
    ProductAlgebra e = product_algebra({gl(param(params, "m")), sl(2), gl(param(params, "p"))});
    return assemble(name, e,
                    {heisenberg_block(tensor(e.standard(0), e.standard(1))),
                     heisenberg_block(tensor(e.standard(1), e.standard(2)))},
                    all_of(e));
  }
  if (base == "9") {
    ProductAlgebra e = product_algebra({gl(1), gl(1), sp(param(params, "n"))});
    return assemble(name, e,
                    {heisenberg_block(tensor(e.standard(2), e.standard(0))),
                     heisenberg_block(tensor(e.standard(2), e.standard(1)))},
                    all_of(e));
  }
  if (base == "10" || base == "11") {
    const std::size_t n = param(params, "n");
    const std::size_t last = base == "10" ? 1 : param(params, "m");
    ProductAlgebra e = product_algebra({sp(n), sp(1), sp(last)});
    std::vector<Summand> blocks{quaternionic_block(e, 0, 1), abelian_block(tensor(e.standard(2), e.standard(0)))};
    std::vector<Vector> k = e.embed_all(0);
    if (base == "10") {
      for (Vector& v : e.embed_all(1)) k.push_back(std::move(v));
      for (Vector& v : sp1_alternative(e, 2, alt)) k.push_back(std::move(v));
    } else {
      if (alt == "e") throw GelfandError(ErrorKind::RowOutOfRange, "row 11 needs Sp_1 or U_1");
      for (Vector& v : sp1_alternative(e, 1, alt)) k.push_back(std::move(v));
      for (Vector& v : e.embed_all(2)) k.push_back(std::move(v));
    }
    return assemble(name, e, blocks, k);
  }
  if (base == "12") {
    ProductAlgebra e = product_algebra({sp(param(params, "n")), sp(1)});
    ModuleAction wedge = exterior_square(e.standard(0));
    std::vector<Matrix> contraction = equivariant_maps(wedge, e.trivial(1));
    ModuleAction hs0 = submodule(wedge, weight_adapted(wedge, kernel(contraction.front())));
    std::vector<Vector> k = e.embed_all(0);
    for (Vector& v : sp1_alternative(e, 1, alt)) k.push_back(std::move(v));
    return assemble(name, e, {quaternionic_block(e, 0, 1), abelian_block(hs0)}, k);
  }
  if (base == "13") {
    ProductAlgebra e = product_algebra({spin7(), so(2)});
    ModuleAction spinor = e.standard(0);
    ModuleAction vec = vector7_of(spinor);
    std::vector<Vector> k = e.embed_all(0);
    if (alt == "so2") k.push_back(e.embed_all(1).front());
    else if (alt != "e") throw GelfandError(ErrorKind::RowOutOfRange, "unknown alternative " + alt);
    return assemble(name, e, {{spinor, {vec}, std::nullopt}, abelian_block(tensor(vec, e.standard(1)))}, k);
  }
  if (base == "14") {
    ProductAlgebra e = product_algebra({gl(1), spin7()});
    ModuleAction spinor = e.standard(1);
    ModuleAction vec = tensor(vector7_of(spinor), e.standard(0));
    return assemble(name, e, {heisenberg_block(vec), abelian_block(spinor)}, all_of(e));
  }
  if (base == "17" || base == "18" || base == "19" || base == "20") {
    const std::size_t n = param(params, "n");
    const auto [first_tag, second_tag] = split_row(alt);
    std::vector<AlgebraPtr> factors{gl(n), base == "18" ? gl(2) : sl(2)};
    if (base == "19") factors.push_back(gl(n));
    if (base == "20") factors.push_back(gl(4));
    ProductAlgebra e = product_algebra(factors);
    std::vector<Summand> blocks{heisenberg_block(tensor(e.standard(0), e.standard(1)))};
    std::vector<Vector> k = e.embed(0, unitary_variant(e.factors[0], unitary_from(first_tag)));
    for (Vector& v : e.embed_all(1)) k.push_back(std::move(v));
    if (base == "17") blocks.push_back(abelian_block(e.adjoint(1)));
    if (base == "18") blocks.push_back(heisenberg_block(e.standard(1)));
    if (base == "19") {
      blocks.push_back(heisenberg_block(tensor(e.standard(1), e.standard(2))));
      for (Vector& v : e.embed(2, unitary_variant(e.factors[2], unitary_from(second_tag)))) k.push_back(std::move(v));
    }
    if (base == "20") {
      blocks.push_back(heisenberg_block(tensor(e.standard(1), e.standard(2))));
      blocks.push_back(abelian_block(e.lift(2, r6_of(e.factors[2]))));
      for (Vector& v : e.embed_all(2)) k.push_back(std::move(v));
    }
    return assemble(name, e, blocks, k);
  }
  if (base == "21" || base == "22") {
    std::vector<AlgebraPtr> factors{gl(4), gl(2)};
    if (base == "22") factors.push_back(gl(4));
    ProductAlgebra e = product_algebra(factors);
    std::vector<Summand> blocks{abelian_block(e.lift(0, r6_of(e.factors[0]))),
                              heisenberg_block(tensor(e.standard(0), e.standard(1)))};
    if (base == "21") {
      blocks.push_back(abelian_block(adjoint_tracefree(e, 1)));
    } else {
      blocks.push_back(heisenberg_block(tensor(e.standard(1), e.standard(2))));
      blocks.push_back(abelian_block(e.lift(2, r6_of(e.factors[2]))));
    }
    return assemble(name, e, blocks, all_of(e));
  }
  if (base == "23") {
    ProductAlgebra e = product_algebra({gl(1), gl(1), sl(4)});
    return assemble(name, e,
                    {heisenberg_block(tensor(e.standard(2), e.standard(0))),
                     heisenberg_block(tensor(e.standard(2), e.standard(1))),
                     abelian_block(e.lift(2, r6_of(e.factors[2])))},
                    all_of(e));
  }
  if (base == "24") {
    // Alternatives: "su", "u-su", "su-so2", "u-su-so2".
    ProductAlgebra e = product_algebra({gl(1), sl(4), so(2)});
    std::vector<Vector> k = e.embed_all(1);
    if (alt.rfind("u-", 0) == 0) k.push_back(e.embed_all(0).front());
    if (alt.size() >= 3 && alt.substr(alt.size() - 3) == "so2") k.push_back(e.embed_all(2).front());
    ModuleAction r6 = exterior_square(e.standard(1));
    return assemble(name, e,
                    {heisenberg_block(tensor(e.standard(1), e.standard(0))),
                     abelian_block(tensor(r6, e.standard(2)))},
                    k);
  }
  throw GelfandError(ErrorKind::RowOutOfRange, "unknown Table 4 row " + row);
}

// ---------------------------------------------------------------- Table 1

FactorizationCase table1(const std::string& row, const Params& params) {
  const std::size_t n = param(params, "n");
  if (row == "1" || row == "2") {
    // su_2n = sp_n + su_2n-1: v fixed with a covector f, f(v) != 0.
    AlgebraPtr g = sl(2 * n);
    ModuleAction v = standard_action(g);
    Matrix e1 = Matrix::from_columns(2 * n, {unit_vector(2 * n, 0)});
    SubalgebraEmbedding g2;
    if (row == "1") {
      g2 = intersect(vector_stabilizer(v, e1), vector_stabilizer(dual(v), e1));
    } else {
      std::vector<Vector> rest;
      for (std::size_t i = 1; i < 2 * n; ++i) rest.push_back(unit_vector(2 * n, i));
      g2 = intersect(subspace_stabilizer(v, e1), subspace_stabilizer(v, Matrix::from_columns(2 * n, rest)));
    }
    const std::size_t u = (n - 1) * (2 * n - 1) + (row == "2" ? 1 : 0);
    return {g, symplectic_in(g, n), g2, u};
  }
  // Orthogonal rows use skew-symmetric matrices, the compact picture.
  auto skew = [](std::size_t size) { return share(form_preserving_algebra(Matrix::identity(size), "o")); };
  auto fixing = [](const AlgebraPtr& g, std::vector<std::size_t> coords) {
    const std::size_t d = g->rep_size();
    std::vector<Vector> cols;
    for (std::size_t c : coords) cols.push_back(unit_vector(d, c));
    return vector_stabilizer(standard_action(g), Matrix::from_columns(d, cols));
  };
  if (row == "3" || row == "4") {
    const std::size_t size = 2 * n + 4;
    AlgebraPtr g = skew(size);
    Matrix j(size, size);
    for (std::size_t i = 0; i < size; i += 2) {
      j(i + 1, i) = 1;
      j(i, i + 1) = -1;
    }
    SubalgebraEmbedding unitary = centralizer(g, embed_matrices(g, {j}).inj);
    SubalgebraEmbedding g2 = unitary;
    if (row == "3") {
      LieAlgebra u = induced_algebra(unitary);
      g2 = {g, unitary.inj * derived_subalgebra(u)};
    }
    const std::size_t u = (n + 1) * (n + 1) - 1 + (row == "4" ? 1 : 0);
    return {g, fixing(g, {0}), g2, u};
  }
  if (row == "5" || row == "6" || row == "7") {
    // R^4n = H^n; sp_n commutes with right multiplication by i, j, k.
    const std::size_t size = 4 * n;
    AlgebraPtr g = skew(size);
    const std::array<std::array<int, 4>, 3> perm{{{1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
    const std::array<std::array<int, 4>, 3> sign{{{-1, 1, 1, -1}, {-1, -1, 1, 1}, {-1, 1, -1, 1}}};
    std::vector<Matrix> right;
    for (std::size_t q = 0; q < 3; ++q) {
      Matrix r(size, size);
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < 4; ++c) r(4 * b + perm[q][c], 4 * b + c) = sign[q][c];
      right.push_back(r);
    }
    Matrix right_cols = embed_matrices(g, right).inj;
    SubalgebraEmbedding spn = centralizer(g, right_cols);
    std::vector<Vector> cols = spn.inj.columns();
    if (row == "6") cols.push_back(right_cols.column(0));
    if (row == "7")
      for (const Vector& v : right_cols.columns()) cols.push_back(v);
    const std::size_t u = (n - 1) * (2 * n - 1) + (row == "6" ? 1 : row == "7" ? 3 : 0);
    return {g, fixing(g, {0}), span_embedding(g, cols), u};
  }
  throw GelfandError(ErrorKind::RowOutOfRange, "unknown Table 1 row " + row);
}

FactorizationCase table1_fixed(const std::string& row) {
  auto fixing = [](const SubalgebraEmbedding& h, std::vector<std::size_t> coords) {
    const std::size_t d = h.ambient->rep_size();
    std::vector<Vector> cols;
    for (std::size_t c : coords) cols.push_back(unit_vector(d, c));
    return vector_stabilizer(standard_action(h.ambient), Matrix::from_columns(d, cols));
  };
  if (row == "8") {
    SubalgebraEmbedding spin9 = spin9_in_so16();
    return {spin9.ambient, fixing(spin9, {0}), spin9, 21};
  }
  if (row == "9") {
    SubalgebraEmbedding spin = spin7_in_so8(OctonionForm::Definite);
    return {spin.ambient, spin, fixing(spin, {0}), 14};
  }
  SubalgebraEmbedding g2 = g2_in_so7(OctonionForm::Definite);
  if (row == "10") return {g2.ambient, g2, fixing(g2, {0, 1}), 3};
  if (row == "11") {
    Matrix plane = Matrix::from_columns(7, {unit_vector(7, 0), unit_vector(7, 1)});
    return {g2.ambient, g2, subspace_stabilizer(standard_action(g2.ambient), plane), 4};
  }
  if (row == "12") return {g2.ambient, g2, fixing(g2, {0}), 8};
  throw GelfandError(ErrorKind::RowOutOfRange, "unknown Table 1 row " + row);
}

// ---------------------------------------------------------------- Table 2a

FactorizationCase table2a(const std::string& row, const Params& params, std::size_t samples, std::uint64_t seed) {
  auto with_stabilizer = [&](const SubalgebraEmbedding& k, const ModuleAction& act) {
    return FactorizationCase{k.ambient, k, generic_stabilizer(act, samples, seed).stabilizer, std::nullopt};
  };
  if (row == "1a") {
    const std::size_t n = param(params, "n");
    AlgebraPtr g = sl(2 * n);
    return with_stabilizer(symplectic_in(g, n), realified(standard_action(g)));
  }
  if (row == "1b") {
    SpaceSpec s = fixture_r6_su4_u3();
    return with_stabilizer(s.k, s.act);
  }
  if (row == "2a") {
    SubalgebraEmbedding k = g2_in_so7();
    ModuleAction v = standard_action(k.ambient);
    return with_stabilizer(k, direct_sum(v, v));
  }
  if (row == "2b-spin6" || row == "2b-spin5u1") {
    AlgebraPtr l = spin7();
    ModuleAction spinor = standard_action(l), vec = vector7_of(spinor);
    return with_stabilizer(row == "2b-spin6" ? spin6_in(vec) : spin5u1_in(vec), spinor);
  }
  if (row == "3-su" || row == "3-u") {
    AlgebraPtr g = so(2 * param(params, "n"));
    SubalgebraEmbedding u = unitary_in_orthogonal(g);
    if (row == "3-su") u = {g, u.inj * derived_subalgebra(induced_algebra(u))};
    return with_stabilizer(u, standard_action(g));
  }
  if (row == "4a") {
    SubalgebraEmbedding k = spin7_in_so8();
    ModuleAction v = standard_action(k.ambient);
    return with_stabilizer(k, direct_sum_all({v, v, v}));
  }
  if (row == "4b") {
    AlgebraPtr g = so(8);
    return with_stabilizer(sp_times_sp1_in(g, 2, true), standard_action(g));
  }
  throw GelfandError(ErrorKind::RowOutOfRange, "unknown Table 2a row " + row);
}

// ---------------------------------------------------------------- Table A

StabilizerCase table_a(const std::string& row, const Params& params) {
  const std::size_t n = param(params, "n");
  AlgebraPtr g = sl(n);
  ModuleAction v = standard_action(g);
  if (row == "1") return {realified(v), (n - 1) * (n - 1) - 1};
  if (row == "2") return {realified(exterior_square(v)), 3 * (n / 2)};
  if (row == "3") return {realified(symmetric_square(v)), n / 2};
  if (row == "4") return {adjoint_action(g), n - 1};
  if (row == "5") return {exterior_square(v), 10};
  if (row == "6") {
    ModuleAction cube = exterior_cube(v);
    return {direct_sum(cube, cube), 2};
  }
  throw GelfandError(ErrorKind::RowOutOfRange, "unknown Table A row " + row);
}

// ---------------------------------------------------------------- named

SpaceSpec named(const std::string& name, const Params& params) {
  if (name == "h2_su2") return fixture_h2_su2();
  if (name == "c2h2_su2") return fixture_c2h2_su2();
  if (name == "r4_so4_u2") return fixture_r2n_so2n_un(2);
  if (name == "h4_su4_sp2") return fixture_c2n_sp(2, LinearGroup::Special, SymplecticGroup::Plain, true);
  if (name == "r6_su4_u3") return fixture_r6_su4_u3();
  if (name == "diag_so3") return fixture_diag_so(3);
  if (name == "ex6_sp") return fixture_ex6_sp(param(params, "n"));
  if (name == "h2_u2_su2") return fixture_hn_un_sun(2);
  throw GelfandError(ErrorKind::UnknownName, "no named space " + name);
}

SphericalityCase named_pair(const std::string& name) {
  auto power = [](std::size_t copies) {
    LieAlgebra out = *sl(2);
    for (std::size_t c = 1; c < copies; ++c) out = direct_sum(out, *sl(2));
    return share(std::move(out));
  };
  auto diagonal = [](const AlgebraPtr& g, std::size_t copies) {
    std::vector<Vector> cols;
    for (std::size_t a = 0; a < 3; ++a) {
      Vector v(3 * copies);
      for (std::size_t c = 0; c < copies; ++c) v[3 * c + a] = 1;
      cols.push_back(v);
    }
    return span_embedding(g, cols);
  };
  if (name == "sl2_torus") {
    AlgebraPtr g = sl(2);
    return {g, embed_matrices(g, {g->represent(unit_vector(3, 0))})};
  }
  if (name == "sl2x2_diag") {
    AlgebraPtr g = power(2);
    return {g, diagonal(g, 2)};
  }
  if (name == "sl2x4_diag") {
    AlgebraPtr g = power(4);
    return {g, diagonal(g, 4)};
  }
  if (name == "so7_g2") {
    SubalgebraEmbedding h = g2_in_so7();
    return {h.ambient, h};
  }
  throw GelfandError(ErrorKind::UnknownName, "no named pair " + name);
}

}  // namespace gelfand::catalog_detail
