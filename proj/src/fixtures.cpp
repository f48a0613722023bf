#include "gelfand/fixtures.hpp"

#include "gelfand/classical.hpp"
#include "gelfand/modules.hpp"
#include "gelfand/stabilizer.hpp"

namespace gelfand {

ModuleAction on_summand(const ModuleAction& act, const AlgebraPtr& sum, std::size_t offset) {
  const std::size_t d = act.algebra->dim();
  Matrix hom(d, sum->dim());
  for (std::size_t i = 0; i < d; ++i) hom(i, offset + i) = 1;
  return along(act, sum, hom);
}

ModuleAction direct_sum_all(const std::vector<ModuleAction>& parts) {
  if (parts.empty()) throw GelfandError(ErrorKind::InvalidInput, "no modules to add");
  ModuleAction out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = direct_sum(out, parts[i]);
  return out;
}

LieAlgebra two_step_from_map(std::size_t dw, const Matrix& bracket, std::vector<std::string> labels) {
  const std::size_t dz = bracket.rows(), d = dw + dz;
  if (bracket.cols() != dw * (dw - (dw > 0 ? 1 : 0)) / 2)
    throw GelfandError(ErrorKind::InvalidInput, "bracket map has the wrong number of columns");
  StructureConstants sc(d);
  // Pairs (i, j), i < j, in the order of exterior_square.
  std::size_t pair = 0;
  for (std::size_t i = 0; i < dw; ++i)
    for (std::size_t j = i + 1; j < dw; ++j, ++pair)
      for (std::size_t r = 0; r < dz; ++r)
        if (bracket(r, pair) != 0) {
          sc.add(i, j, dw + r, bracket(r, pair));
          sc.add(j, i, dw + r, -bracket(r, pair));
        }
  if (labels.empty()) {
    for (std::size_t i = 0; i < dw; ++i) labels.push_back("w" + std::to_string(i + 1));
    for (std::size_t i = 0; i < dz; ++i) labels.push_back("z" + std::to_string(i + 1));
  }
  return build_algebra(std::move(sc), std::move(labels), AlgebraKind::Nilpotent);
}

LieAlgebra two_step_algebra(const ModuleAction& w, const std::vector<ModuleAction>& z_pieces,
                            std::vector<std::string> labels) {
  const std::size_t dw = w.dimV;
  std::size_t dz = 0;
  for (const ModuleAction& z : z_pieces) dz += z.dimV;
  ModuleAction wedge = exterior_square(w);
  Matrix bracket(dz, wedge.dimV);
  std::size_t offset = 0;
  for (std::size_t p = 0; p < z_pieces.size(); ++p) {
    std::vector<Matrix> maps = equivariant_maps(wedge, z_pieces[p]);
    if (maps.size() != 1)
      throw GelfandError(ErrorKind::EquivariantBracketNotUnique,
                         "equivariant brackets onto piece " + std::to_string(p + 1) + ": " +
                             std::to_string(maps.size()),
                         {p, maps.size()});
    for (std::size_t r = 0; r < z_pieces[p].dimV; ++r)
      for (std::size_t c = 0; c < wedge.dimV; ++c) bracket(offset + r, c) = maps.front()(r, c);
    offset += z_pieces[p].dimV;
  }
  return two_step_from_map(dw, bracket, std::move(labels));
}

ModuleAction ProductAlgebra::lift(std::size_t factor, const ModuleAction& act) const {
  return on_summand(act, algebra, offsets.at(factor));
}

ModuleAction ProductAlgebra::standard(std::size_t factor) const { return lift(factor, standard_action(factors.at(factor))); }

ModuleAction ProductAlgebra::adjoint(std::size_t factor) const { return lift(factor, adjoint_action(factors.at(factor))); }

ModuleAction ProductAlgebra::trivial(std::size_t dim) const { return trivial_module(algebra, dim); }

std::vector<Vector> ProductAlgebra::embed(std::size_t factor, const Matrix& columns) const {
  std::vector<Vector> out;
  for (std::size_t c = 0; c < columns.cols(); ++c) {
    Vector v(algebra->dim());
    for (std::size_t r = 0; r < columns.rows(); ++r) v[offsets.at(factor) + r] = columns(r, c);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vector> ProductAlgebra::embed_all(std::size_t factor) const {
  return embed(factor, Matrix::identity(factors.at(factor)->dim()));
}

ProductAlgebra product_algebra(const std::vector<AlgebraPtr>& factors) {
  if (factors.empty()) throw GelfandError(ErrorKind::InvalidInput, "empty product");
  ProductAlgebra p;
  p.factors = factors;
  LieAlgebra sum = *factors.front();
  p.offsets.push_back(0);
  for (std::size_t i = 1; i < factors.size(); ++i) {
    p.offsets.push_back(sum.dim());
    sum = direct_sum(sum, *factors[i]);
  }
  p.algebra = share(std::move(sum));
  return p;
}

LieAlgebra heisenberg_over(std::size_t size) {
  auto gl = share(classical_algebra(ClassicalFamily::gl, size));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < size; ++i) labels.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < size; ++i) labels.push_back("y" + std::to_string(i + 1));
  labels.push_back("z");
  return two_step_algebra(realified(standard_action(gl)), {trivial_module(gl, 1)}, std::move(labels));
}

SubalgebraEmbedding span_embedding(const AlgebraPtr& ambient, const std::vector<Vector>& columns) {
  return {ambient, Matrix::from_columns(ambient->dim(), columns)};
}

std::vector<Vector> diagonal_columns(std::size_t dim) {
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < dim; ++i) {
    Vector v(2 * dim);
    v[i] = v[dim + i] = 1;
    cols.push_back(v);
  }
  return cols;
}

SubalgebraEmbedding symplectic_in(const AlgebraPtr& linear, std::size_t n) {
  LieAlgebra sp = classical_algebra(ClassicalFamily::sp, 2 * n);
  return embed_matrices(linear, *sp.matrix_rep);
}

SubalgebraEmbedding unitary_in_orthogonal(const AlgebraPtr& so2n) {
  const std::size_t size = so2n->rep_size(), n = size / 2;
  Matrix first(size, n), second(size, n);
  for (std::size_t i = 0; i < n; ++i) {
    first(i, i) = 1;
    second(n + i, i) = 1;
  }
  ModuleAction std = standard_action(so2n);
  return intersect(subspace_stabilizer(std, first), subspace_stabilizer(std, second));
}

namespace {

std::vector<std::string> prefixed(const std::string& head, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(head + std::to_string(i + 1));
  return out;
}

SpaceSpec checked(SpaceSpec s) {
  validate_space(s);
  return s;
}

}  // namespace

SpaceSpec fixture_h2_su2() {
  SpaceSpec s = fixture_c2n_sp(1, LinearGroup::Special, SymplecticGroup::Plain, true);
  s.name = "h2_su2";
  return s;
}

SpaceSpec fixture_c2h2_su2() {
  auto sl2 = share(classical_algebra(ClassicalFamily::sl, 2));
  ModuleAction v = realified(standard_action(sl2));
  LieAlgebra abelian = abelian_algebra(4);
  abelian.labels = {"a1", "a2", "b1", "b2"};
  LieAlgebra n = direct_sum(abelian, heisenberg_over(2));
  n.kind = AlgebraKind::Nilpotent;
  ModuleAction act = direct_sum_all({v, v, trivial_module(sl2, 1)});
  return checked(make_space("c2h2_su2", std::move(n), sl2, act, whole(sl2)));
}

SpaceSpec fixture_r2n_so2n_un(std::size_t n) {
  auto so = share(classical_algebra(ClassicalFamily::so, 2 * n));
  LieAlgebra vec = abelian_algebra(2 * n, "x");
  return checked(make_space("r" + std::to_string(2 * n) + "_so" + std::to_string(2 * n) + "_u" + std::to_string(n),
                            std::move(vec), so, standard_action(so), unitary_in_orthogonal(so)));
}

SpaceSpec fixture_c2n_sp(std::size_t n, LinearGroup lg, SymplecticGroup kg, bool center) {
  const std::size_t size = 2 * n;
  auto l = share(classical_algebra(lg == LinearGroup::Special ? ClassicalFamily::sl : ClassicalFamily::gl, size));
  if (kg == SymplecticGroup::WithCenter && lg == LinearGroup::Special)
    throw GelfandError(ErrorKind::InvalidInput, "the central U_1 lies outside SU_2n");
  SubalgebraEmbedding k = symplectic_in(l, n);
  if (kg == SymplecticGroup::WithCenter) {
    std::vector<Vector> cols = k.inj.columns();
    cols.push_back(embed_matrices(l, {Matrix::identity(size)}).inj.column(0));
    k = span_embedding(l, cols);
  }
  ModuleAction act = realified(standard_action(l));
  LieAlgebra nil;
  if (center) {
    nil = heisenberg_over(size);
    act = direct_sum(act, trivial_module(l, 1));
  } else {
    nil = abelian_algebra(2 * size);
    nil.labels = prefixed("x", size);
    for (const std::string& s : prefixed("y", size)) nil.labels.push_back(s);
  }
  std::string name = std::string(center ? "h" : "c") + std::to_string(size) + "_" +
                     (lg == LinearGroup::Special ? "su" : "u") + std::to_string(size) + "_sp" + std::to_string(n) +
                     (kg == SymplecticGroup::WithCenter ? "u1" : "");
  return checked(make_space(name, std::move(nil), l, act, k));
}

SpaceSpec fixture_r6_su4_u3() {
  auto sl4 = share(classical_algebra(ClassicalFamily::sl, 4));
  ModuleAction std4 = standard_action(sl4);
  Matrix three(4, 3), one(4, 1);
  for (std::size_t i = 0; i < 3; ++i) three(i, i) = 1;
  one(3, 0) = 1;
  SubalgebraEmbedding k = intersect(subspace_stabilizer(std4, three), subspace_stabilizer(std4, one));
  LieAlgebra vec = abelian_algebra(6, "x");
  return checked(make_space("r6_su4_u3", std::move(vec), sl4, exterior_square(std4), k));
}

SpaceSpec fixture_diag_so(std::size_t n) {
  auto so = share(classical_algebra(ClassicalFamily::so, n));
  auto l = share(direct_sum(*so, *so));
  ModuleAction act = on_summand(standard_action(so), l, 0);
  LieAlgebra vec = abelian_algebra(n, "x");
  return checked(make_space("diag_so" + std::to_string(n), std::move(vec), l, act,
                            span_embedding(l, diagonal_columns(so->dim()))));
}

SpaceSpec fixture_hn_un_sun(std::size_t n) {
  auto gl = share(classical_algebra(ClassicalFamily::gl, n));
  auto sl = share(classical_algebra(ClassicalFamily::sl, n));
  auto l = share(direct_sum(*gl, *sl));
  const std::size_t dgl = gl->dim(), dsl = sl->dim();
  SubalgebraEmbedding sl_in_gl = embed_matrices(gl, *sl->matrix_rep);
  std::vector<Vector> cols;
  for (std::size_t a = 0; a < dsl; ++a) {
    Vector v(dgl + dsl);
    for (std::size_t r = 0; r < dgl; ++r) v[r] = sl_in_gl.inj(r, a);
    v[dgl + a] = 1;
    cols.push_back(v);
  }
  Vector center(dgl + dsl);
  Vector id = embed_matrices(gl, {Matrix::identity(n)}).inj.column(0);
  for (std::size_t r = 0; r < dgl; ++r) center[r] = id[r];
  cols.push_back(center);
  ModuleAction act = on_summand(direct_sum(realified(standard_action(gl)), trivial_module(gl, 1)), l, 0);
  return checked(make_space("h" + std::to_string(n) + "_u" + std::to_string(n) + "_su" + std::to_string(n),
                            heisenberg_over(n), l, act, span_embedding(l, cols)));
}

SpaceSpec fixture_ex6_sp(std::size_t n) {
  auto spn = share(classical_algebra(ClassicalFamily::sp, 2 * n));
  auto sp1 = share(classical_algebra(ClassicalFamily::sp, 2));
  auto pair = share(direct_sum(*spn, *sp1));
  auto l = share(direct_sum(*pair, *sp1));
  const std::size_t dn = spn->dim(), d1 = sp1->dim();
  // Modules of sp_n + sp_1: H^n = C^2n (x) C^2 and H_0 = adjoint of sp_1.
  ModuleAction w = tensor(on_summand(standard_action(spn), pair, 0), on_summand(standard_action(sp1), pair, dn));
  ModuleAction z = on_summand(adjoint_action(sp1), pair, dn);
  std::vector<std::string> labels = prefixed("w", w.dimV);
  for (const std::string& s : prefixed("z", z.dimV)) labels.push_back(s);
  LieAlgebra nil = two_step_algebra(w, {z}, labels);
  ModuleAction act = on_summand(direct_sum(w, z), l, 0);
  std::vector<Vector> cols;
  for (std::size_t a = 0; a < dn; ++a) cols.push_back(unit_vector(dn + 2 * d1, a));
  for (std::size_t a = 0; a < d1; ++a) {
    Vector v(dn + 2 * d1);
    v[dn + a] = v[dn + d1 + a] = 1;
    cols.push_back(v);
  }
  return checked(make_space("ex6_sp" + std::to_string(n), std::move(nil), l, act, span_embedding(l, cols)));
}

}  // namespace gelfand
