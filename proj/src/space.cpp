#include "gelfand/space.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "gelfand/modules.hpp"
#include "gelfand/sparse_linalg.hpp"
#include "gelfand/stabilizer.hpp"

namespace gelfand {

SpaceSpec make_space(std::string name, LieAlgebra n, AlgebraPtr l, ModuleAction act, SubalgebraEmbedding k,
                     Matrix form) {
  SpaceSpec s;
  s.name = std::move(name);
  s.n = std::move(n);
  s.l = std::move(l);
  s.act = std::move(act);
  s.k = std::move(k);
  if (s.k.dim() == s.l->dim()) {
    s.m_basis = Matrix(s.l->dim(), 0);
    s.form = std::move(form);
    return s;
  }
  s.form = form.rows() == 0 ? trace_form(*s.l) : std::move(form);
  s.m_basis = invariant_complement(*s.l, s.k, s.form);
  return s;
}

bool operator==(const SpaceSpec& a, const SpaceSpec& b) {
  return a.name == b.name && a.n == b.n && *a.l == *b.l && a.form == b.form && a.act.dimV == b.act.dimV &&
         a.act.rho == b.act.rho && a.k.inj == b.k.inj && a.m_basis == b.m_basis;
}

SpaceSpec heisenberg_type_space(std::string name, LieAlgebra n, ModuleAction act) {
  AlgebraPtr l = act.algebra;
  return make_space(std::move(name), std::move(n), l, std::move(act), whole(l));
}

bool is_heisenberg_type(const SpaceSpec& space) { return space.k.dim() == space.l->dim(); }

void validate_space(const SpaceSpec& space) {
  if (space.act.algebra.get() != space.l.get() && !(*space.act.algebra == *space.l))
    throw GelfandError(ErrorKind::InvalidInput, "action is not by the algebra l");
  if (space.act.dimV != space.n.dim())
    throw GelfandError(ErrorKind::InvalidInput, "action dimension differs from dim n");
  validate_action(space.act);
  check_derivations(space.n, space.act);
  if (!is_nilpotent(space.n)) throw GelfandError(ErrorKind::InvalidInput, "n is not nilpotent");
  validate_embedding(space.k);
  const std::size_t dl = space.l->dim();
  if (space.k.dim() + space.m_basis.cols() != dl || rank(hconcat(space.k.inj, space.m_basis)) != dl)
    throw GelfandError(ErrorKind::InvalidInput, "k and m are not complementary in l");
  for (std::size_t a = 0; a < space.k.dim(); ++a)
    for (std::size_t b = 0; b < space.m_basis.cols(); ++b) {
      Vector v = space.l->bracket(space.k.inj.column(a), space.m_basis.column(b));
      if (!is_zero(v) && rank(hconcat(space.m_basis, Matrix::from_columns(dl, {v}))) != space.m_basis.cols())
        throw GelfandError(ErrorKind::InvalidInput, "m is not stable under k", {a, b});
    }
}

Matrix diagonal_part(const SubalgebraEmbedding& emb) {
  const LieAlgebra& amb = *emb.ambient;
  if (!amb.matrix_rep || emb.dim() == 0) return Matrix(amb.dim(), 0);
  const std::size_t n = amb.rep_size(), d = emb.dim();
  // Unknown coefficients c over the embedding basis; off-diagonal entries vanish.
  std::vector<Matrix> mats;
  for (std::size_t a = 0; a < d; ++a) mats.push_back(amb.represent(emb.inj.column(a)));
  Echelon ech(d);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (r == c) continue;
      Vector row(d);
      for (std::size_t a = 0; a < d; ++a) row[a] = mats[a](r, c);
      if (!is_zero(row)) ech.insert(row);
    }
  std::vector<Vector> out;
  for (const Vector& c : ech.kernel()) out.push_back(emb.inj * c);
  return Matrix::from_columns(amb.dim(), out);
}

namespace {

// Splits each subspace in `parts` by the eigenvalues of one operator.
std::vector<Matrix> split_by(const std::vector<Matrix>& parts, const std::function<Vector(const Vector&)>& op,
                             const std::set<Rational>& candidates) {
  std::vector<Matrix> out;
  for (const Matrix& s : parts) {
    if (s.cols() <= 1) {
      out.push_back(s);
      continue;
    }
    // Matrix of op on s in the coordinates of s.
    SubspaceCoordinates coords(s);
    Matrix a(s.cols(), s.cols());
    for (std::size_t c = 0; c < s.cols(); ++c) {
      auto x = coords.try_coordinates(op(s.column(c)));
      if (!x) throw GelfandError(ErrorKind::InvalidInput, "subspace is not stable under the torus");
      a.set_column(c, *x);
    }
    std::size_t found = 0;
    for (const Rational& mu : candidates) {
      Matrix shifted = a - mu * Matrix::identity(s.cols());
      Matrix ker = kernel(shifted);
      if (ker.cols() == 0) continue;
      Matrix piece(s.rows(), ker.cols());
      for (std::size_t c = 0; c < ker.cols(); ++c) piece.set_column(c, primitive(s * ker.column(c)));
      out.push_back(piece);
      found += ker.cols();
    }
    if (found != s.cols()) throw GelfandError(ErrorKind::InvalidInput, "torus does not act diagonalizably");
  }
  return out;
}

}  // namespace

Matrix weight_refined(const LieAlgebra& l, const SubalgebraEmbedding& k, const Matrix& basis) {
  if (basis.cols() <= 1 || !l.matrix_rep) return basis;
  Matrix torus = diagonal_part(k);
  if (torus.cols() == 0) return basis;
  std::vector<Matrix> parts{basis};
  for (std::size_t t = 0; t < torus.cols(); ++t) {
    Vector tv = torus.column(t);
    Matrix diag = l.represent(tv);
    std::set<Rational> candidates;
    for (std::size_t i = 0; i < diag.rows(); ++i)
      for (std::size_t j = 0; j < diag.rows(); ++j) candidates.insert(diag(i, i) - diag(j, j));
    parts = split_by(parts, [&](const Vector& x) { return l.bracket(tv, x); }, candidates);
  }
  Matrix out(basis.rows(), 0);
  for (const Matrix& p : parts) out = hconcat(out, p);
  return out;
}

LieAlgebra rebase(const LieAlgebra& alg, const Matrix& basis, std::vector<std::string> labels) {
  const std::size_t d = basis.cols();
  SubspaceCoordinates coords(basis);
  StructureConstants sc(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      Vector v = alg.bracket(basis.column(a), basis.column(b));
      if (!is_zero(v)) sc.set_bracket(a, b, coords.coordinates(v));
    }
  LieAlgebra out;
  out.sc = std::move(sc);
  if (labels.empty())
    for (std::size_t a = 0; a < d; ++a) labels.push_back("b" + std::to_string(a + 1));
  out.labels = std::move(labels);
  out.kind = alg.kind;
  if (alg.matrix_rep) {
    std::vector<Matrix> mats;
    for (std::size_t a = 0; a < d; ++a) mats.push_back(alg.represent(basis.column(a)));
    out.matrix_rep = std::move(mats);
  }
  return out;
}

AdaptedSpace adapt(const SpaceSpec& space) {
  AdaptedSpace a;
  a.spec = space;
  const LieAlgebra& l = *space.l;
  a.m_basis = weight_refined(l, space.k, space.m_basis);
  a.dn = space.n.dim();
  a.dm = a.m_basis.cols();
  a.dk = space.k.dim();
  const std::size_t dl = l.dim(), d = a.dn + dl;
  Matrix lbasis = hconcat(a.m_basis, space.k.inj);
  SubspaceCoordinates coords(lbasis);
  // rho of each adapted l basis vector on n.
  std::vector<Matrix> rho;
  for (std::size_t c = 0; c < dl; ++c) rho.push_back(space.act.act(lbasis.column(c)));

  StructureConstants sc(d);
  for (std::size_t x = 0; x < a.dn; ++x)
    for (std::size_t y = x + 1; y < a.dn; ++y)
      for (const Term& t : space.n.sc.bracket(x, y)) {
        sc.add(x, y, t.index, t.coeff);
        sc.add(y, x, t.index, -t.coeff);
      }
  for (std::size_t c = 0; c < dl; ++c)
    for (std::size_t x = 0; x < a.dn; ++x)
      for (std::size_t y = 0; y < a.dn; ++y) {
        const Rational& v = rho[c](y, x);
        if (v == 0) continue;
        sc.add(a.dn + c, x, y, v);
        sc.add(x, a.dn + c, y, -v);
      }
  for (std::size_t c = 0; c < dl; ++c)
    for (std::size_t e = c + 1; e < dl; ++e) {
      Vector v = l.bracket(lbasis.column(c), lbasis.column(e));
      if (is_zero(v)) continue;
      Vector w = coords.coordinates(v);
      for (std::size_t i = 0; i < dl; ++i)
        if (w[i] != 0) {
          sc.add(a.dn + c, a.dn + e, a.dn + i, w[i]);
          sc.add(a.dn + e, a.dn + c, a.dn + i, -w[i]);
        }
    }
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < a.dn; ++x) labels.push_back("n:" + space.n.labels[x]);
  for (std::size_t c = 0; c < a.dm; ++c) labels.push_back("m:u" + std::to_string(c + 1));
  for (std::size_t c = 0; c < a.dk; ++c) labels.push_back("k:k" + std::to_string(c + 1));
  a.g.sc = std::move(sc);
  a.g.labels = labels;
  a.g.kind = AlgebraKind::General;

  a.full = std::make_shared<VarSpace>(std::vector<VarBlock>{{Block::n, a.dn}, {Block::m, a.dm}, {Block::k, a.dk}},
                                      labels);
  std::vector<std::string> reduced_labels(labels.begin(), labels.begin() + static_cast<long>(a.dn + a.dm));
  a.reduced = std::make_shared<VarSpace>(std::vector<VarBlock>{{Block::n, a.dn}, {Block::m, a.dm}}, reduced_labels);

  // kappa acts on the variable x_j by x_j -> [kappa, x_j] = sum_i c[kappa][j][i] x_i.
  const std::size_t dr = a.dn + a.dm;
  for (std::size_t c = 0; c < a.dk; ++c) {
    const std::size_t kappa = a.dn + a.dm + c;
    SparseOperator op(dr);
    for (std::size_t j = 0; j < dr; ++j)
      for (const Term& t : a.g.sc.bracket(kappa, j)) {
        if (t.index >= dr) throw GelfandError(ErrorKind::InvalidInput, "m is not stable under k", {c, j});
        op[j].emplace_back(t.index, t.coeff);
      }
    for (auto& col : op) std::sort(col.begin(), col.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
    a.k_ops.push_back(std::move(op));
  }
  return a;
}

SpaceSpec central_reduction(const SpaceSpec& space, std::optional<Matrix> z0) {
  const LieAlgebra& n = space.n;
  const std::size_t dn = n.dim();
  Matrix z = z0 ? *z0 : intersect_columns(center(n), derived_subalgebra(n));
  for (std::size_t c = 0; c < z.cols(); ++c) {
    for (std::size_t x = 0; x < dn; ++x)
      if (!is_zero(n.bracket(z.column(c), unit_vector(dn, x))))
        throw GelfandError(ErrorKind::InvalidInput, "reduction subspace is not central");
    for (const Matrix& r : space.act.rho)
      if (rank(hconcat(z, Matrix::from_columns(dn, {r * z.column(c)}))) != z.cols())
        throw GelfandError(ErrorKind::InvalidInput, "reduction subspace is not invariant");
  }
  // Complement: standard basis vectors independent of z, in order.
  Echelon ech(dn);
  for (std::size_t c = 0; c < z.cols(); ++c) ech.insert(z.column(c));
  std::vector<std::size_t> keep;
  for (std::size_t x = 0; x < dn; ++x)
    if (ech.insert(unit_vector(dn, x))) keep.push_back(x);
  Matrix full = hconcat(Matrix::identity(dn).select_columns(keep), z);
  SubspaceCoordinates coords(full);
  const std::size_t dq = keep.size();
  auto project = [&](const Vector& v) {
    Vector c = coords.coordinates(v);
    c.resize(dq);
    return c;
  };
  StructureConstants sc(dq);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < dq; ++a) {
    labels.push_back(n.labels[keep[a]]);
    for (std::size_t b = a + 1; b < dq; ++b) {
      Vector v = project(n.bracket(unit_vector(dn, keep[a]), unit_vector(dn, keep[b])));
      if (!is_zero(v)) sc.set_bracket(a, b, v);
    }
  }
  LieAlgebra q = build_algebra(std::move(sc), labels, AlgebraKind::Nilpotent);
  ModuleAction act{space.act.algebra, dq, {}};
  for (const Matrix& r : space.act.rho) {
    Matrix m(dq, dq);
    for (std::size_t a = 0; a < dq; ++a) m.set_column(a, project(r * unit_vector(dn, keep[a])));
    act.rho.push_back(m);
  }
  SpaceSpec out = space;
  out.name = space.name + "/center";
  out.n = std::move(q);
  out.act = std::move(act);
  return out;
}

SpaceSpec zero_bracket(const SpaceSpec& space) {
  SpaceSpec out = space;
  out.name = space.name + "/abelian";
  LieAlgebra ab = abelian_algebra(space.n.dim());
  ab.labels = space.n.labels;
  out.n = std::move(ab);
  return out;
}

}  // namespace gelfand
