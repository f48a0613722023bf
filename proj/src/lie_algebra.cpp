#include "gelfand/lie_algebra.hpp"

#include <algorithm>
#include <map>

#include "gelfand/sparse_linalg.hpp"

namespace gelfand {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AntisymmetryViolation: return "AntisymmetryViolation";
    case ErrorKind::JacobiViolation: return "JacobiViolation";
    case ErrorKind::UnsupportedSize: return "UnsupportedSize";
    case ErrorKind::NotDerivation: return "NotDerivation";
    case ErrorKind::DegenerateRestriction: return "DegenerateRestriction";
    case ErrorKind::BlockMismatch: return "BlockMismatch";
    case ErrorKind::NotBiHomogeneous: return "NotBiHomogeneous";
    case ErrorKind::MissingBorelData: return "MissingBorelData";
    case ErrorKind::BorelConstructionFailed: return "BorelConstructionFailed";
    case ErrorKind::IrreducibleSplitIncomplete: return "IrreducibleSplitIncomplete";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::RowOutOfRange: return "RowOutOfRange";
    case ErrorKind::EquivariantBracketNotUnique: return "EquivariantBracketNotUnique";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownEntry: return "UnknownEntry";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

void StructureConstants::add(std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
  if (value == 0) return;
  SparseVector& v = table_[i * dim_ + j];
  auto it = std::lower_bound(v.begin(), v.end(), k,
                             [](const Term& t, std::size_t idx) { return t.index < idx; });
  if (it != v.end() && it->index == k) {
    it->coeff += value;
    if (it->coeff == 0) v.erase(it);
  } else {
    v.insert(it, Term{k, value});
  }
}

void StructureConstants::set_bracket(std::size_t i, std::size_t j, const Vector& v) {
  SparseVector plus, minus;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) {
      plus.push_back({k, v[k]});
      minus.push_back({k, -v[k]});
    }
  table_[i * dim_ + j] = std::move(plus);
  if (i != j) table_[j * dim_ + i] = std::move(minus);
}

Rational StructureConstants::coeff(std::size_t i, std::size_t j, std::size_t k) const {
  for (const Term& t : bracket(i, j))
    if (t.index == k) return t.coeff;
  return 0;
}

Vector StructureConstants::bracket(const Vector& x, const Vector& y) const {
  Vector r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const SparseVector& b = bracket(i, j);
      if (b.empty()) continue;
      Rational s = x[i] * y[j];
      for (const Term& t : b) r[t.index] += s * t.coeff;
    }
  }
  return r;
}

bool StructureConstants::is_abelian() const {
  for (const auto& v : table_)
    if (!v.empty()) return false;
  return true;
}

bool operator==(const StructureConstants& a, const StructureConstants& b) {
  if (a.dim_ != b.dim_) return false;
  for (std::size_t p = 0; p < a.table_.size(); ++p) {
    const auto& x = a.table_[p];
    const auto& y = b.table_[p];
    if (x.size() != y.size()) return false;
    for (std::size_t q = 0; q < x.size(); ++q)
      if (x[q].index != y[q].index || x[q].coeff != y[q].coeff) return false;
  }
  return true;
}

std::string to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::Reductive: return "reductive";
    case AlgebraKind::Nilpotent: return "nilpotent";
    case AlgebraKind::General: return "general";
  }
  return "general";
}

Matrix LieAlgebra::ad(const Vector& x) const {
  const std::size_t d = dim();
  Matrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Vector col = sc.bracket(x, unit_vector(d, j));
    for (std::size_t i = 0; i < d; ++i) m(i, j) = col[i];
  }
  return m;
}

Matrix LieAlgebra::ad(std::size_t i) const {
  const std::size_t d = dim();
  Matrix m(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (const Term& t : sc.bracket(i, j)) m(t.index, j) = t.coeff;
  return m;
}

std::size_t LieAlgebra::rep_size() const {
  if (!matrix_rep || matrix_rep->empty()) return 0;
  return matrix_rep->front().rows();
}

Matrix LieAlgebra::represent(const Vector& x) const {
  if (!matrix_rep) throw GelfandError(ErrorKind::InvalidInput, "algebra has no matrix realization");
  const std::size_t n = rep_size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) m += x[i] * (*matrix_rep)[i];
  return m;
}

bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
  return a.sc == b.sc && a.labels == b.labels && a.matrix_rep == b.matrix_rep &&
         a.borel_indices == b.borel_indices && a.kind == b.kind;
}

AlgebraPtr share(LieAlgebra alg) { return std::make_shared<const LieAlgebra>(std::move(alg)); }

Matrix ModuleAction::act(const Vector& x) const {
  Matrix m(dimV, dimV);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) m += x[i] * rho[i];
  return m;
}

namespace {

std::vector<std::string> default_labels(std::size_t dim, const std::string& prefix) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back(prefix + std::to_string(i + 1));
  return labels;
}

// Sum over cyclic permutations of [[e_i, e_j], e_k], accumulated sparsely.
void add_double_bracket(const StructureConstants& sc, std::size_t i, std::size_t j, std::size_t k,
                        std::map<std::size_t, Rational>& acc) {
  for (const Term& t : sc.bracket(i, j))
    for (const Term& u : sc.bracket(t.index, k)) acc[u.index] += t.coeff * u.coeff;
}

}  // namespace

std::optional<std::vector<std::size_t>> jacobi_violation(const StructureConstants& sc) {
  const std::size_t d = sc.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        std::map<std::size_t, Rational> acc;
        add_double_bracket(sc, i, j, k, acc);
        add_double_bracket(sc, j, k, i, acc);
        add_double_bracket(sc, k, i, j, acc);
        for (const auto& [idx, v] : acc)
          if (v != 0) return std::vector<std::size_t>{i, j, k};
      }
  return std::nullopt;
}

LieAlgebra build_algebra(StructureConstants sc, std::vector<std::string> labels, AlgebraKind kind) {
  const std::size_t d = sc.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      std::map<std::size_t, Rational> sum;
      for (const Term& t : sc.bracket(i, j)) sum[t.index] += t.coeff;
      for (const Term& t : sc.bracket(j, i)) sum[t.index] += t.coeff;
      for (const auto& [k, v] : sum)
        if (v != 0)
          throw GelfandError(ErrorKind::AntisymmetryViolation,
                             "c[" + std::to_string(i) + "][" + std::to_string(j) + "][" +
                                 std::to_string(k) + "] != -c[" + std::to_string(j) + "][" +
                                 std::to_string(i) + "][" + std::to_string(k) + "]",
                             {i, j, k});
    }
  if (auto w = jacobi_violation(sc))
    throw GelfandError(ErrorKind::JacobiViolation,
                       "Jacobi identity fails on basis triple (" + std::to_string((*w)[0]) + ", " +
                           std::to_string((*w)[1]) + ", " + std::to_string((*w)[2]) + ")",
                       *w);
  LieAlgebra alg;
  alg.sc = std::move(sc);
  alg.labels = labels.empty() ? default_labels(d, "e") : std::move(labels);
  if (alg.labels.size() != d) throw GelfandError(ErrorKind::InvalidInput, "label count differs from dimension");
  alg.kind = kind;
  return alg;
}

void validate_realization(const LieAlgebra& alg) {
  const std::size_t d = alg.dim();
  if (alg.matrix_rep) {
    const auto& rep = *alg.matrix_rep;
    if (rep.size() != d) throw GelfandError(ErrorKind::InvalidInput, "matrix count differs from dimension");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        Matrix lhs = commutator(rep[i], rep[j]);
        Matrix rhs(lhs.rows(), lhs.cols());
        for (const Term& t : alg.sc.bracket(i, j)) rhs += t.coeff * rep[t.index];
        if (!(lhs == rhs))
          throw GelfandError(ErrorKind::InvalidInput,
                             "matrix bracket mismatch on (" + std::to_string(i) + ", " + std::to_string(j) + ")",
                             {i, j});
      }
  }
  if (alg.borel_indices) {
    Matrix span(d, alg.borel_indices->size());
    for (std::size_t c = 0; c < alg.borel_indices->size(); ++c) span((*alg.borel_indices)[c], c) = 1;
    if (!is_subalgebra(alg, span))
      throw GelfandError(ErrorKind::InvalidInput, "Borel indices do not span a subalgebra");
  }
}

LieAlgebra algebra_from_matrices(const std::vector<Matrix>& basis, std::vector<std::string> labels,
                                 AlgebraKind kind, std::optional<std::vector<std::size_t>> borel) {
  const std::size_t d = basis.size();
  if (d == 0) {
    LieAlgebra alg;
    alg.kind = kind;
    alg.matrix_rep = std::vector<Matrix>{};
    if (borel) alg.borel_indices = borel;
    return alg;
  }
  const std::size_t n = basis.front().rows();
  std::vector<Vector> flat;
  flat.reserve(d);
  for (const auto& m : basis) flat.push_back(m.flatten());
  SubspaceCoordinates coords(Matrix::from_columns(n * n, flat));
  StructureConstants sc(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Matrix c = commutator(basis[i], basis[j]);
      if (c.is_zero()) continue;
      auto x = coords.try_coordinates(c.flatten());
      if (!x) throw GelfandError(ErrorKind::InvalidInput, "matrix span is not closed under commutators", {i, j});
      sc.set_bracket(i, j, *x);
    }
  LieAlgebra alg;
  alg.sc = std::move(sc);
  alg.labels = labels.empty() ? default_labels(d, "e") : std::move(labels);
  alg.matrix_rep = basis;
  alg.borel_indices = std::move(borel);
  alg.kind = kind;
  return alg;
}

LieAlgebra abelian_algebra(std::size_t dim, const std::string& prefix) {
  LieAlgebra alg;
  alg.sc = StructureConstants(dim);
  alg.labels = default_labels(dim, prefix);
  alg.kind = AlgebraKind::Nilpotent;
  return alg;
}

LieAlgebra heisenberg_algebra(std::size_t n) {
  const std::size_t d = 2 * n + 1;
  StructureConstants sc(d);
  for (std::size_t i = 0; i < n; ++i) sc.set_bracket(i, n + i, unit_vector(d, 2 * n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) labels.push_back("y" + std::to_string(i + 1));
  labels.push_back("z");
  LieAlgebra alg;
  alg.sc = std::move(sc);
  alg.labels = std::move(labels);
  alg.kind = AlgebraKind::Nilpotent;
  return alg;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t da = a.dim(), db = b.dim(), d = da + db;
  StructureConstants sc(d);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (const Term& t : a.sc.bracket(i, j)) sc.add(i, j, t.index, t.coeff);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (const Term& t : b.sc.bracket(i, j)) sc.add(da + i, da + j, da + t.index, t.coeff);
  LieAlgebra alg;
  alg.sc = std::move(sc);
  alg.labels = a.labels;
  alg.labels.insert(alg.labels.end(), b.labels.begin(), b.labels.end());
  if (a.matrix_rep && b.matrix_rep) {
    const std::size_t na = a.rep_size(), nb = b.rep_size();
    std::vector<Matrix> rep;
    for (const auto& m : *a.matrix_rep) rep.push_back(block_diagonal(m, Matrix(nb, nb)));
    for (const auto& m : *b.matrix_rep) rep.push_back(block_diagonal(Matrix(na, na), m));
    alg.matrix_rep = std::move(rep);
  }
  if (a.borel_indices && b.borel_indices) {
    std::vector<std::size_t> borel = *a.borel_indices;
    for (std::size_t i : *b.borel_indices) borel.push_back(da + i);
    alg.borel_indices = std::move(borel);
  }
  if (a.kind == b.kind) alg.kind = a.kind;
  else if (da == 0) alg.kind = b.kind;
  else if (db == 0) alg.kind = a.kind;
  else alg.kind = AlgebraKind::General;
  return alg;
}

void validate_action(const ModuleAction& act) {
  const LieAlgebra& alg = *act.algebra;
  if (act.rho.size() != alg.dim()) throw GelfandError(ErrorKind::InvalidInput, "action matrix count differs from dimension");
  for (const auto& m : act.rho)
    if (m.rows() != act.dimV || m.cols() != act.dimV)
      throw GelfandError(ErrorKind::InvalidInput, "action matrix has wrong size");
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i + 1; j < alg.dim(); ++j) {
      Matrix lhs(act.dimV, act.dimV);
      for (const Term& t : alg.sc.bracket(i, j)) lhs += t.coeff * act.rho[t.index];
      if (!(lhs == commutator(act.rho[i], act.rho[j])))
        throw GelfandError(ErrorKind::InvalidInput,
                           "action is not a homomorphism on (" + std::to_string(i) + ", " + std::to_string(j) + ")",
                           {i, j});
    }
}

void check_derivations(const LieAlgebra& n, const ModuleAction& act) {
  const std::size_t d = n.dim();
  if (act.dimV != d) throw GelfandError(ErrorKind::InvalidInput, "action dimension differs from the nilpotent part");
  for (std::size_t xi = 0; xi < act.rho.size(); ++xi) {
    const Matrix& D = act.rho[xi];
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = x + 1; y < d; ++y) {
        Vector ex = unit_vector(d, x), ey = unit_vector(d, y);
        Vector lhs = D * n.bracket(ex, ey);
        Vector rhs = n.bracket(D * ex, ey) + n.bracket(ex, D * ey);
        if (lhs != rhs)
          throw GelfandError(ErrorKind::NotDerivation,
                             "basis element " + std::to_string(xi) + " is not a derivation on (" +
                                 std::to_string(x) + ", " + std::to_string(y) + ")",
                             {xi, x, y});
      }
  }
}

LieAlgebra semidirect(const LieAlgebra& l, const LieAlgebra& n, const ModuleAction& act) {
  check_derivations(n, act);
  const std::size_t dl = l.dim(), dn = n.dim(), d = dl + dn;
  StructureConstants sc(d);
  for (std::size_t i = 0; i < dl; ++i)
    for (std::size_t j = 0; j < dl; ++j)
      for (const Term& t : l.sc.bracket(i, j)) sc.add(i, j, t.index, t.coeff);
  for (std::size_t i = 0; i < dl; ++i)
    for (std::size_t x = 0; x < dn; ++x)
      for (std::size_t y = 0; y < dn; ++y) {
        const Rational& c = act.rho[i](y, x);
        if (c == 0) continue;
        sc.add(i, dl + x, dl + y, c);
        sc.add(dl + x, i, dl + y, -c);
      }
  for (std::size_t x = 0; x < dn; ++x)
    for (std::size_t y = 0; y < dn; ++y)
      for (const Term& t : n.sc.bracket(x, y)) sc.add(dl + x, dl + y, dl + t.index, t.coeff);
  std::vector<std::string> labels = l.labels;
  labels.insert(labels.end(), n.labels.begin(), n.labels.end());
  AlgebraKind kind = dl == 0 ? n.kind : AlgebraKind::General;
  return build_algebra(std::move(sc), std::move(labels), kind);
}

namespace {

Matrix span_of_brackets(const LieAlgebra& alg, const Matrix& a, const Matrix& b) {
  const std::size_t d = alg.dim();
  Echelon e(d);
  std::vector<Vector> vecs;
  for (std::size_t i = 0; i < a.cols(); ++i) {
    Vector x = a.column(i);
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Vector v = alg.bracket(x, b.column(j));
      if (!is_zero(v) && e.insert(v)) vecs.push_back(v);
    }
  }
  return Matrix::from_columns(d, vecs);
}

}  // namespace

std::vector<std::size_t> lower_central_series_dims(const LieAlgebra& alg) {
  const std::size_t d = alg.dim();
  Matrix g = Matrix::identity(d);
  Matrix cur = g;
  std::vector<std::size_t> dims{d};
  while (true) {
    Matrix next = span_of_brackets(alg, g, cur);
    if (next.cols() == dims.back()) break;
    dims.push_back(next.cols());
    if (next.cols() == 0) break;
    cur = next;
  }
  return dims;
}

bool is_nilpotent(const LieAlgebra& alg) { return lower_central_series_dims(alg).back() == 0; }

Matrix derived_subalgebra(const LieAlgebra& alg) {
  Matrix g = Matrix::identity(alg.dim());
  return span_of_brackets(alg, g, g);
}

Matrix center(const LieAlgebra& alg) {
  const std::size_t d = alg.dim();
  Echelon e(d);
  for (std::size_t i = 0; i < d; ++i) {
    Matrix a = alg.ad(i);
    for (std::size_t r = 0; r < d; ++r) e.insert(a.row(r));
  }
  return Matrix::from_columns(d, e.kernel());
}

bool is_subalgebra(const LieAlgebra& alg, const Matrix& span) {
  const std::size_t d = alg.dim();
  Echelon e(d);
  for (std::size_t j = 0; j < span.cols(); ++j) e.insert(span.column(j));
  for (std::size_t i = 0; i < span.cols(); ++i)
    for (std::size_t j = i + 1; j < span.cols(); ++j)
      if (!e.contains(alg.bracket(span.column(i), span.column(j)))) return false;
  return true;
}

SubalgebraEmbedding embed_matrices(const AlgebraPtr& ambient, const std::vector<Matrix>& mats) {
  if (!ambient->matrix_rep) throw GelfandError(ErrorKind::InvalidInput, "ambient algebra has no matrices");
  const auto& rep = *ambient->matrix_rep;
  const std::size_t n = ambient->rep_size();
  std::vector<Vector> flat;
  for (const Matrix& m : rep) flat.push_back(m.flatten());
  SubspaceCoordinates coords(Matrix::from_columns(n * n, flat));
  Matrix inj(ambient->dim(), mats.size());
  for (std::size_t c = 0; c < mats.size(); ++c) {
    auto x = coords.try_coordinates(mats[c].flatten());
    if (!x) throw GelfandError(ErrorKind::InvalidInput, "matrix lies outside the ambient algebra", {c});
    inj.set_column(c, *x);
  }
  return {ambient, inj};
}

void validate_embedding(const SubalgebraEmbedding& emb) {
  if (emb.inj.rows() != emb.ambient->dim())
    throw GelfandError(ErrorKind::InvalidInput, "embedding rows differ from ambient dimension");
  if (rank(emb.inj) != emb.inj.cols())
    throw GelfandError(ErrorKind::InvalidInput, "embedding lacks full column rank");
  if (!is_subalgebra(*emb.ambient, emb.inj))
    throw GelfandError(ErrorKind::InvalidInput, "embedded image is not closed under the bracket");
}

LieAlgebra induced_algebra(const SubalgebraEmbedding& emb, const std::string& prefix) {
  const LieAlgebra& amb = *emb.ambient;
  const std::size_t d = emb.dim();
  StructureConstants sc(d);
  if (d > 0) {
    SubspaceCoordinates coords(emb.inj);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a + 1; b < d; ++b) {
        Vector v = amb.bracket(emb.inj.column(a), emb.inj.column(b));
        if (is_zero(v)) continue;
        auto c = coords.try_coordinates(v);
        if (!c) throw GelfandError(ErrorKind::InvalidInput, "embedded image is not closed under the bracket", {a, b});
        sc.set_bracket(a, b, *c);
      }
  }
  LieAlgebra alg;
  alg.sc = std::move(sc);
  alg.labels = default_labels(d, prefix);
  if (amb.matrix_rep) {
    std::vector<Matrix> rep;
    for (std::size_t a = 0; a < d; ++a) rep.push_back(amb.represent(emb.inj.column(a)));
    alg.matrix_rep = std::move(rep);
  }
  alg.kind = AlgebraKind::General;
  return alg;
}

ModuleAction restrict_action(const ModuleAction& act, const SubalgebraEmbedding& emb) {
  ModuleAction r;
  r.algebra = share(induced_algebra(emb));
  r.dimV = act.dimV;
  for (std::size_t a = 0; a < emb.dim(); ++a) r.rho.push_back(act.act(emb.inj.column(a)));
  return r;
}

ModuleAction adjoint_action(const AlgebraPtr& alg) {
  ModuleAction act;
  act.algebra = alg;
  act.dimV = alg->dim();
  for (std::size_t i = 0; i < alg->dim(); ++i) act.rho.push_back(alg->ad(i));
  return act;
}

ModuleAction standard_action(const AlgebraPtr& alg) {
  if (!alg->matrix_rep) throw GelfandError(ErrorKind::InvalidInput, "algebra has no matrix realization");
  ModuleAction act;
  act.algebra = alg;
  act.dimV = alg->rep_size();
  act.rho = *alg->matrix_rep;
  return act;
}

}  // namespace gelfand
