#include "gelfand/stabilizer.hpp"

#include "gelfand/sparse_linalg.hpp"

namespace gelfand {

Vector random_point(std::mt19937_64& rng, std::size_t dim, int bound) {
  const auto width = static_cast<std::uint64_t>(2 * bound + 1);
  Vector v(dim);
  for (auto& x : v) x = static_cast<long>(rng() % width) - bound;
  return v;
}

namespace {

SubalgebraEmbedding kernel_embedding(const AlgebraPtr& alg, Echelon& ech) {
  std::vector<Vector> ker = ech.kernel();
  return {alg, Matrix::from_columns(alg->dim(), ker)};
}

}  // namespace

SubalgebraEmbedding coadjoint_stabilizer(const ModuleAction& act, const Vector& point) {
  const std::size_t d = act.algebra->dim();
  // Row r of the system: (point o rho[xi])_r = sum_i xi_i (rho_i^T point)_r.
  Matrix sys(act.dimV, d);
  for (std::size_t i = 0; i < d; ++i) {
    const Matrix& r = act.rho[i];
    for (std::size_t c = 0; c < act.dimV; ++c) {
      Rational s;
      for (std::size_t a = 0; a < act.dimV; ++a)
        if (point[a] != 0 && r(a, c) != 0) s += point[a] * r(a, c);
      sys(c, i) = s;
    }
  }
  return {act.algebra, kernel(sys)};
}

GenericStabilizer generic_stabilizer(const ModuleAction& act, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GenericStabilizer best;
  bool have = false;
  for (std::size_t s = 0; s < samples; ++s) {
    Vector p = random_point(rng, act.dimV);
    SubalgebraEmbedding st = coadjoint_stabilizer(act, p);
    const std::size_t orbit = act.algebra->dim() - st.dim();
    if (!have || orbit > best.orbit_dim) {
      best = {st, orbit, p};
      have = true;
    }
  }
  if (!have) best = {whole(act.algebra), 0, Vector(act.dimV)};
  return best;
}

SubalgebraEmbedding vector_stabilizer(const ModuleAction& act, const Matrix& vectors) {
  const std::size_t d = act.algebra->dim();
  Echelon ech(d);
  for (std::size_t v = 0; v < vectors.cols(); ++v) {
    Vector x = vectors.column(v);
    std::vector<Vector> images;
    for (std::size_t i = 0; i < d; ++i) images.push_back(act.rho[i] * x);
    for (std::size_t r = 0; r < act.dimV; ++r) {
      Vector row(d);
      for (std::size_t i = 0; i < d; ++i) row[i] = images[i][r];
      if (!is_zero(row)) ech.insert(row);
    }
  }
  return kernel_embedding(act.algebra, ech);
}

SubalgebraEmbedding subspace_stabilizer(const ModuleAction& act, const Matrix& subspace) {
  const std::size_t d = act.algebra->dim();
  // rho[xi] w lies in W iff it is annihilated by every functional vanishing on W.
  Matrix annihilator = kernel(subspace.transpose());
  Echelon ech(d);
  for (std::size_t v = 0; v < subspace.cols(); ++v) {
    Vector w = subspace.column(v);
    std::vector<Vector> images;
    for (std::size_t i = 0; i < d; ++i) images.push_back(act.rho[i] * w);
    for (std::size_t f = 0; f < annihilator.cols(); ++f) {
      Vector phi = annihilator.column(f);
      Vector row(d);
      for (std::size_t i = 0; i < d; ++i) row[i] = dot(phi, images[i]);
      if (!is_zero(row)) ech.insert(row);
    }
  }
  return kernel_embedding(act.algebra, ech);
}

SubalgebraEmbedding centralizer(const AlgebraPtr& alg, const Matrix& elements) {
  const std::size_t d = alg->dim();
  Echelon ech(d);
  for (std::size_t e = 0; e < elements.cols(); ++e) {
    // [x, y] = -ad(y) x
    Matrix ady = alg->ad(elements.column(e));
    for (std::size_t r = 0; r < d; ++r) {
      Vector row = ady.row(r);
      if (!is_zero(row)) ech.insert(row);
    }
  }
  return kernel_embedding(alg, ech);
}

SubalgebraEmbedding intersect(const SubalgebraEmbedding& a, const SubalgebraEmbedding& b) {
  return {a.ambient, intersect_columns(a.inj, b.inj)};
}

SubalgebraEmbedding whole(const AlgebraPtr& alg) { return {alg, Matrix::identity(alg->dim())}; }

Matrix trace_form(const LieAlgebra& alg) {
  if (!alg.matrix_rep) throw GelfandError(ErrorKind::InvalidInput, "trace form needs a matrix realization");
  const auto& rep = *alg.matrix_rep;
  const std::size_t d = alg.dim();
  Matrix f(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Rational t;
      const Matrix &a = rep[i], &b = rep[j];
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
          if (a(r, c) != 0 && b(c, r) != 0) t += a(r, c) * b(c, r);
      f(i, j) = t;
      f(j, i) = t;
    }
  return f;
}

Matrix invariant_complement(const LieAlgebra& l, const SubalgebraEmbedding& k, const Matrix& form) {
  const std::size_t d = l.dim();
  if (k.dim() == 0) return Matrix::identity(d);
  Matrix fk = form * k.inj;  // columns F k_i
  Matrix restricted = k.inj.transpose() * fk;
  if (rank(restricted) != k.dim())
    throw GelfandError(ErrorKind::DegenerateRestriction, "invariant form is degenerate on the subalgebra");
  Matrix m = kernel(fk.transpose());
  if (m.cols() + k.dim() != d)
    throw GelfandError(ErrorKind::DegenerateRestriction, "complement does not have complementary dimension");
  return m;
}

Factorization factorization_check(const LieAlgebra& g, const SubalgebraEmbedding& g1, const SubalgebraEmbedding& g2) {
  Factorization f;
  f.sum_dim = rank(hconcat(g1.inj, g2.inj));
  f.holds = f.sum_dim == g.dim();
  f.intersection_dim = g1.dim() + g2.dim() - f.sum_dim;
  return f;
}

}  // namespace gelfand
