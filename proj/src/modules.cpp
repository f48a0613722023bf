#include "gelfand/modules.hpp"

#include <algorithm>
#include <map>

#include "gelfand/sparse_linalg.hpp"

namespace gelfand {

ModuleAction dual(const ModuleAction& act) {
  ModuleAction out{act.algebra, act.dimV, {}};
  for (const Matrix& r : act.rho) out.rho.push_back(Rational(-1) * r.transpose());
  return out;
}

ModuleAction direct_sum(const ModuleAction& a, const ModuleAction& b) {
  ModuleAction out{a.algebra, a.dimV + b.dimV, {}};
  for (std::size_t i = 0; i < a.rho.size(); ++i) out.rho.push_back(block_diagonal(a.rho[i], b.rho[i]));
  return out;
}

ModuleAction tensor(const ModuleAction& a, const ModuleAction& b) {
  ModuleAction out{a.algebra, a.dimV * b.dimV, {}};
  Matrix ia = Matrix::identity(a.dimV), ib = Matrix::identity(b.dimV);
  for (std::size_t i = 0; i < a.rho.size(); ++i)
    out.rho.push_back(kronecker(a.rho[i], ib) + kronecker(ia, b.rho[i]));
  return out;
}

namespace {

// Index of the pair (i, j) in the lexicographic list of pairs with i < j
// (strict) or i <= j.
std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j, bool strict) {
  std::size_t idx = 0;
  for (std::size_t a = 0; a < i; ++a) idx += strict ? n - a - 1 : n - a;
  return idx + (strict ? j - i - 1 : j - i);
}

}  // namespace

ModuleAction exterior_square(const ModuleAction& act) {
  const std::size_t n = act.dimV, d = n * (n - 1) / 2;
  ModuleAction out{act.algebra, n < 2 ? 0 : d, {}};
  for (const Matrix& r : act.rho) {
    Matrix m(out.dimV, out.dimV);
    // x (v_i ^ v_j) = (x v_i) ^ v_j + v_i ^ (x v_j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::size_t col = pair_index(n, i, j, true);
        for (std::size_t k = 0; k < n; ++k) {
          if (r(k, i) != 0 && k != j) {
            if (k < j) m(pair_index(n, k, j, true), col) += r(k, i);
            else m(pair_index(n, j, k, true), col) -= r(k, i);
          }
          if (r(k, j) != 0 && k != i) {
            if (i < k) m(pair_index(n, i, k, true), col) += r(k, j);
            else m(pair_index(n, k, i, true), col) -= r(k, j);
          }
        }
      }
    out.rho.push_back(m);
  }
  return out;
}

ModuleAction symmetric_square(const ModuleAction& act) {
  const std::size_t n = act.dimV, d = n * (n + 1) / 2;
  ModuleAction out{act.algebra, d, {}};
  for (const Matrix& r : act.rho) {
    Matrix m(d, d);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        const std::size_t col = pair_index(n, i, j, false);
        for (std::size_t k = 0; k < n; ++k) {
          if (r(k, i) != 0) m(pair_index(n, std::min(k, j), std::max(k, j), false), col) += r(k, i);
          if (r(k, j) != 0) m(pair_index(n, std::min(i, k), std::max(i, k), false), col) += r(k, j);
        }
      }
    out.rho.push_back(m);
  }
  return out;
}

ModuleAction trivial_module(const AlgebraPtr& alg, std::size_t dim) {
  return {alg, dim, std::vector<Matrix>(alg->dim(), Matrix(dim, dim))};
}

ModuleAction realified(const ModuleAction& act) { return direct_sum(act, dual(act)); }

ModuleAction along(const ModuleAction& act, const AlgebraPtr& target, const Matrix& hom) {
  ModuleAction out{target, act.dimV, {}};
  for (std::size_t i = 0; i < target->dim(); ++i) {
    Matrix m(act.dimV, act.dimV);
    for (std::size_t j = 0; j < hom.rows(); ++j)
      if (hom(j, i) != 0) m += hom(j, i) * act.rho[j];
    out.rho.push_back(m);
  }
  return out;
}

ModuleAction submodule(const ModuleAction& act, const Matrix& basis) {
  SubspaceCoordinates coords(basis);
  ModuleAction out{act.algebra, basis.cols(), {}};
  for (std::size_t i = 0; i < act.rho.size(); ++i) {
    Matrix m(basis.cols(), basis.cols());
    for (std::size_t c = 0; c < basis.cols(); ++c) {
      auto x = coords.try_coordinates(act.rho[i] * basis.column(c));
      if (!x) throw GelfandError(ErrorKind::InvalidInput, "subspace is not invariant", {i, c});
      m.set_column(c, *x);
    }
    out.rho.push_back(m);
  }
  return out;
}

Matrix first_projection(std::size_t da, std::size_t db) {
  Matrix p(da, da + db);
  for (std::size_t i = 0; i < da; ++i) p(i, i) = 1;
  return p;
}

Matrix second_projection(std::size_t da, std::size_t db) {
  Matrix p(db, da + db);
  for (std::size_t i = 0; i < db; ++i) p(i, da + i) = 1;
  return p;
}

std::vector<Matrix> equivariant_maps(const ModuleAction& from, const ModuleAction& to) {
  const std::size_t n = from.dimV, m = to.dimV;
  // Unknown T (m x n) flattened column-major: T(r, c) at c * m + r.
  // Equations: rho_W T - T rho_V = 0 entrywise.
  Echelon ech(m * n);
  for (std::size_t i = 0; i < from.rho.size(); ++i) {
    const Matrix &rv = from.rho[i], &rw = to.rho[i];
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        RationalRow row;
        std::vector<std::pair<std::uint32_t, Rational>> acc;
        for (std::size_t k = 0; k < m; ++k)
          if (rw(r, k) != 0) acc.emplace_back(static_cast<std::uint32_t>(c * m + k), rw(r, k));
        for (std::size_t k = 0; k < n; ++k)
          if (rv(k, c) != 0) acc.emplace_back(static_cast<std::uint32_t>(k * m + r), -rv(k, c));
        std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [col, v] : acc) {
          if (!row.empty() && row.back().first == col) row.back().second += v;
          else row.emplace_back(col, v);
        }
        std::erase_if(row, [](const auto& e) { return e.second == 0; });
        if (!row.empty()) ech.insert(row);
      }
  }
  std::vector<Matrix> out;
  for (const Vector& v : ech.kernel()) out.push_back(Matrix::unflatten(m, n, primitive(v)));
  return out;
}

std::size_t commutant_dim(const ModuleAction& act) { return equivariant_maps(act, act).size(); }

Matrix invariant_vectors(const ModuleAction& act) {
  Echelon ech(act.dimV);
  for (const Matrix& r : act.rho)
    for (std::size_t i = 0; i < r.rows(); ++i) {
      Vector row = r.row(i);
      if (!is_zero(row)) ech.insert(row);
    }
  return Matrix::from_columns(act.dimV, ech.kernel());
}

Matrix module_complement(const ModuleAction& act, const Matrix& sub) {
  const std::size_t d = act.dimV, ds = sub.cols();
  if (ds == 0) return Matrix::identity(d);
  std::vector<Matrix> maps = equivariant_maps(act, submodule(act, sub));
  // Coefficients c with (sum c_i M_i) * sub = identity.
  Matrix system(ds * ds, maps.size());
  Vector rhs(ds * ds);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    Matrix restricted = maps[i] * sub;
    for (std::size_t r = 0; r < ds; ++r)
      for (std::size_t s = 0; s < ds; ++s) system(r * ds + s, i) = restricted(r, s);
  }
  for (std::size_t r = 0; r < ds; ++r) rhs[r * ds + r] = 1;
  std::optional<Vector> c = solve(system, rhs);
  if (!c) throw GelfandError(ErrorKind::InvalidInput, "invariant subspace has no invariant complement");
  Matrix proj(ds, d);
  for (std::size_t i = 0; i < maps.size(); ++i)
    if ((*c)[i] != 0) proj += (*c)[i] * maps[i];
  return kernel(proj);
}

Matrix weight_adapted(const ModuleAction& act, const Matrix& sub) {
  const std::size_t d = act.dimV;
  std::vector<std::size_t> torus;
  for (std::size_t i = 0; i < act.rho.size(); ++i)
    if (act.rho[i].is_diagonal()) torus.push_back(i);
  // Coordinates grouped by their joint weight.
  std::map<Vector, std::vector<std::size_t>> groups;
  for (std::size_t r = 0; r < d; ++r) {
    Vector w;
    for (std::size_t t : torus) w.push_back(act.rho[t](r, r));
    groups[w].push_back(r);
  }
  std::vector<Vector> cols;
  for (const auto& [weight, coords] : groups) {
    Matrix space(d, coords.size());
    for (std::size_t c = 0; c < coords.size(); ++c) space(coords[c], c) = 1;
    for (Vector& v : intersect_columns(sub, space).columns()) cols.push_back(primitive(v));
  }
  if (cols.size() != sub.cols()) throw GelfandError(ErrorKind::InvalidInput, "subspace is not stable under the torus");
  return Matrix::from_columns(d, cols);
}

ModuleAction character(const AlgebraPtr& alg, const Vector& values) {
  ModuleAction out{alg, 1, {}};
  for (const Rational& v : values) {
    Matrix m(1, 1);
    m(0, 0) = v;
    out.rho.push_back(m);
  }
  if (out.rho.size() != alg->dim()) throw GelfandError(ErrorKind::InvalidInput, "character has wrong length");
  return out;
}

}  // namespace gelfand
