#include "gelfand/poisson.hpp"

#include <functional>
#include <map>

#include "gelfand/stabilizer.hpp"

namespace gelfand {

namespace {

// Linear form sum_t coeff_t x_t standing for the bracket of two letters.
using LetterBracket = std::function<SparseVector(std::size_t, std::size_t)>;

std::vector<std::size_t> used_variables(const Polynomial& p) {
  std::vector<bool> used(p.vars()->total(), false);
  for (const auto& [m, c] : p.terms())
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[v] != 0) used[v] = true;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < used.size(); ++v)
    if (used[v]) out.push_back(v);
  return out;
}

// sum over letter pairs of d_i p * d_j q * bracket(i, j), restricted by `keep`.
Polynomial biderivation(const Polynomial& p, const Polynomial& q, const LetterBracket& bracket,
                        const std::function<bool(std::size_t, std::size_t)>& keep) {
  const VarSpacePtr& vars = p.vars();
  Polynomial out(vars);
  std::vector<std::size_t> up = used_variables(p), uq = used_variables(q);
  std::map<std::size_t, Polynomial> dq;
  for (std::size_t j : uq) dq.emplace(j, q.derivative(j));
  for (std::size_t i : up) {
    std::optional<Polynomial> dp;
    for (std::size_t j : uq) {
      if (!keep(i, j)) continue;
      SparseVector lin = bracket(i, j);
      if (lin.empty()) continue;
      if (!dp) dp = p.derivative(i);
      Polynomial form(vars);
      for (const Term& t : lin) form += t.coeff * Polynomial::variable(vars, t.index);
      out += form * (*dp * dq.at(j));
    }
  }
  return out;
}

bool always(std::size_t, std::size_t) { return true; }

void require_same_vars(const Polynomial& p, const Polynomial& q, const VarSpacePtr& vars) {
  if (!(*p.vars() == *vars) || !(*q.vars() == *vars))
    throw GelfandError(ErrorKind::BlockMismatch, "polynomial lives over another varspace");
}

SparseVector truncated(const SparseVector& v, std::size_t bound) {
  SparseVector out;
  for (const Term& t : v)
    if (t.index < bound) out.push_back(t);
  return out;
}

}  // namespace

BracketContext make_context(LieAlgebra g, VarSpacePtr vars) {
  if (g.dim() != vars->total()) throw GelfandError(ErrorKind::InvalidInput, "algebra dimension differs from varspace");
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      const bool ni = vars->block_of(i) == Block::n, nj = vars->block_of(j) == Block::n;
      for (const Term& t : g.sc.bracket(i, j)) {
        const bool nt = vars->block_of(t.index) == Block::n;
        if ((ni || nj) != nt) throw GelfandError(ErrorKind::InvalidInput, "bracket does not respect the blocks", {i, j});
      }
    }
  return {std::move(g), std::move(vars)};
}

BracketContext make_context(const AdaptedSpace& space) { return make_context(space.g, space.full); }

Polynomial poisson_bracket(const Polynomial& p, const Polynomial& q, const BracketContext& ctx) {
  require_same_vars(p, q, ctx.vars);
  return biderivation(p, q, [&](std::size_t i, std::size_t j) { return ctx.g.sc.bracket(i, j); }, always);
}

BracketSplit bidegree_split(const Polynomial& p, const Polynomial& q, const BracketContext& ctx) {
  require_same_vars(p, q, ctx.vars);
  if (!p.bidegree() || !q.bidegree()) throw GelfandError(ErrorKind::NotBiHomogeneous, "input is not bi-homogeneous");
  const VarSpace& vars = *ctx.vars;
  auto br = [&](std::size_t i, std::size_t j) { return ctx.g.sc.bracket(i, j); };
  auto both_n = [&](std::size_t i, std::size_t j) {
    return vars.block_of(i) == Block::n && vars.block_of(j) == Block::n;
  };
  return {biderivation(p, q, br, both_n), biderivation(p, q, br, [&](std::size_t i, std::size_t j) {
            return !both_n(i, j);
          })};
}

Polynomial reduced_bracket(const Polynomial& a, const Polynomial& b, const AdaptedSpace& space) {
  require_same_vars(a, b, space.reduced);
  const std::size_t bound = space.dn + space.dm;
  return biderivation(
      a, b, [&](std::size_t i, std::size_t j) { return truncated(space.g.sc.bracket(i, j), bound); }, always);
}

BracketSplit reduced_split(const Polynomial& a, const Polynomial& b, const AdaptedSpace& space) {
  require_same_vars(a, b, space.reduced);
  const std::size_t bound = space.dn + space.dm, dn = space.dn;
  auto br = [&](std::size_t i, std::size_t j) { return truncated(space.g.sc.bracket(i, j), bound); };
  return {biderivation(a, b, br, [dn](std::size_t i, std::size_t j) { return i < dn && j < dn; }),
          biderivation(a, b, br, [dn](std::size_t i, std::size_t j) { return i >= dn || j >= dn; })};
}

std::string to_string(CommutativityStatus status) {
  return status == CommutativityStatus::NonCommutative ? "NonCommutative" : "CommutativeUpTo";
}

CommutativityVerdict check_commutative_direct(const AdaptedSpace& space, std::size_t d_max) {
  CommutativityVerdict v;
  v.degree_checked = d_max;
  VarAction act = k_on_reduced(space);
  std::vector<Polynomial> inv;
  std::vector<std::size_t> deg;
  v.invariant_dims.push_back(1);
  for (std::size_t d = 1; d <= d_max; ++d) {
    InvariantBasis b = invariant_basis(act, d);
    v.invariant_dims.push_back(b.size());
    for (Polynomial& p : b.basis.elements) {
      inv.push_back(std::move(p));
      deg.push_back(d);
    }
  }
  for (std::size_t sum = 2; sum <= d_max + 1; ++sum)
    for (std::size_t i = 0; i < inv.size(); ++i)
      for (std::size_t j = i + 1; j < inv.size(); ++j) {
        if (deg[i] + deg[j] != sum) continue;
        ++v.pairs_checked;
        Polynomial br = reduced_bracket(inv[i], inv[j], space);
        if (br.is_zero()) continue;
        BracketSplit split = reduced_split(inv[i], inv[j], space);
        v.status = CommutativityStatus::NonCommutative;
        v.witness = Witness{inv[i], inv[j], br, !split.bracket_n.is_zero(), !split.bracket_l.is_zero()};
        return v;
      }
  return v;
}

CommutativityVerdict check_commutative_direct(const SpaceSpec& space, std::size_t d_max) {
  return check_commutative_direct(adapt(space), d_max);
}

Polynomial specialize_gamma(const Polynomial& a, const Vector& gamma, const AdaptedSpace& space) {
  if (gamma.size() != space.dn) throw GelfandError(ErrorKind::InvalidInput, "covector length differs from dim n");
  std::map<std::size_t, Rational> at;
  for (std::size_t i = 0; i < space.dn; ++i) at.emplace(i, gamma[i]);
  return substitute(a, at);
}

Polynomial specialize_beta(const Polynomial& a, const Vector& beta, const AdaptedSpace& space) {
  if (beta.size() != space.dm) throw GelfandError(ErrorKind::InvalidInput, "covector length differs from dim m");
  std::map<std::size_t, Rational> at;
  for (std::size_t i = 0; i < space.dm; ++i) at.emplace(space.dn + i, beta[i]);
  return substitute(a, at);
}

Polynomial stabilizer_bracket(const Polynomial& a, const Polynomial& b, const Vector& gamma, const AdaptedSpace& space) {
  require_same_vars(a, b, space.reduced);
  const LieAlgebra& l = *space.spec.l;
  const std::size_t dl = l.dim(), dn = space.dn, dm = space.dm;
  SubalgebraEmbedding lg = coadjoint_stabilizer(space.spec.act, gamma);
  // Lift each m letter into l_gamma modulo k.
  SubspaceCoordinates both(column_basis(hconcat(lg.inj, space.spec.k.inj)));
  if (both.dim() != dl) throw GelfandError(ErrorKind::InvalidInput, "l is not k + l_gamma");
  Matrix system = hconcat(lg.inj, space.spec.k.inj);
  std::vector<Vector> lifts;
  for (std::size_t c = 0; c < dm; ++c) {
    std::optional<Vector> x = solve(system, space.m_basis.column(c));
    Vector lift(dl);
    for (std::size_t s = 0; s < lg.dim(); ++s)
      if ((*x)[s] != 0)
        for (std::size_t r = 0; r < dl; ++r) lift[r] += (*x)[s] * lg.inj(r, s);
    lifts.push_back(std::move(lift));
  }
  SubspaceCoordinates mk(hconcat(space.m_basis, space.spec.k.inj));
  auto br = [&](std::size_t i, std::size_t j) {
    SparseVector out;
    if (i < dn || j < dn) return out;
    Vector w = mk.coordinates(l.bracket(lifts[i - dn], lifts[j - dn]));
    for (std::size_t c = 0; c < dm; ++c)
      if (w[c] != 0) out.push_back({dn + c, w[c]});
    return out;
  };
  return biderivation(a, b, br, always);
}

}  // namespace gelfand
