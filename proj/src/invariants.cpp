#include "gelfand/invariants.hpp"

#include <algorithm>
#include <map>

#include "gelfand/modules.hpp"
#include "gelfand/sparse_linalg.hpp"

namespace gelfand {

VarAction with_weights(VarSpacePtr vars, std::vector<SparseOperator> ops, std::string algebra_id) {
  VarAction a{std::move(vars), std::move(algebra_id), std::move(ops), {}};
  const std::size_t nv = a.vars->total(), d = a.ops.size();
  // Combinations of the operators with vanishing off-diagonal entries.
  std::map<std::pair<std::size_t, std::size_t>, RationalRow> offdiag;
  for (std::size_t o = 0; o < d; ++o)
    for (std::size_t j = 0; j < nv; ++j)
      for (const auto& [i, v] : a.ops[o][j])
        if (i != j) offdiag[{i, j}].emplace_back(static_cast<std::uint32_t>(o), v);
  Echelon ech(d);
  for (const auto& [pos, row] : offdiag) ech.insert(row);
  std::vector<Vector> torus = ech.kernel();
  a.weights = Matrix(nv, torus.size());
  for (std::size_t t = 0; t < torus.size(); ++t)
    for (std::size_t o = 0; o < d; ++o) {
      if (torus[t][o] == 0) continue;
      for (std::size_t j = 0; j < nv; ++j)
        for (const auto& [i, v] : a.ops[o][j])
          if (i == j) a.weights(j, t) += torus[t][o] * v;
    }
  return a;
}

VarAction make_var_action(const VarSpacePtr& vars, const std::vector<std::pair<Block, ModuleAction>>& parts,
                          std::string algebra_id) {
  std::size_t d = parts.empty() ? 0 : parts.front().second.rho.size();
  for (const VarBlock& b : vars->blocks()) {
    auto it = std::find_if(parts.begin(), parts.end(), [&](const auto& p) { return p.first == b.name; });
    if (it == parts.end() && b.size > 0)
      throw GelfandError(ErrorKind::BlockMismatch, "no action on block " + to_string(b.name));
    if (it != parts.end() && it->second.dimV != b.size)
      throw GelfandError(ErrorKind::BlockMismatch, "module dimension differs from block " + to_string(b.name));
  }
  std::vector<SparseOperator> ops(d, SparseOperator(vars->total()));
  for (const auto& [block, act] : parts) {
    if (act.rho.size() != d) throw GelfandError(ErrorKind::BlockMismatch, "block actions by different algebras");
    const std::size_t off = vars->offset(block);
    for (std::size_t o = 0; o < d; ++o)
      for (std::size_t j = 0; j < act.dimV; ++j)
        for (std::size_t i = 0; i < act.dimV; ++i)
          if (act.rho[o](i, j) != 0) ops[o][off + j].emplace_back(off + i, act.rho[o](i, j));
  }
  return with_weights(vars, std::move(ops), std::move(algebra_id));
}

namespace {

bool weight_zero(const VarAction& act, const Monomial& m) {
  for (std::size_t t = 0; t < act.weights.cols(); ++t) {
    Rational w;
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[v] != 0 && act.weights(v, t) != 0) w += act.weights(v, t) * m[v];
    if (w != 0) return false;
  }
  return true;
}

}  // namespace

InvariantBasis invariant_basis(const VarAction& act, std::size_t dn, std::size_t dl) {
  GradedBasis all = monomial_basis(act.vars, dn, dl);
  GradedBasis domain;
  domain.degree = all.degree;
  domain.bidegree = all.bidegree;
  for (auto& p : all.elements)
    if (weight_zero(act, p.terms().begin()->first)) domain.elements.push_back(std::move(p));
  std::vector<LinearOperator> ops;
  for (const SparseOperator& op : act.ops) ops.push_back([&op](const Polynomial& p) { return apply_derivation(op, p); });
  InvariantBasis out;
  out.degree = dn + dl;
  out.bidegree = std::pair{dn, dl};
  out.basis = kernel_basis(domain, ops);
  out.algebra_id = act.algebra_id;
  return out;
}

InvariantBasis invariant_basis(const VarAction& act, std::size_t d) {
  InvariantBasis out;
  out.degree = d;
  out.basis.degree = d;
  out.algebra_id = act.algebra_id;
  const bool has_rest = act.vars->total() > act.vars->size(Block::n);
  const bool has_n = act.vars->size(Block::n) > 0;
  for (std::size_t dn = d + 1; dn-- > 0;) {
    const std::size_t dl = d - dn;
    if ((dn > 0 && !has_n) || (dl > 0 && !has_rest)) continue;
    InvariantBasis piece = invariant_basis(act, dn, dl);
    for (auto& p : piece.basis.elements) out.basis.elements.push_back(std::move(p));
  }
  return out;
}

HilbertProfile hilbert_profile(const VarAction& act, std::size_t d_max) {
  HilbertProfile h;
  for (std::size_t d = 0; d <= d_max; ++d) h.dims.push_back(invariant_basis(act, d).size());
  return h;
}

VarAction l_on_n(const SpaceSpec& space) {
  auto vars = std::make_shared<VarSpace>(std::vector<VarBlock>{{Block::n, space.n.dim()}});
  return make_var_action(vars, {{Block::n, space.act}}, "l");
}

VarAction k_on_n(const SpaceSpec& space) {
  auto vars = std::make_shared<VarSpace>(std::vector<VarBlock>{{Block::n, space.n.dim()}});
  return make_var_action(vars, {{Block::n, restrict_action(space.act, space.k)}}, "k");
}

VarAction k_on_reduced(const AdaptedSpace& space) { return with_weights(space.reduced, space.k_ops, "k"); }

ConditionI check_condition_i(const SpaceSpec& space, std::size_t d_max) {
  ConditionI c;
  c.d_max = d_max;
  VarAction l = l_on_n(space), k = k_on_n(space);
  for (std::size_t d = 0; d <= d_max; ++d) {
    c.l_profile.dims.push_back(invariant_basis(l, d).size());
    c.k_profile.dims.push_back(invariant_basis(k, d).size());
    if (c.l_profile.dims.back() != c.k_profile.dims.back() && !c.first_failure) {
      c.first_failure = d;
      c.holds_up_to = false;
    }
  }
  return c;
}

}  // namespace gelfand
