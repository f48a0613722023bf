#include <numeric>
#include <set>

#include "gelfand/criterion.hpp"
#include "gelfand/modules.hpp"
#include "gelfand/stabilizer.hpp"

namespace gelfand {

namespace {

Matrix power(const Matrix& a, std::size_t e) {
  Matrix out = Matrix::identity(a.rows());
  for (std::size_t i = 0; i < e; ++i) out = out * a;
  return out;
}

// Fitting decomposition of an invariant piece along some commutant element;
// nullopt when no tried element splits it.
std::optional<std::pair<Matrix, Matrix>> fitting_split(const ModuleAction& act, const Matrix& piece) {
  ModuleAction on_piece = submodule(act, piece);
  const std::size_t d = piece.cols();
  for (const Matrix& m : equivariant_maps(on_piece, on_piece)) {
    std::set<Rational> shifts{Rational(0)};
    for (std::size_t i = 0; i < d; ++i) shifts.insert(m(i, i));
    for (const Rational& s : shifts) {
      Matrix nil = power(m - s * Matrix::identity(d), d);
      Matrix ker = kernel(nil);
      if (ker.cols() == 0 || ker.cols() == d) continue;
      return std::pair{piece * ker, piece * column_basis(nil)};
    }
  }
  return std::nullopt;
}

bool brackets_nonzero(const LieAlgebra& n, const Matrix& a, const Matrix& b) {
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (!is_zero(n.bracket(a.column(i), b.column(j)))) return true;
  return false;
}

// Pieces i and j complexify one real irreducible: dual pieces that are not
// self-dual, or isomorphic pieces carrying an invariant alternating form.
bool one_real_irreducible(const ModuleAction& a, const ModuleAction& b) {
  std::vector<Matrix> self_forms = equivariant_maps(a, dual(a));
  if (self_forms.empty()) return !equivariant_maps(a, dual(b)).empty();
  if (equivariant_maps(a, b).empty()) return false;
  const Matrix& form = self_forms.front();
  return self_forms.size() == 1 && form.transpose() == Rational(-1) * form;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

std::vector<std::string> component_labels(const LieAlgebra& n, const Matrix& basis) {
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    Vector col = basis.column(c);
    std::size_t nonzero = 0, at = 0;
    for (std::size_t r = 0; r < col.size(); ++r)
      if (col[r] != 0) {
        ++nonzero;
        at = r;
      }
    labels.push_back(nonzero == 1 && col[at] == 1 ? n.labels[at] : "v" + std::to_string(c + 1));
  }
  return labels;
}

}  // namespace

bool HeisenbergDecomposition::commutative() const {
  if (!violations.empty()) return false;
  for (const HeisenbergComponent& c : components)
    if (c.verdict.status == CommutativityStatus::NonCommutative) return false;
  return true;
}

HeisenbergDecomposition heisenberg_type_decompose(const SpaceSpec& space, std::size_t d_max, std::size_t samples,
                                                  std::uint64_t seed) {
  if (!is_heisenberg_type(space)) throw GelfandError(ErrorKind::InvalidInput, "k differs from l");
  const LieAlgebra& n = space.n;
  const ModuleAction& act = space.act;
  HeisenbergDecomposition out;

  std::vector<Matrix> pieces;
  std::vector<Matrix> pending{module_complement(act, derived_subalgebra(n))};
  while (!pending.empty()) {
    Matrix piece = std::move(pending.back());
    pending.pop_back();
    if (piece.cols() == 0) continue;
    if (auto split = fitting_split(act, piece)) {
      pending.push_back(std::move(split->second));
      pending.push_back(std::move(split->first));
      continue;
    }
    if (equivariant_maps(submodule(act, piece), submodule(act, piece)).size() > 1) out.split_incomplete = true;
    pieces.push_back(std::move(piece));
  }
  for (const Matrix& p : pieces) out.piece_dims.push_back(p.cols());

  const std::size_t np = pieces.size();
  std::vector<ModuleAction> modules;
  for (const Matrix& p : pieces) modules.push_back(submodule(act, p));
  std::vector<std::size_t> parent(np);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> bracketing;
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = i + 1; j < np; ++j) {
      if (!brackets_nonzero(n, pieces[i], pieces[j])) continue;
      if (one_real_irreducible(modules[i], modules[j]))
        parent[find_root(parent, i)] = find_root(parent, j);
      else
        bracketing.emplace_back(i, j);
    }

  // Components in order of their first piece.
  std::vector<std::size_t> component_of(np, np);
  for (std::size_t i = 0; i < np; ++i) {
    const std::size_t root = find_root(parent, i);
    if (component_of[root] == np) {
      component_of[root] = out.components.size();
      out.components.emplace_back();
    }
    component_of[i] = component_of[root];
    out.components[component_of[i]].pieces.push_back(i);
  }
  std::set<std::pair<std::size_t, std::size_t>> violations;
  for (const auto& [i, j] : bracketing) {
    const std::size_t a = component_of[i], b = component_of[j];
    if (a != b) violations.insert({std::min(a, b), std::max(a, b)});
  }
  out.violations.assign(violations.begin(), violations.end());

  const std::size_t dn = n.dim();
  for (std::size_t c = 0; c < out.components.size(); ++c) {
    HeisenbergComponent& comp = out.components[c];
    Matrix w(dn, 0), rest(dn, 0);
    for (std::size_t i = 0; i < np; ++i) {
      Matrix& target = component_of[i] == c ? w : rest;
      target = hconcat(target, pieces[i]);
    }
    std::vector<Vector> brackets;
    for (std::size_t a = 0; a < w.cols(); ++a)
      for (std::size_t b = a + 1; b < w.cols(); ++b) {
        Vector v = n.bracket(w.column(a), w.column(b));
        if (!is_zero(v)) brackets.push_back(std::move(v));
      }
    Matrix basis = hconcat(w, column_basis(Matrix::from_columns(dn, brackets)));
    comp.w_dim = w.cols();
    comp.n_dim = basis.cols();
    SubalgebraEmbedding kc =
        rest.cols() == 0 ? whole(space.l) : generic_stabilizer(submodule(act, rest), samples, seed).stabilizer;
    comp.k_dim = kc.dim();
    LieAlgebra nc = rebase(n, basis, component_labels(n, basis));
    SpaceSpec sub = heisenberg_type_space(space.name + "/w" + std::to_string(c + 1), std::move(nc),
                                          restrict_action(submodule(act, basis), kc));
    comp.verdict = check_commutative_direct(sub, d_max);
  }
  return out;
}

}  // namespace gelfand
