#include "gelfand/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "gelfand/sparse_linalg.hpp"

namespace gelfand {

std::string to_string(Block b) {
  switch (b) {
    case Block::n: return "n";
    case Block::m: return "m";
    case Block::k: return "k";
  }
  return "n";
}

VarSpace::VarSpace(std::vector<VarBlock> blocks, std::vector<std::string> labels) : blocks_(std::move(blocks)) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (blocks_[j].name == blocks_[i].name)
        throw GelfandError(ErrorKind::InvalidInput, "repeated block name " + to_string(blocks_[i].name));
    total += blocks_[i].size;
  }
  if (labels.empty()) {
    for (const VarBlock& b : blocks_)
      for (std::size_t i = 0; i < b.size; ++i) labels.push_back(to_string(b.name) + ":v" + std::to_string(i + 1));
  }
  if (labels.size() != total) throw GelfandError(ErrorKind::InvalidInput, "label count differs from block sizes");
  labels_ = std::move(labels);
}

bool VarSpace::has(Block b) const {
  return std::any_of(blocks_.begin(), blocks_.end(), [b](const VarBlock& v) { return v.name == b; });
}

std::size_t VarSpace::offset(Block b) const {
  std::size_t off = 0;
  for (const VarBlock& v : blocks_) {
    if (v.name == b) return off;
    off += v.size;
  }
  throw GelfandError(ErrorKind::BlockMismatch, "no block " + to_string(b));
}

std::size_t VarSpace::size(Block b) const {
  for (const VarBlock& v : blocks_)
    if (v.name == b) return v.size;
  return 0;
}

Block VarSpace::block_of(std::size_t var) const {
  std::size_t off = 0;
  for (const VarBlock& v : blocks_) {
    if (var < off + v.size) return v.name;
    off += v.size;
  }
  throw std::out_of_range("variable index out of range");
}

bool operator==(const VarSpace& a, const VarSpace& b) {
  if (a.blocks_.size() != b.blocks_.size()) return false;
  for (std::size_t i = 0; i < a.blocks_.size(); ++i)
    if (a.blocks_[i].name != b.blocks_[i].name || a.blocks_[i].size != b.blocks_[i].size) return false;
  return a.labels_ == b.labels_;
}

std::size_t degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), std::size_t{0}); }

bool GrLexDescending::operator()(const Monomial& a, const Monomial& b) const {
  const std::size_t da = degree(a), db = degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial Polynomial::constant(VarSpacePtr vars, const Rational& c) {
  Polynomial p(vars);
  p.add_term(Monomial(vars->total(), 0), c);
  return p;
}

Polynomial Polynomial::variable(VarSpacePtr vars, std::size_t i) {
  Monomial m(vars->total(), 0);
  m[i] = 1;
  return monomial(std::move(vars), std::move(m));
}

Polynomial Polynomial::monomial(VarSpacePtr vars, Monomial m, const Rational& c) {
  Polynomial p(std::move(vars));
  p.add_term(m, c);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

std::size_t Polynomial::degree() const { return terms_.empty() ? 0 : gelfand::degree(terms_.begin()->first); }

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const std::size_t d = degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return gelfand::degree(t.first) == d; });
}

std::optional<std::pair<std::size_t, std::size_t>> Polynomial::bidegree() const {
  if (terms_.empty()) return std::pair<std::size_t, std::size_t>{0, 0};
  const std::size_t off = vars_->has(Block::n) ? vars_->offset(Block::n) : 0;
  const std::size_t len = vars_->size(Block::n);
  std::optional<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [m, c] : terms_) {
    std::size_t dn = 0;
    for (std::size_t i = off; i < off + len; ++i) dn += m[i];
    std::pair<std::size_t, std::size_t> bd{dn, gelfand::degree(m) - dn};
    if (out && *out != bd) return std::nullopt;
    out = bd;
  }
  return out;
}

bool Polynomial::uses(Block b) const {
  if (!vars_->has(b)) return false;
  const std::size_t off = vars_->offset(b), len = vars_->size(b);
  for (const auto& [m, c] : terms_)
    for (std::size_t i = off; i < off + len; ++i)
      if (m[i] != 0) return true;
  return false;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial out(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    --d[var];
    out.terms_.emplace_hint(out.terms_.end(), std::move(d), c * m[var]);
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  Polynomial out(p.vars_);
  const std::size_t n = p.vars_->total();
  Monomial prod(n);
  for (const auto& [a, ca] : p.terms_)
    for (const auto& [b, cb] : q.terms_) {
      for (std::size_t i = 0; i < n; ++i) prod[i] = static_cast<std::uint8_t>(a[i] + b[i]);
      out.add_term(prod, ca * cb);
    }
  return out;
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  Polynomial out(p.vars_);
  if (s == 0) return out;
  for (const auto& [m, c] : p.terms_) out.terms_.emplace_hint(out.terms_.end(), m, s * c);
  return out;
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (terms_.begin()->second < 0) scale = -scale;
  return scale * *this;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool constant = degree(m) == 0;
    Rational mag = abs(c);
    if (first) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    first = false;
    bool need_star = false;
    if (mag != 1 || constant) {
      out += to_string(mag);
      need_star = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) out += "*";
      out += p.vars()->label(i);
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
      need_star = true;
    }
  }
  return out;
}

std::size_t multiset_coefficient(std::size_t n, std::size_t d) {
  if (n == 0) return d == 0 ? 1 : 0;
  // C(n + d - 1, d)
  Integer r = 1;
  for (std::size_t i = 1; i <= d; ++i) r = r * (n + i - 1) / i;
  return r.get_ui();
}

std::vector<std::vector<std::uint8_t>> exponent_vectors(std::size_t count, std::size_t d) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> cur(count, 0);
  // Lexicographically descending: put as much degree as possible on early variables.
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t left) {
    if (pos + 1 == count) {
      cur[pos] = static_cast<std::uint8_t>(left);
      out.push_back(cur);
      return;
    }
    for (std::size_t e = left + 1; e-- > 0;) {
      cur[pos] = static_cast<std::uint8_t>(e);
      rec(pos + 1, left - e);
    }
    cur[pos] = 0;
  };
  if (count == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  rec(0, d);
  return out;
}

GradedBasis monomial_basis(const VarSpacePtr& vars, std::size_t dn, std::size_t dl) {
  GradedBasis out;
  out.degree = dn + dl;
  out.bidegree = std::pair{dn, dl};
  // Variables split into the n block and the rest, keeping global order.
  std::vector<std::size_t> nvars, lvars;
  for (std::size_t i = 0; i < vars->total(); ++i) (vars->block_of(i) == Block::n ? nvars : lvars).push_back(i);
  auto nexp = exponent_vectors(nvars.size(), dn);
  auto lexp = exponent_vectors(lvars.size(), dl);
  std::vector<Monomial> monos;
  for (const auto& a : nexp)
    for (const auto& b : lexp) {
      Monomial m(vars->total(), 0);
      for (std::size_t i = 0; i < nvars.size(); ++i) m[nvars[i]] = a[i];
      for (std::size_t i = 0; i < lvars.size(); ++i) m[lvars[i]] = b[i];
      monos.push_back(std::move(m));
    }
  std::sort(monos.begin(), monos.end(), GrLexDescending{});
  for (auto& m : monos) out.elements.push_back(Polynomial::monomial(vars, std::move(m)));
  return out;
}

GradedBasis monomial_basis(const VarSpacePtr& vars, std::size_t d) {
  GradedBasis out;
  out.degree = d;
  for (auto& e : exponent_vectors(vars->total(), d)) out.elements.push_back(Polynomial::monomial(vars, Monomial(e.begin(), e.end())));
  return out;
}

SparseOperator to_sparse(const Matrix& op) {
  SparseOperator out(op.cols());
  for (std::size_t j = 0; j < op.cols(); ++j)
    for (std::size_t i = 0; i < op.rows(); ++i)
      if (op(i, j) != 0) out[j].emplace_back(i, op(i, j));
  return out;
}

Polynomial apply_derivation(const SparseOperator& op, const Polynomial& p) {
  Polynomial out(p.vars());
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[j] == 0 || op[j].empty()) continue;
      // x_j -> sum_i op(i, j) x_i applied to one factor of x_j^{m_j}
      Monomial base = m;
      --base[j];
      const Rational cj = c * m[j];
      for (const auto& [i, v] : op[j]) {
        Monomial t = base;
        ++t[i];
        out.add_term(t, cj * v);
      }
    }
  }
  return out;
}

Polynomial apply_derivation(const Matrix& op, const Polynomial& p) { return apply_derivation(to_sparse(op), p); }

Polynomial derivation_action(const ModuleAction& act, Block block, std::size_t xi, const Polynomial& p) {
  const VarSpace& vs = *p.vars();
  if (!vs.has(block) || act.dimV != vs.size(block))
    throw GelfandError(ErrorKind::BlockMismatch,
                       "module dimension " + std::to_string(act.dimV) + " differs from block " + to_string(block));
  const std::size_t off = vs.offset(block);
  SparseOperator op(vs.total());
  const Matrix& r = act.rho[xi];
  for (std::size_t j = 0; j < act.dimV; ++j)
    for (std::size_t i = 0; i < act.dimV; ++i)
      if (r(i, j) != 0) op[off + j].emplace_back(off + i, r(i, j));
  return apply_derivation(op, p);
}

GradedBasis kernel_basis(const GradedBasis& domain, const std::vector<LinearOperator>& ops) {
  GradedBasis out;
  out.degree = domain.degree;
  out.bidegree = domain.bidegree;
  const std::size_t n = domain.size();
  if (n == 0) return out;
  // Rows indexed by (operator, target monomial), columns by domain elements.
  Echelon ech(n);
  for (const LinearOperator& op : ops) {
    std::map<Monomial, RationalRow, GrLexDescending> rows;
    for (std::size_t c = 0; c < n; ++c) {
      Polynomial img = op(domain.elements[c]);
      for (const auto& [m, v] : img.terms()) rows[m].emplace_back(static_cast<std::uint32_t>(c), v);
    }
    for (const auto& [m, row] : rows) ech.insert(row);
    if (ech.rank() == n) break;
  }
  for (const Vector& v : ech.kernel()) {
    Polynomial p(domain.elements.front().vars());
    for (std::size_t c = 0; c < n; ++c)
      if (v[c] != 0) p += v[c] * domain.elements[c];
    out.elements.push_back(p.primitive());
  }
  return out;
}

std::size_t polynomial_rank(const std::vector<Polynomial>& polys) {
  std::map<Monomial, std::uint32_t, GrLexDescending> index;
  for (const Polynomial& p : polys)
    for (const auto& [m, c] : p.terms()) index.try_emplace(m, 0);
  std::uint32_t next = 0;
  for (auto& [m, i] : index) i = next++;
  Echelon ech(index.size());
  for (const Polynomial& p : polys) {
    RationalRow row;
    for (const auto& [m, c] : p.terms()) row.emplace_back(index[m], c);
    if (!row.empty()) ech.insert(row);
  }
  return ech.rank();
}

Polynomial substitute(const Polynomial& p, const std::map<std::size_t, Rational>& assignment) {
  Polynomial out(p.vars());
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    Rational coeff = c;
    for (const auto& [var, val] : assignment) {
      if (rest[var] == 0) continue;
      Rational pw = 1;
      for (std::uint8_t e = 0; e < rest[var]; ++e) pw *= val;
      coeff *= pw;
      rest[var] = 0;
    }
    out.add_term(rest, coeff);
  }
  return out;
}

Polynomial relabel(const Polynomial& p, const VarSpacePtr& target, const std::vector<std::size_t>& var_map) {
  Polynomial out(target);
  for (const auto& [m, c] : p.terms()) {
    Monomial t(target->total(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) t[var_map[i]] = m[i];
    out.add_term(t, c);
  }
  return out;
}

}  // namespace gelfand
