#include "gelfand/criterion.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gelfand/stabilizer.hpp"

namespace gelfand {

namespace {

Rational nonzero_coeff(std::mt19937_64& rng, int bound) {
  const auto width = static_cast<std::uint64_t>(2 * bound);
  const long v = static_cast<long>(rng() % width) - bound;
  return Rational(v >= 0 ? v + 1 : v);
}

// Coordinates of the columns of `vectors` in the basis `basis` (both in the same ambient).
Matrix coordinates_in(const Matrix& basis, const Matrix& vectors) {
  SubspaceCoordinates coords(basis);
  Matrix out(basis.cols(), vectors.cols());
  for (std::size_t c = 0; c < vectors.cols(); ++c) out.set_column(c, coords.coordinates(vectors.column(c)));
  return out;
}

bool is_abelian_span(const LieAlgebra& l, const Matrix& span) {
  for (std::size_t a = 0; a < span.cols(); ++a)
    for (std::size_t b = a + 1; b < span.cols(); ++b)
      if (!is_zero(l.bracket(span.column(a), span.column(b)))) return false;
  return true;
}

// Covector supported on random opposite-weight pairs and zero-weight
// coordinates; the density cycles with the attempt number.
Vector structured_point(const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                        const std::vector<std::size_t>& zeros, std::size_t dim, std::size_t attempt,
                        std::mt19937_64& rng) {
  Vector gamma(dim);
  if (pairs.empty() && zeros.empty()) return random_point(rng, dim);
  const std::uint64_t keep = 1 + attempt % 4;
  for (const auto& [i, j] : pairs)
    if (rng() % 4 < keep) {
      gamma[i] = nonzero_coeff(rng, kSampleBound);
      gamma[j] = nonzero_coeff(rng, kSampleBound);
    }
  for (std::size_t z : zeros)
    if (rng() % 4 < keep) gamma[z] = nonzero_coeff(rng, kSampleBound);
  return gamma;
}

}  // namespace

SphericalityVerdict sphericality_check(const LieAlgebra& g, const SubalgebraEmbedding& h, std::size_t samples,
                                       std::uint64_t seed) {
  if (!g.borel_indices || !g.matrix_rep) throw GelfandError(ErrorKind::MissingBorelData, "algebra has no Borel data");
  const std::size_t d = g.dim();
  const std::vector<std::size_t>& borel = *g.borel_indices;
  SphericalityVerdict v;
  v.target_dim = d;
  v.dimension_obstruction = borel.size() + h.dim() < d;
  std::vector<bool> in_b(d, false);
  Matrix b(d, borel.size());
  for (std::size_t c = 0; c < borel.size(); ++c) {
    in_b[borel[c]] = true;
    b(borel[c], c) = 1;
  }
  std::vector<std::size_t> opposite;
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < d; ++i) {
    if (in_b[i]) continue;
    Matrix a = g.ad(i);
    if (!is_nilpotent(a)) continue;
    opposite.push_back(i);
    ads.push_back(std::move(a));
  }
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Matrix ad_u = Matrix::identity(d);
    std::vector<UnipotentFactor> factors;
    for (std::size_t t = 0; t < opposite.size(); ++t) {
      Rational c = nonzero_coeff(rng, kSampleBound);
      ad_u = ad_u * nilpotent_exp(ads[t], c);
      factors.push_back({opposite[t], c});
    }
    const std::size_t r = rank(hconcat(b, ad_u * h.inj));
    ++v.samples_used;
    v.achieved_dim = std::max(v.achieved_dim, r);
    if (r == d) {
      v.spherical = true;
      v.witness = std::move(factors);
      break;
    }
  }
  return v;
}

BorelBasis borel_basis(const SubalgebraEmbedding& sub, std::mt19937_64& rng) {
  const LieAlgebra& l = *sub.ambient;
  if (!l.matrix_rep) throw GelfandError(ErrorKind::BorelConstructionFailed, "ambient algebra has no matrices");
  const std::size_t d = sub.dim();
  Matrix torus = diagonal_part(sub);
  SubspaceCoordinates coords(sub.inj);
  std::string failure = "diagonal part is not a Cartan subalgebra";
  for (int attempt = 0; attempt < 6; ++attempt) {
    Vector t(l.dim());
    for (std::size_t c = 0; c < torus.cols(); ++c) {
      Rational r = nonzero_coeff(rng, 40);
      for (std::size_t i = 0; i < l.dim(); ++i)
        if (torus(i, c) != 0) t[i] += r * torus(i, c);
    }
    // ad(t) on a matrix algebra has eigenvalues t_ii - t_jj.
    Matrix rep = l.represent(t);
    std::set<Rational> candidates{Rational(0)};
    for (std::size_t i = 0; i < rep.rows(); ++i)
      for (std::size_t j = 0; j < rep.rows(); ++j) candidates.insert(rep(i, i) - rep(j, j));
    Matrix ad_t(d, d);
    for (std::size_t j = 0; j < d; ++j) ad_t.set_column(j, coords.coordinates(l.bracket(t, sub.inj.column(j))));
    std::map<Rational, Matrix> spaces;
    std::size_t found = 0;
    for (const Rational& lambda : candidates) {
      Matrix shifted = ad_t - lambda * Matrix::identity(d);
      Matrix ker = kernel(shifted);
      if (ker.cols() == 0) continue;
      found += ker.cols();
      spaces.emplace(lambda, std::move(ker));
    }
    if (found != d) {
      failure = "diagonal element does not act diagonalizably";
      continue;
    }
    Matrix cartan = spaces.count(0) ? spaces.at(0) : Matrix(d, 0);
    if (!is_abelian_span(l, sub.inj * cartan)) continue;
    Matrix positive(d, 0), negative(d, 0);
    bool paired = true;
    for (const auto& [lambda, space] : spaces) {
      if (lambda <= 0) continue;
      auto opposite = spaces.find(-lambda);
      if (opposite == spaces.end() || opposite->second.cols() != space.cols()) paired = false;
      positive = hconcat(positive, space);
      if (opposite != spaces.end()) negative = hconcat(negative, opposite->second);
    }
    if (!paired || cartan.cols() + positive.cols() + negative.cols() != d)
      throw GelfandError(ErrorKind::BorelConstructionFailed, "eigenvalues are not paired; subalgebra is not reductive");
    Matrix basis = sub.inj * hconcat(hconcat(cartan, positive), negative);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < cartan.cols(); ++i) labels.push_back("h" + std::to_string(i + 1));
    for (std::size_t i = 0; i < positive.cols(); ++i) labels.push_back("e" + std::to_string(i + 1));
    for (std::size_t i = 0; i < negative.cols(); ++i) labels.push_back("f" + std::to_string(i + 1));
    LieAlgebra alg = rebase(l, basis, std::move(labels));
    alg.kind = AlgebraKind::Reductive;
    std::vector<std::size_t> borel(cartan.cols() + positive.cols());
    for (std::size_t i = 0; i < borel.size(); ++i) borel[i] = i;
    alg.borel_indices = std::move(borel);
    return {std::move(alg), std::move(basis)};
  }
  throw GelfandError(ErrorKind::BorelConstructionFailed, failure);
}

ConditionII check_condition_ii(const SpaceSpec& space, std::size_t samples, std::uint64_t seed,
                               const std::optional<Vector>& gamma_hint) {
  ConditionII out;
  const std::size_t dl = space.l->dim(), dn = space.n.dim();
  GenericStabilizer generic = generic_stabilizer(space.act, std::max<std::size_t>(samples, 1), seed);
  out.orbit_dim = generic.orbit_dim;
  out.gamma = generic.point;
  out.l_gamma_dim = generic.stabilizer.dim();
  out.k_gamma_dim = intersect(generic.stabilizer, space.k).dim();
  if (out.k_gamma_dim == out.l_gamma_dim) {
    out.trivial = true;
    SphericalityVerdict v;
    v.spherical = true;
    v.achieved_dim = v.target_dim = out.l_gamma_dim;
    out.verdict = v;
    return out;
  }
  // Opposite-weight pairs and zero weights of the n coordinates.
  Matrix weights = l_on_n(space).weights;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> zeros;
  for (std::size_t i = 0; i < dn; ++i) {
    Vector wi = weights.row(i);
    if (is_zero(wi)) {
      zeros.push_back(i);
      continue;
    }
    for (std::size_t j = i + 1; j < dn; ++j) {
      Vector sum = weights.row(j);
      for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += wi[c];
      if (is_zero(sum)) pairs.emplace_back(i, j);
    }
  }
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::string failure = "no generic point whose stabilizer contains a diagonal Cartan subalgebra";
  const std::size_t budget = 64 + 16 * samples;
  for (std::size_t attempt = 0; attempt <= budget; ++attempt) {
    Vector gamma;
    if (attempt == 0) {
      if (!gamma_hint) continue;
      gamma = *gamma_hint;
    } else {
      gamma = structured_point(pairs, zeros, dn, attempt, rng);
    }
    SubalgebraEmbedding lg = coadjoint_stabilizer(space.act, gamma);
    if (dl - lg.dim() < generic.orbit_dim) continue;
    BorelBasis bb;
    try {
      bb = borel_basis(lg, rng);
    } catch (const GelfandError& e) {
      if (e.kind() != ErrorKind::BorelConstructionFailed) throw;
      failure = e.what();
      continue;
    }
    SubalgebraEmbedding kg = intersect(lg, space.k);
    out.gamma = gamma;
    out.orbit_dim = dl - lg.dim();
    out.l_gamma_dim = lg.dim();
    out.k_gamma_dim = kg.dim();
    auto alg = share(std::move(bb.algebra));
    out.verdict = sphericality_check(*alg, {alg, coordinates_in(bb.basis, kg.inj)}, samples, seed);
    return out;
  }
  out.error = failure;
  return out;
}

ModuleAction k_on_m(const AdaptedSpace& space) {
  const LieAlgebra& l = *space.spec.l;
  const SubalgebraEmbedding& k = space.spec.k;
  auto kalg = share(induced_algebra(k));
  const std::size_t dm = space.dm;
  SubspaceCoordinates mk(hconcat(space.m_basis, k.inj));
  ModuleAction act{kalg, dm, {}};
  for (std::size_t a = 0; a < k.dim(); ++a) {
    Vector xi = k.inj.column(a);
    Matrix r(dm, dm);
    for (std::size_t c = 0; c < dm; ++c) {
      Vector w = mk.coordinates(l.bracket(xi, space.m_basis.column(c)));
      for (std::size_t i = 0; i < dm; ++i) r(i, c) = w[i];
    }
    act.rho.push_back(std::move(r));
  }
  return act;
}

ConditionIII check_condition_iii(const SpaceSpec& space, std::size_t samples, std::uint64_t seed, std::size_t d_max) {
  ConditionIII out;
  AdaptedSpace adapted = adapt(space);
  ModuleAction km = k_on_m(adapted);
  SubalgebraEmbedding kb = whole(km.algebra);
  out.beta = Vector(adapted.dm);
  if (adapted.dm > 0) {
    std::mt19937_64 rng(seed ^ 0xc2b2ae3d27d4eb4fULL);
    std::size_t best = 0, hits = 0;
    auto sweep = [&](std::size_t count) {
      for (std::size_t s = 0; s < count; ++s, ++out.samples_used) {
        Vector beta = random_point(rng, adapted.dm);
        SubalgebraEmbedding st = coadjoint_stabilizer(km, beta);
        const std::size_t orbit = km.algebra->dim() - st.dim();
        if (out.samples_used == 0 || orbit > best) {
          best = orbit;
          hits = 1;
          out.beta = beta;
          kb = st;
        } else if (orbit == best) {
          ++hits;
        }
      }
    };
    sweep(std::max<std::size_t>(samples, 1));
    if (hits < 2) {
      sweep(4 * std::max<std::size_t>(samples, 1));
      out.low_confidence = hits < 2;
    }
  }
  out.k_beta_dim = kb.dim();
  SubalgebraEmbedding in_l{space.l, space.k.inj * kb.inj};
  SpaceSpec sub = heisenberg_type_space(space.name + "/k_beta", space.n, restrict_action(space.act, in_l));
  out.verdict = check_commutative_direct(sub, d_max);
  return out;
}

bool CriterionReport::conditions_hold() const {
  return cond_i && cond_i->holds_up_to && cond_ii.holds() && cond_iii && cond_iii->holds();
}

bool CriterionReport::direct_commutative() const {
  return direct && direct->status != CommutativityStatus::NonCommutative;
}

CriterionReport run_criterion(const SpaceSpec& space, std::size_t d_max, std::size_t samples, std::uint64_t seed) {
  CriterionReport r;
  r.space_name = space.name;
  r.d_max = d_max;
  r.samples = samples;
  r.seed = seed;
  auto guarded = [&](const std::string& check, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      r.errors.push_back(check + ": " + e.what());
    }
  };
  guarded("condition (i)", [&] { r.cond_i = check_condition_i(space, d_max); });
  guarded("condition (ii)", [&] {
    r.cond_ii = check_condition_ii(space, samples, seed);
    if (r.cond_ii.error) r.errors.push_back("condition (ii): " + *r.cond_ii.error);
  });
  guarded("condition (iii)", [&] { r.cond_iii = check_condition_iii(space, samples, seed, d_max); });
  guarded("direct", [&] { r.direct = check_commutative_direct(space, d_max); });
  r.agreement = r.errors.empty() && r.conditions_hold() == r.direct_commutative();
  return r;
}

}  // namespace gelfand
