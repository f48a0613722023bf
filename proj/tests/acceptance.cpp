// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Usage: acceptance <path to the gelfand CLI> <repository root>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <sys/wait.h>

#include "gelfand/catalog.hpp"
#include "gelfand/criterion.hpp"
#include "gelfand/octonion.hpp"
#include "poisson_support.hpp"

using namespace gelfand;
using namespace gelfand::test_support;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  // Records a failed expectation without stopping the criterion.
  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    detail << (detail.tellp() > 0 ? "; " : "") << what;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<SpaceSpec> direct_fixtures() {
  return {fixture_h2_su2(),
          fixture_r2n_so2n_un(2),
          fixture_c2n_sp(2, LinearGroup::Special, SymplecticGroup::Plain, true),
          fixture_r6_su4_u3(),
          fixture_diag_so(3),
          fixture_ex6_sp(1),
          fixture_c2h2_su2()};
}

void fixture_verdicts(Outcome& out) {
  double slowest = 0;
  for (const SpaceSpec& s : direct_fixtures()) {
    const auto start = std::chrono::steady_clock::now();
    const CommutativityVerdict v = check_commutative_direct(s, 4);
    slowest = std::max(slowest, seconds_since(start));
    if (s.name != "c2h2_su2") {
      out.require(v.status == CommutativityStatus::CommutativeUpTo && v.degree_checked == 4, s.name + " not CommutativeUpTo(4)");
      continue;
    }
    out.require(v.status == CommutativityStatus::NonCommutative && v.witness.has_value(), "counterexample has no witness");
    if (!v.witness) continue;
    // Stored witness: the two quadratic invariants pairing C^2 with H_2.
    out.require(to_string(v.witness->a) == "n:a1*n:x2 - n:a2*n:x1", "witness a differs");
    out.require(to_string(v.witness->b) == "n:b1*n:y2 - n:b2*n:y1", "witness b differs");
    out.require(to_string(v.witness->bracket) == "n:a1*n:b1*n:z + n:a2*n:b2*n:z", "witness bracket differs");
  }
  out.require(slowest <= 60, "a fixture took longer than 60 s");
  out.detail << (out.detail.tellp() > 0 ? "; " : "") << "6 CommutativeUpTo(4), 1 NonCommutative with stored witness";
}

void criterion_agreement(Outcome& out) {
  std::size_t agreeing = 0;
  for (const SpaceSpec& s : direct_fixtures()) {
    const CriterionReport r = run_criterion(s, 4, kDefaultSamples, 0);
    out.require(r.agreement && r.errors.empty(), s.name + " disagrees");
    agreeing += r.agreement;
  }
  out.detail << (out.detail.tellp() > 0 ? "; " : "") << agreeing << "/7 reports with agreement";
}

SubalgebraEmbedding diagonal_sl2(const AlgebraPtr& sum, std::size_t copies) {
  std::vector<Vector> cols;
  for (std::size_t a = 0; a < 3; ++a) {
    Vector v(3 * copies);
    for (std::size_t c = 0; c < copies; ++c) v[3 * c + a] = 1;
    cols.push_back(v);
  }
  return span_embedding(sum, cols);
}

AlgebraPtr sl2_power(std::size_t copies) {
  LieAlgebra out = classical_algebra(ClassicalFamily::sl, 2);
  for (std::size_t c = 1; c < copies; ++c) out = direct_sum(out, classical_algebra(ClassicalFamily::sl, 2));
  return share(std::move(out));
}

void sphericality_fixtures(Outcome& out) {
  auto sl2 = sl2_power(1);
  const auto torus = embed_matrices(sl2, {sl2->represent(unit_vector(3, 0))});
  const auto sl2x2 = sl2_power(2);
  const SubalgebraEmbedding g2 = g2_in_so7();
  const std::vector<std::tuple<std::string, const LieAlgebra*, SubalgebraEmbedding>> spherical{
      {"(sl2, torus)", sl2.get(), torus}, {"(sl2^2, diag)", sl2x2.get(), diagonal_sl2(sl2x2, 2)}, {"(so7, g2)", g2.ambient.get(), g2}};
  for (const auto& [name, g, h] : spherical) {
    const SphericalityVerdict v = sphericality_check(*g, h, 8, 0);
    out.require(v.spherical && !v.witness.empty() && v.achieved_dim == g->dim(), name + " not spherical with witness");
  }
  const auto sl2x4 = sl2_power(4);
  for (std::uint64_t seed : {0u, 1u}) {
    const SphericalityVerdict v = sphericality_check(*sl2x4, diagonal_sl2(sl2x4, 4), 8, seed);
    out.require(!v.spherical && v.samples_used == 8, "(sl2^4, diag) spherical under seed " + std::to_string(seed));
    out.require(v.dimension_obstruction, "dimension obstruction not recorded");
  }
  const CatalogEntry& row = *find_entry("sl2x4_diag").entry;
  const CatalogRow report = verify_entry(row, row.minimal_params(), 4, kDefaultSamples, 0);
  out.require(report.pass && report.detail.find("dimension obstruction") != std::string::npos,
              "catalog row lacks the obstruction");
  out.detail << (out.detail.tellp() > 0 ? "; " : "") << "3 spherical with witnesses, (sl2^4, diag) not spherical (2 seeds x 8)";
}

void table_one(Outcome& out) {
  std::size_t held = 0;
  for (const int row : {1, 3, 5, 8, 9, 10, 11, 12}) {
    const EntryRef ref = find_entry("T1/row" + std::to_string(row));
    const CatalogRow r = verify_entry(*ref.entry, ref.params, 4, kDefaultSamples, 0);
    out.require(r.pass, r.id + ": " + r.observed);
    held += r.pass;
  }
  out.detail << (out.detail.tellp() > 0 ? "; " : "") << held << "/8 rows factorize with the listed u dimension";
}

void stabilizer_dims(Outcome& out) {
  auto sp4 = share(classical_algebra(ClassicalFamily::sp, 4));
  const std::size_t sp = generic_stabilizer(realified(standard_action(sp4)), kDefaultSamples, 0).stabilizer.dim();
  auto so4 = share(classical_algebra(ClassicalFamily::so, 4));
  const std::size_t so = generic_stabilizer(standard_action(so4), kDefaultSamples, 0).stabilizer.dim();
  auto gl4 = share(classical_algebra(ClassicalFamily::gl, 4));
  const GenericStabilizer unitary = generic_stabilizer(realified(standard_action(gl4)), kDefaultSamples, 0);
  const std::size_t meet = intersect(unitary.stabilizer, symplectic_in(gl4, 2)).dim();
  out.require(sp == 3, "sp4 on C^4: " + std::to_string(sp));
  out.require(so == 3, "so4 on C^4: " + std::to_string(so));
  out.require(unitary.stabilizer.dim() == 9 && meet == 3, "U_4 on C^4: " + std::to_string(unitary.stabilizer.dim()) +
                                                              ", meeting sp_2 in " + std::to_string(meet));
  out.detail << (out.detail.tellp() > 0 ? "; " : "") << "sp4 -> " << sp << ", so4 -> " << so << ", U4 -> gl3 (dim "
             << unitary.stabilizer.dim() << ") meeting sp2 in dim " << meet;
}

void property_suites(Outcome& out) {
  std::mt19937_64 rng(2024);
  std::size_t triples = 0, pairs = 0, invariant_pairs = 0, specializations = 0;
  for (const BracketContext& ctx : property_contexts()) {
    auto br = [&](const Polynomial& p, const Polynomial& q) { return poisson_bracket(p, q, ctx); };
    for (int trial = 0; trial < 70; ++trial, ++triples) {
      const Polynomial a = random_polynomial(ctx.vars, rng), b = random_polynomial(ctx.vars, rng),
                       c = random_polynomial(ctx.vars, rng);
      out.require(br(a, b) == Rational(-1) * br(b, a), "antisymmetry");
      out.require((br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b))).is_zero(), "Jacobi");
      out.require(br(a, b * c) == br(a, b) * c + b * br(a, c), "Leibniz");
    }
  }
  for (const BracketContext& ctx : {make_context(adapt(sl2_on_plane())), make_context(adapt(fixture_r2n_so2n_un(2)))})
    for (int trial = 0; trial < 60; ++trial, ++pairs) {
      const std::size_t n1 = rng() % 3, l1 = 1 + rng() % 2 - (n1 > 1 ? 1 : 0);
      const std::size_t n2 = rng() % 3, l2 = 1 + rng() % 2 - (n2 > 1 ? 1 : 0);
      const Polynomial p = random_bihomogeneous(ctx.vars, n1, l1, rng), q = random_bihomogeneous(ctx.vars, n2, l2, rng);
      const BracketSplit s = bidegree_split(p, q, ctx);
      out.require(s.bracket_n + s.bracket_l == poisson_bracket(p, q, ctx), "split does not sum to the bracket");
      out.require(s.bracket_n.is_zero() || s.bracket_n.bidegree() == std::pair{n1 + n2 - 1, l1 + l2}, "n part bidegree");
      out.require(s.bracket_l.is_zero() || s.bracket_l.bidegree() == std::pair{n1 + n2, l1 + l2 - 1}, "l part bidegree");
    }
  std::vector<SpaceSpec> fixtures = commutative_fixtures();
  fixtures.push_back(fixture_c2h2_su2());
  for (const SpaceSpec& s : fixtures) {
    const AdaptedSpace space = adapt(s);
    const VarAction act = k_on_reduced(space);
    const GradedInvariants inv = invariants_up_to(space, 4);
    for (std::size_t i = 0; i < inv.polys.size(); ++i)
      for (std::size_t j = i + 1; j < inv.polys.size(); ++j) {
        if (inv.degrees[i] + inv.degrees[j] > 5) continue;
        const Polynomial bracket = reduced_bracket(inv.polys[i], inv.polys[j], space);
        for (const SparseOperator& op : act.ops)
          out.require(apply_derivation(op, bracket).is_zero(), s.name + ": bracket of invariants not invariant");
        ++invariant_pairs;
      }
  }
  std::mt19937_64 gamma_rng(31);
  for (const SpaceSpec& s : {fixture_r2n_so2n_un(2), one_factor_of_so4()}) {
    const AdaptedSpace space = adapt(s);
    const GradedInvariants inv = invariants_up_to(space, 3);
    for (int draw = 0; draw < 3; ++draw) {
      Vector gamma(space.dn);
      for (Rational& g : gamma) g = Rational(static_cast<long>(gamma_rng() % 7) - 3);
      for (std::size_t i = 0; i < inv.polys.size(); ++i)
        for (std::size_t j = i + 1; j < inv.polys.size(); ++j, ++specializations) {
          const Polynomial &a = inv.polys[i], &b = inv.polys[j];
          const Polynomial lhs = specialize_gamma(reduced_split(a, b, space).bracket_l, gamma, space);
          const Polynomial rhs = stabilizer_bracket(specialize_gamma(a, gamma, space), specialize_gamma(b, gamma, space),
                                                    gamma, space);
          out.require(lhs == rhs, s.name + ": phi_gamma is not a homomorphism");
        }
    }
  }
  out.require(triples >= 200 && pairs >= 100 && specializations >= 20, "too few samples");
  out.detail << (out.detail.tellp() > 0 ? "; " : "") << triples << " triples, " << pairs << " bi-homogeneous pairs, "
             << invariant_pairs << " invariant pairs, " << specializations << " phi_gamma samples";
}

void monotonicity(Outcome& out) {
  std::size_t checked = 0;
  for (const SpaceSpec& s : commutative_fixtures()) {
    out.require(check_commutative_direct(zero_bracket(s), 4).status != CommutativityStatus::NonCommutative,
                s.name + " with zero bracket");
    out.require(check_commutative_direct(central_reduction(s), 4).status != CommutativityStatus::NonCommutative,
                s.name + " after central reduction");
    ++checked;
  }
  out.detail << (out.detail.tellp() > 0 ? "; " : "") << checked << " fixtures, both transformations";
}

void coverage(Outcome& out) {
  const CatalogReport report = verify_catalog({}, 4, kDefaultSamples, 0);
  const std::set<std::string> exceptional{"T4/row15", "T4/row16"};
  std::vector<std::string> conflicts;
  std::size_t verified = 0;
  for (const CatalogRow& row : report.rows) {
    const std::string base = row.id.substr(0, row.id.find('?'));
    if (row.skipped) {
      out.require(exceptional.contains(base), base + " skipped but not an exceptional-isogeny row");
      continue;
    }
    out.require(row.observed != "error", row.id + " failed to run: " + row.detail);
    ++verified;
    if (!row.pass) conflicts.push_back(row.id + " (" + row.observed + ")");
  }
  out.require(report.skipped() <= exceptional.size(), "too many flagged rows");
  out.detail << (out.detail.tellp() > 0 ? "; " : "") << verified << " rows verified, " << report.skipped()
             << " flagged not_constructible, " << report.passed() << " match";
  if (!conflicts.empty()) {
    out.detail << "; rows disagreeing with the listed verdict:";
    for (const std::string& c : conflicts) out.detail << " " << c;
  }
}

struct Run {
  std::string output;
  int status = -1;
};

Run run_command(const std::string& command) {
  Run out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buffer{};
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.output.append(buffer.data(), got);
  const int raw = pclose(pipe);
  out.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

void determinism(Outcome& out, const std::string& cli, const std::string& root) {
  const std::vector<std::pair<std::string, int>> commands{
      {"check " + root + "/specs/c2h2_su2.json", 0},
      {"check " + root + "/specs/h4_su4_sp2.json --seed 3", 0},
      {"criterion " + root + "/specs/r4_so4_u2.json", 0},
      {"criterion " + root + "/specs/c2h2_su2.json --samples 7", 0},
      {"tables --table T3", 0},
      {"tables --table T2a --seed 5", 0},
      {"describe T3/row9", 0},
      {"describe T3/row0", 2},
  };
  for (const auto& [args, expected_status] : commands) {
    const std::string command = cli + " " + args + " --format machine 2>/dev/null";
    const Run first = run_command(command), second = run_command(command);
    out.require(!first.output.empty() && first.output == second.output, "output differs: " + args);
    out.require(first.status == expected_status && second.status == expected_status,
                "exit status " + std::to_string(first.status) + ": " + args);
  }
  out.detail << (out.detail.tellp() > 0 ? "; " : "") << commands.size() << " commands repeated with identical bytes";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <gelfand cli> <repository root>\n";
    return 2;
  }
  const std::string cli = argv[1], root = argv[2];
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"fixture verdicts at degree 4", fixture_verdicts},
      {"criterion agrees with the direct check", criterion_agreement},
      {"sphericality fixtures", sphericality_fixtures},
      {"Table 1 factorizations at minimal rank", table_one},
      {"generic stabilizer dimensions", stabilizer_dims},
      {"property suites", property_suites},
      {"central-reduction and zero-bracket monotonicity", monotonicity},
      {"catalog coverage", coverage},
      {"determinism of machine reports", [&](Outcome& o) { determinism(o, cli, root); }},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    all = all && out.pass;
    std::printf("criterion %zu: %s  %s (%.1f s): %s\n", i + 1, out.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                seconds_since(start), out.detail.str().c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
