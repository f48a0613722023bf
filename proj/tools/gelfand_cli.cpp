// Command-line front end: checks spaces given as spec documents, verifies
// catalog slices and describes catalog entries.
//
// Exit status: 0 when every expectation is met, 1 on a verdict mismatch,
// 2 on an input error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gelfand/catalog.hpp"
#include "gelfand/criterion.hpp"
#include "gelfand/spec_io.hpp"

namespace {

using nlohmann::ordered_json;
using namespace gelfand;

constexpr int kMet = 0, kMismatch = 1, kInputError = 2;

struct Options {
  std::size_t degree = 4;
  std::size_t samples = kDefaultSamples;
  std::uint64_t seed = 0;
  std::string format = "text";
  bool machine() const { return format == "machine"; }
};

/// Collects one command's output in both forms; printed once at the end.
struct Report {
  std::string command;
  const Options& opts;
  std::ostringstream text;
  ordered_json results = ordered_json::array();
  ordered_json witnesses = ordered_json::array();
  int status = kMet;

  int emit() const {
    if (opts.machine()) {
      ordered_json doc{{"command", command},
                       {"params", {{"degree", opts.degree}, {"samples", opts.samples}, {"seed", opts.seed}}},
                       {"results", results},
                       {"witnesses", witnesses},
                       {"status", status}};
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << text.str();
    }
    return status;
  }
};

ordered_json witness_json(const std::string& source, const Witness& w) {
  return {{"source", source}, {"a", to_string(w.a)}, {"b", to_string(w.b)}, {"bracket", to_string(w.bracket)}};
}

std::string verdict_text(const CommutativityVerdict& v) {
  return to_string(v.status) + "(" + std::to_string(v.degree_checked) + ")";
}

std::string dims_text(const std::vector<std::size_t>& dims) {
  std::string out;
  for (std::size_t d : dims) out += (out.empty() ? "" : " ") + std::to_string(d);
  return out;
}

void describe_space(Report& r, const SpaceSpec& s) {
  r.text << "space " << s.name << ": dim n = " << s.n.dim() << ", dim l = " << s.l->dim() << ", dim k = " << s.k.dim()
         << ", dim m = " << s.m_basis.cols() << "\n";
}

void print_witness(Report& r, const std::string& source, const Witness& w) {
  r.text << "  witness a = " << to_string(w.a) << "\n"
         << "  witness b = " << to_string(w.b) << "\n"
         << "  bracket   = " << to_string(w.bracket) << "\n";
  r.witnesses.push_back(witness_json(source, w));
}

// Sets a mismatch status when the document states an expectation the
// verdict contradicts.
void compare_expectation(Report& r, const SpaceDocument& doc, bool observed_commutative) {
  if (!doc.expect_commutative) return;
  const bool met = *doc.expect_commutative == observed_commutative;
  r.text << "expected " << (*doc.expect_commutative ? "commutative" : "non-commutative") << ": "
         << (met ? "met" : "NOT met") << "\n";
  if (!met) r.status = kMismatch;
}

ordered_json verdict_json(const CommutativityVerdict& v) {
  return {{"status", to_string(v.status)},
          {"degree_checked", v.degree_checked},
          {"invariant_dims", v.invariant_dims},
          {"pairs_checked", v.pairs_checked}};
}

void cmd_check(Report& r, const std::string& file) {
  SpaceDocument doc = load_document(file);
  describe_space(r, doc.space);
  CommutativityVerdict v = check_commutative_direct(doc.space, r.opts.degree);
  r.text << "direct check: " << verdict_text(v) << "\n";
  r.text << "invariant dims by degree: " << dims_text(v.invariant_dims) << "\n";
  if (v.witness) print_witness(r, "direct", *v.witness);
  ordered_json result{{"check", "direct"}, {"space", doc.space.name}};
  result.update(verdict_json(v));
  r.results.push_back(result);
  compare_expectation(r, doc, v.status != CommutativityStatus::NonCommutative);
}

void cmd_criterion(Report& r, const std::string& file) {
  SpaceDocument doc = load_document(file);
  describe_space(r, doc.space);
  const Options& o = r.opts;
  CriterionReport c = run_criterion(doc.space, o.degree, o.samples, o.seed);

  ordered_json result{{"check", "criterion"}, {"space", doc.space.name}};
  if (c.cond_i) {
    r.text << "(i)   invariants of l and k on S(n) agree: "
           << (c.cond_i->holds_up_to ? "holds up to degree " + std::to_string(c.cond_i->d_max)
                                     : "fails at degree " + std::to_string(*c.cond_i->first_failure))
           << "\n";
    result["cond_i"] = {{"holds_up_to", c.cond_i->holds_up_to}, {"d_max", c.cond_i->d_max}};
    if (c.cond_i->first_failure) result["cond_i"]["first_failure"] = *c.cond_i->first_failure;
  }
  const ConditionII& ii = c.cond_ii;
  r.text << "(ii)  (l_gamma, k_gamma) spherical: " << (ii.holds() ? "yes" : "no") << " (orbit dim " << ii.orbit_dim
         << ", dim l_gamma " << ii.l_gamma_dim << ", dim k_gamma " << ii.k_gamma_dim << ")\n";
  result["cond_ii"] = {{"holds", ii.holds()},
                       {"orbit_dim", ii.orbit_dim},
                       {"l_gamma_dim", ii.l_gamma_dim},
                       {"k_gamma_dim", ii.k_gamma_dim}};
  if (ii.verdict) {
    result["cond_ii"]["achieved_dim"] = ii.verdict->achieved_dim;
    result["cond_ii"]["target_dim"] = ii.verdict->target_dim;
    if (ii.verdict->dimension_obstruction) {
      r.text << "      dimension obstruction: dim b + dim k_gamma < dim l_gamma\n";
      result["cond_ii"]["dimension_obstruction"] = true;
    }
  }
  if (c.cond_iii) {
    r.text << "(iii) S(n)^K_beta commutative: " << verdict_text(c.cond_iii->verdict) << " (dim k_beta "
           << c.cond_iii->k_beta_dim << ")\n";
    result["cond_iii"] = verdict_json(c.cond_iii->verdict);
    result["cond_iii"]["k_beta_dim"] = c.cond_iii->k_beta_dim;
    if (c.cond_iii->verdict.witness) print_witness(r, "condition iii", *c.cond_iii->verdict.witness);
  }
  if (c.direct) {
    r.text << "direct check: " << verdict_text(*c.direct) << "\n";
    result["direct"] = verdict_json(*c.direct);
    if (c.direct->witness) print_witness(r, "direct", *c.direct->witness);
  }
  for (const std::string& e : c.errors) r.text << "error: " << e << "\n";
  r.text << "conditions " << (c.conditions_hold() ? "hold" : "fail") << "; agreement "
         << (c.agreement ? "true" : "false") << "\n";
  result["conditions_hold"] = c.conditions_hold();
  result["agreement"] = c.agreement;
  result["errors"] = c.errors;
  r.results.push_back(result);
  if (!c.agreement) r.status = kMismatch;
  compare_expectation(r, doc, c.direct_commutative());
}

void cmd_tables(Report& r, const std::string& table, std::optional<std::size_t> max_rank) {
  const Options& o = r.opts;
  CatalogReport report = verify_catalog({table, max_rank}, o.degree, o.samples, o.seed);
  for (const CatalogRow& row : report.rows) {
    const std::string mark = row.skipped ? "SKIP" : row.pass ? "PASS" : "FAIL";
    r.text << mark << "  " << row.id << "  expected " << to_string(row.expected) << ", observed " << row.observed;
    if (row.degree) r.text << " [degree " << row.degree << "]";
    if (!row.detail.empty()) r.text << "\n      " << row.detail;
    r.text << "\n";
    r.results.push_back({{"id", row.id},
                         {"expected", to_string(row.expected)},
                         {"method", to_string(row.method)},
                         {"observed", row.observed},
                         {"pass", row.pass},
                         {"skipped", row.skipped},
                         {"degree", row.degree},
                         {"detail", row.detail}});
  }
  r.text << "passed " << report.passed() << ", failed " << report.failed() << ", skipped " << report.skipped()
         << "\n";
  if (!report.all_pass()) r.status = kMismatch;
}

std::string range_text(const ParamRange& p) {
  std::string out = p.max ? std::to_string(p.min) + " <= " + p.name + " <= " + std::to_string(*p.max)
                          : p.name + " >= " + std::to_string(p.min);
  if (p.step > 1) out += ", step " + std::to_string(p.step);
  return out;
}

void cmd_describe(Report& r, const std::string& id, bool spec_only) {
  EntryRef ref = find_entry(id);
  const CatalogEntry& e = *ref.entry;
  if (spec_only) {
    if (e.not_constructible) throw GelfandError(ErrorKind::InvalidInput, e.id(ref.params) + " is not constructible");
    CatalogInstance inst = build_instance(e, ref.params);
    const SpaceSpec* space = std::get_if<SpaceSpec>(&inst);
    if (!space) throw GelfandError(ErrorKind::InvalidInput, e.id(ref.params) + " is not a space");
    std::optional<bool> expected;
    if (e.expected == ExpectedVerdict::Commutative) expected = true;
    if (e.expected == ExpectedVerdict::NonCommutative) expected = false;
    std::cout << emit_space(*space, expected);
    return;
  }
  r.text << e.id(ref.params) << "\n"
         << "  citation:     " << e.citation << "\n"
         << "  construction: " << e.construction << "\n"
         << "  expected:     " << to_string(e.expected) << " (" << to_string(e.method) << ")\n";
  ordered_json constraints = ordered_json::array();
  for (const ParamRange& p : e.params) {
    r.text << "  parameter:    " << range_text(p) << "\n";
    constraints.push_back(range_text(p));
  }
  if (!e.notes.empty()) r.text << "  notes:        " << e.notes << "\n";
  if (e.not_constructible) r.text << "  not constructible: " << *e.not_constructible << "\n";
  if (e.min_degree) r.text << "  minimum degree: " << e.min_degree << "\n";
  ordered_json result{{"id", e.id(ref.params)},
                      {"citation", e.citation},
                      {"construction", e.construction},
                      {"expected", to_string(e.expected)},
                      {"method", to_string(e.method)},
                      {"constraints", constraints}};
  if (!e.notes.empty()) result["notes"] = e.notes;
  if (e.not_constructible) result["not_constructible"] = *e.not_constructible;
  r.results.push_back(result);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of commutative homogeneous spaces"};
  app.require_subcommand(1);
  Options opts;
  auto add_common = [&opts](CLI::App* cmd) {
    cmd->add_option("--degree", opts.degree, "degree cutoff for invariants and brackets")->capture_default_str();
    cmd->add_option("--samples", opts.samples, "generic-point draws")->capture_default_str();
    cmd->add_option("--seed", opts.seed, "random seed")->capture_default_str();
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
  };

  std::string file, table, id;
  std::optional<std::size_t> max_rank;
  bool spec_only = false;
  CLI::App* check = app.add_subcommand("check", "direct commutativity check of a spec document");
  check->add_option("spec", file, "space document")->required();
  add_common(check);
  CLI::App* criterion = app.add_subcommand("criterion", "conditions (i)-(iii) and the direct check");
  criterion->add_option("spec", file, "space document")->required();
  add_common(criterion);
  CLI::App* tables = app.add_subcommand("tables", "verify catalog entries");
  tables->add_option("--table", table, "table name (T3) or entry id (T4/row10)");
  tables->add_option("--max-rank", max_rank, "also run parameter values up to this rank");
  bool document = false;
  tables->add_flag("--document", document, "print the registry as JSON (data/catalog.json) and exit");
  add_common(tables);
  CLI::App* describe = app.add_subcommand("describe", "print a catalog entry");
  describe->add_option("id", id, "entry id, e.g. T3/row9 or T3/row6?n=2")->required();
  describe->add_flag("--spec", spec_only, "print the space as a spec document");
  add_common(describe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  std::string echo;
  for (int i = 1; i < argc; ++i) echo += (i > 1 ? " " : "") + std::string(argv[i]);
  Report report{echo, opts};
  try {
    if (*check) cmd_check(report, file);
    if (*criterion) cmd_criterion(report, file);
    if (*tables && document) {
      std::cout << catalog_document();
      return kMet;
    }
    if (*tables) cmd_tables(report, table, max_rank);
    if (*describe) {
      cmd_describe(report, id, spec_only);
      if (spec_only) return kMet;
    }
  } catch (const GelfandError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (opts.machine())
      std::cout << ordered_json{{"command", echo}, {"error", e.what()}, {"status", kInputError}}.dump(2) << "\n";
    return kInputError;
  }
  return report.emit();
}
