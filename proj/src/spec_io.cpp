#include "gelfand/spec_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "gelfand/classical.hpp"
#include "gelfand/stabilizer.hpp"

namespace gelfand {

namespace {

using nlohmann::ordered_json;

constexpr const char* kFormat = "gelfand-space";
constexpr int kVersion = 1;

[[noreturn]] void fail(const std::string& section, const std::string& message) {
  throw GelfandError(ErrorKind::ParseError, section + ": " + message);
}

const ordered_json& field(const ordered_json& obj, const std::string& key, const std::string& section) {
  if (!obj.is_object()) fail(section, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(section, "missing field \"" + key + "\"");
  return *it;
}

std::size_t as_index(const ordered_json& v, const std::string& section) {
  if (!v.is_number_unsigned()) fail(section, "expected a non-negative integer");
  return v.get<std::size_t>();
}

Rational as_rational(const ordered_json& v, const std::string& section) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) fail(section, "expected a rational as \"p/q\" or an integer");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument&) {
    fail(section, "malformed rational \"" + v.get<std::string>() + "\"");
  }
}

std::vector<std::string> as_labels(const ordered_json& v, std::size_t dim, const std::string& section) {
  if (!v.is_array() || v.size() != dim) fail(section, "expected " + std::to_string(dim) + " labels");
  std::vector<std::string> out;
  for (const auto& s : v) {
    if (!s.is_string()) fail(section, "labels must be strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

// {"rows": r, "cols": c, "entries": [[i, j, "q"], ...]}
Matrix parse_matrix(const ordered_json& v, const std::string& section) {
  const std::size_t rows = as_index(field(v, "rows", section), section + ".rows");
  const std::size_t cols = as_index(field(v, "cols", section), section + ".cols");
  Matrix m(rows, cols);
  const ordered_json& entries = field(v, "entries", section);
  if (!entries.is_array()) fail(section + ".entries", "expected an array");
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string at = section + ".entries[" + std::to_string(e) + "]";
    const ordered_json& t = entries[e];
    if (!t.is_array() || t.size() != 3) fail(at, "expected [row, col, value]");
    const std::size_t i = as_index(t[0], at), j = as_index(t[1], at);
    if (i >= rows || j >= cols) fail(at, "index out of range");
    m(i, j) = as_rational(t[2], at);
  }
  return m;
}

ordered_json emit_matrix(const Matrix& m) {
  ordered_json entries = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) entries.push_back(ordered_json::array({i, j, to_string(m(i, j))}));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

AlgebraKind parse_kind(const ordered_json& v, const std::string& section) {
  for (AlgebraKind k : {AlgebraKind::Reductive, AlgebraKind::Nilpotent, AlgebraKind::General})
    if (v.is_string() && v.get<std::string>() == to_string(k)) return k;
  fail(section, "kind must be reductive, nilpotent or general");
}

LieAlgebra parse_algebra(const ordered_json& v, const std::string& section) {
  if (v.contains("classical")) {
    const std::string name = field(v, "classical", section).is_string() ? v["classical"].get<std::string>() : "";
    const std::size_t size = as_index(field(v, "size", section), section + ".size");
    for (ClassicalFamily f : {ClassicalFamily::gl, ClassicalFamily::sl, ClassicalFamily::so, ClassicalFamily::sp})
      if (name == to_string(f)) return classical_algebra(f, size);
    fail(section + ".classical", "unknown family \"" + name + "\"");
  }
  if (v.contains("heisenberg")) return heisenberg_algebra(as_index(v["heisenberg"], section + ".heisenberg"));

  const std::size_t dim = as_index(field(v, "dim", section), section + ".dim");
  StructureConstants sc(dim);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  const ordered_json& brackets = v.contains("brackets") ? v["brackets"] : ordered_json::array();
  if (!brackets.is_array()) fail(section + ".brackets", "expected an array");
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    const std::string at = section + ".brackets[" + std::to_string(b) + "]";
    const ordered_json& t = brackets[b];
    if (!t.is_array() || t.size() != 3 || !t[2].is_array()) fail(at, "expected [i, j, [[k, value], ...]]");
    const std::size_t i = as_index(t[0], at), j = as_index(t[1], at);
    if (i >= dim || j >= dim || i == j) fail(at, "needs distinct basis indices below dim");
    if (!seen.insert({std::min(i, j), std::max(i, j)}).second) fail(at, "pair given twice");
    for (const auto& term : t[2]) {
      if (!term.is_array() || term.size() != 2) fail(at, "expected [k, value]");
      const std::size_t k = as_index(term[0], at);
      if (k >= dim) fail(at, "index out of range");
      const Rational c = as_rational(term[1], at);
      sc.add(i, j, k, c);
      sc.add(j, i, k, -c);
    }
  }
  std::vector<std::string> labels;
  if (v.contains("labels")) labels = as_labels(v["labels"], dim, section + ".labels");
  const AlgebraKind kind = v.contains("kind") ? parse_kind(v["kind"], section + ".kind") : AlgebraKind::General;
  LieAlgebra alg = build_algebra(std::move(sc), std::move(labels), kind);

  if (v.contains("matrices")) {
    const std::string at = section + ".matrices";
    const ordered_json& mats = v["matrices"];
    if (!mats.is_array() || mats.size() != dim) fail(at, "expected one matrix per basis vector");
    std::vector<Matrix> rep;
    for (std::size_t i = 0; i < dim; ++i) rep.push_back(parse_matrix(mats[i], at + "[" + std::to_string(i) + "]"));
    alg.matrix_rep = std::move(rep);
  }
  if (v.contains("borel")) {
    std::vector<std::size_t> borel;
    for (const auto& i : v["borel"]) borel.push_back(as_index(i, section + ".borel"));
    alg.borel_indices = std::move(borel);
  }
  if (alg.matrix_rep || alg.borel_indices) validate_realization(alg);
  return alg;
}

ordered_json emit_algebra(const LieAlgebra& alg) {
  ordered_json out{{"dim", alg.dim()}, {"kind", to_string(alg.kind)}};
  if (!alg.labels.empty()) out["labels"] = alg.labels;
  ordered_json brackets = ordered_json::array();
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i + 1; j < alg.dim(); ++j) {
      const SparseVector& b = alg.sc.bracket(i, j);
      if (b.empty()) continue;
      ordered_json terms = ordered_json::array();
      for (const Term& t : b) terms.push_back(ordered_json::array({t.index, to_string(t.coeff)}));
      brackets.push_back(ordered_json::array({i, j, terms}));
    }
  out["brackets"] = brackets;
  if (alg.matrix_rep) {
    ordered_json mats = ordered_json::array();
    for (const Matrix& m : *alg.matrix_rep) mats.push_back(emit_matrix(m));
    out["matrices"] = mats;
  }
  if (alg.borel_indices) out["borel"] = *alg.borel_indices;
  return out;
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n');
}

}  // namespace

SpaceDocument parse_document(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GelfandError(ErrorKind::ParseError, "line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  if (!doc.is_object() || doc.value("format", "") != kFormat) fail("format", std::string("expected \"") + kFormat + "\"");
  if (doc.value("version", 0) != kVersion) fail("version", "unsupported version");

  const ordered_json& name = field(doc, "name", "document");
  if (!name.is_string()) fail("name", "expected a string");
  AlgebraPtr l = share(parse_algebra(field(doc, "l", "document"), "l"));
  LieAlgebra n = parse_algebra(field(doc, "n", "document"), "n");

  ModuleAction act{l, n.dim(), {}};
  const ordered_json& action = field(doc, "action", "document");
  if (action == "standard") {
    if (!l->matrix_rep) fail("action", "\"standard\" needs matrices on l");
    act.rho = *l->matrix_rep;
    if (l->rep_size() != n.dim()) fail("action", "l acts on C^" + std::to_string(l->rep_size()) + ", not on n");
  } else {
    if (!action.is_array() || action.size() != l->dim()) fail("action", "expected one matrix per basis vector of l");
    for (std::size_t i = 0; i < l->dim(); ++i) {
      Matrix m = parse_matrix(action[i], "action[" + std::to_string(i) + "]");
      if (m.rows() != n.dim() || m.cols() != n.dim()) fail("action[" + std::to_string(i) + "]", "expected dim n square");
      act.rho.push_back(std::move(m));
    }
  }

  const ordered_json& k_doc = field(doc, "k", "document");
  SubalgebraEmbedding k;
  if (k_doc == "whole") {
    k = whole(l);
  } else {
    k = {l, parse_matrix(k_doc, "k")};
    if (k.inj.rows() != l->dim()) fail("k", "rows must equal dim l");
  }
  validate_embedding(k);

  Matrix form = doc.contains("form") ? parse_matrix(doc["form"], "form") : Matrix();
  SpaceSpec space = make_space(name.get<std::string>(), std::move(n), l, std::move(act), std::move(k), form);
  if (doc.contains("m_basis")) space.m_basis = parse_matrix(doc["m_basis"], "m_basis");
  validate_space(space);

  SpaceDocument out{std::move(space), std::nullopt};
  if (doc.contains("expected")) {
    const ordered_json& e = doc["expected"];
    if (e == "commutative") out.expect_commutative = true;
    else if (e == "non-commutative") out.expect_commutative = false;
    else fail("expected", "must be \"commutative\" or \"non-commutative\"");
  }
  return out;
}

SpaceSpec parse_space(std::string_view text) { return parse_document(text).space; }

SpaceDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GelfandError(ErrorKind::ParseError, "cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_document(text.str());
}

std::string emit_space(const SpaceSpec& space, std::optional<bool> expect_commutative) {
  ordered_json doc{{"format", kFormat}, {"version", kVersion}, {"name", space.name}};
  if (expect_commutative) doc["expected"] = *expect_commutative ? "commutative" : "non-commutative";
  doc["l"] = emit_algebra(*space.l);
  doc["n"] = emit_algebra(space.n);
  ordered_json& action = doc["action"] = ordered_json::array();
  for (const Matrix& m : space.act.rho) action.push_back(emit_matrix(m));
  doc["k"] = emit_matrix(space.k.inj);
  if (space.form.rows() > 0) doc["form"] = emit_matrix(space.form);
  doc["m_basis"] = emit_matrix(space.m_basis);
  return doc.dump(2) + "\n";
}

}  // namespace gelfand
