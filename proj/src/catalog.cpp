#include "gelfand/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "catalog_spaces.hpp"
#include "json.hpp"

namespace gelfand {

namespace {

using catalog_detail::named;
using catalog_detail::named_pair;

constexpr std::size_t kSphericalitySamples = 8;

ParamRange at_least(std::string name, std::size_t min, std::size_t step = 1) {
  return {std::move(name), min, std::nullopt, step};
}

struct EntryBuilder {
  std::vector<CatalogEntry>& out;
  TableId table;
  ExpectedVerdict expected;
  Method method;

  CatalogEntry& add(std::string row, std::vector<ParamRange> params, std::string citation, std::string construction,
                    std::string notes = {}) {
    CatalogEntry e{table, std::move(row), std::move(params), expected, method, std::move(citation),
                   std::move(construction), std::move(notes), std::nullopt, 0, 0};
    out.push_back(std::move(e));
    return out.back();
  }
};

std::string table_row(const std::string& table, const std::string& row) { return "Table " + table + ", row " + row; }

void add_table1(std::vector<CatalogEntry>& out) {
  EntryBuilder b{out, TableId::T1, ExpectedVerdict::Factorization, Method::FactorizationCheck};
  const std::string ref = "Table 1";
  const auto n2 = std::vector{at_least("n", 2)};
  b.add("1", n2, ref, "sl_2n = sp_n + sl_2n-1 (sl_2n-1 fixes e_1 and the dual e^1); u = sp_n-1");
  b.add("2", n2, ref, "sl_2n = sp_n + (sl_2n-1 + C) (stabilizer of the lines e_1 and e_2..e_2n); u = sp_n-1 + C");
  b.add("3", n2, ref, "so_2n+4 = so_2n+3 + su_n+2 (skew-symmetric matrices, su_n+2 centralizes a complex structure); "
        "u = su_n+1");
  b.add("4", n2, ref, "so_2n+4 = so_2n+3 + u_n+2; u = u_n+1");
  b.add("5", n2, ref, "so_4n = so_4n-1 + sp_n (sp_n commutes with right quaternion multiplication); u = sp_n-1");
  b.add("6", n2, ref, "so_4n = so_4n-1 + (sp_n + u_1); u = sp_n-1 + u_1");
  b.add("7", n2, ref, "so_4n = so_4n-1 + (sp_n + sp_1); u = sp_n-1 + sp_1");
  b.add("8", {}, ref, "so_16 = so_15 + spin_9 (spin representation); u = spin_7");
  b.add("9", {}, ref, "so_8 = spin_7 + so_7 (definite octonions); u = g_2");
  b.add("10", {}, ref, "so_7 = g_2 + so_5 (so_5 fixes two imaginary units); u = su_2");
  b.add("11", {}, ref, "so_7 = g_2 + (so_5 + so_2); u = su_2 + u_1");
  b.add("12", {}, ref, "so_7 = g_2 + so_6; u = su_3");
}

void add_table2a(std::vector<CatalogEntry>& out) {
  EntryBuilder b{out, TableId::T2a, ExpectedVerdict::Factorization, Method::FactorizationCheck};
  const std::string note = "checks l_1 = pi_1(k) + (l_1)_*(V_1) with a generic stabilizer; the intersection is reported";
  b.add("1a", {at_least("n", 2)}, table_row("2a", "1a"), "sl_2n > sp_n on C^2n + (C^2n)*", note);
  b.add("1b", {}, table_row("2a", "1b"), "sl_4 > s(gl_3 + gl_1) on Lambda^2 C^4", note);
  b.add("2a", {}, table_row("2a", "2a"), "so_7 > g_2 (split octonions) on C^7 + C^7", note);
  b.add("2b-spin6", {}, table_row("2a", "2b"), "spin_7 > spin_6 on the spinor module C^8", note);
  b.add("2b-spin5u1", {}, table_row("2a", "2b"), "spin_7 > spin_5 + u_1 on the spinor module C^8", note);
  b.add("3-su", {at_least("n", 2)}, table_row("2a", "3"), "so_2n > sl_n on C^2n", note);
  b.add("3-u", {at_least("n", 2)}, table_row("2a", "3"), "so_2n > gl_n on C^2n", note);
  b.add("4a", {}, table_row("2a", "4a"), "so_8 > spin_7 on 3 C^8", note);
  b.add("4b", {}, table_row("2a", "4b"), "so_8 > sp_2 + sp_1 on C^4 (x) C^2", note);
}

void add_table2b(std::vector<CatalogEntry>& out) {
  EntryBuilder b{out, TableId::T2b, ExpectedVerdict::Commutative, Method::Criterion};
  const auto n1 = std::vector{at_least("n", 1)};
  const std::string ref = table_row("2b", "1a");
  b.add("1a-su", n1, ref, "L = SL_2n, K = Sp_n, n = C^2n + (C^2n)* abelian");
  b.add("1a-su-h", n1, ref, "L = SL_2n, K = Sp_n, n = Heisenberg algebra on C^2n + (C^2n)*");
  b.add("1a-u", n1, ref, "L = GL_2n, K = Sp_n, n abelian");
  b.add("1a-u-h", n1, ref, "L = GL_2n, K = Sp_n, n Heisenberg");
  b.add("1a-u-u1", n1, ref, "L = GL_2n, K = Sp_n x C*, n abelian");
  b.add("1a-u-u1-h", n1, ref, "L = GL_2n, K = Sp_n x C*, n Heisenberg");
  b.add("1b", {}, table_row("2b", "1b"), "L = SL_4, K = S(GL_3 x GL_1), n = Lambda^2 C^4");
  b.add("2a", {}, table_row("2b", "2a"), "L = SO_7, K = G_2 (split), n = C^7");
  b.add("2b", {}, table_row("2b", "2b"), "L = Spin_7, K = Spin_6, n = spinor C^8");
  b.add("3", {at_least("n", 2)}, table_row("2b", "3"), "L = SO_2n, K = GL_n, n = C^2n");
  b.add("4a", {}, table_row("2b", "4a"), "L = SO_8 x SO_2, K = Spin_7 x SO_2, n = C^8 (x) C^2");
  b.add("4b", {}, table_row("2b", "4b"), "L = SO_8, K = Spin_7, n = C^8 + C^8");
  b.add("4c", {}, table_row("2b", "4c"), "L = SO_8, K = Spin_7, n = C^8");
  b.add("4d", {}, table_row("2b", "4d"), "L = SO_8, K = Sp_2 x Sp_1, n = C^4 (x) C^2");
}

void add_table3(std::vector<CatalogEntry>& out) {
  EntryBuilder b{out, TableId::T3, ExpectedVerdict::Commutative, Method::Direct};
  auto ref = [](const std::string& row) { return table_row("3", row); };
  b.add("1", {at_least("n", 3)}, ref("1"), "K = SO_n, w = C^n, z = so_n");
  b.add("2", {}, ref("2"), "K = Spin_7, w = spinor C^8, z = vector C^7");
  b.add("3", {}, ref("3"), "K = G_2, w = C^7, z = C^7 (cross product)");
  b.add("4-su", {at_least("n", 2, 2)}, ref("4"), "K = SL_n (n even), w = C^n + (C^n)*, z = Lambda^2 + Lambda^2* + C");
  b.add("4-u", {at_least("n", 2, 2)}, ref("4"), "K = GL_n (n even), w = C^n + (C^n)*, z = Lambda^2 + Lambda^2* + C");
  b.add("5-su", {at_least("n", 3, 2)}, ref("5"), "K = SL_n (n odd), w = C^n + (C^n)*, z = Lambda^2 + Lambda^2*");
  b.add("5-u", {at_least("n", 3, 2)}, ref("5"), "K = GL_n (n odd), w = C^n + (C^n)*, z = Lambda^2 + Lambda^2*");
  b.add("6", {at_least("n", 2)}, ref("6"), "K = GL_n, w = C^n + (C^n)*, z = gl_n (trace-free part + C)");
  b.add("7-sp", {at_least("n", 1)}, ref("7"),
        "K = Sp_n, w = C^2n (x) C^2, z = HS_0^2 + sp_1 (sp_1 graded by the U_1 weights 2, 0, -2)");
  b.add("7-usp", {at_least("n", 1)}, ref("7"), "K = C* x Sp_n, w = C^2n (x) C^2, z = HS_0^2 + sp_1");
  b.add("8", {}, ref("8"), "K = C* x Spin_7, w = C^8 + (C^8)*, z = C^7 + C");
  b.add("9", {at_least("n", 2)}, ref("9"), "K = Sp_1 x Sp_n, w = C^2 (x) C^2n, z = sp_1", "max column: n >= 2");
  b.add("10", {at_least("n", 1)}, ref("10"), "K = Sp_2 x Sp_n, w = C^4 (x) C^2n, z = sp_2");
  b.add("11-su", {at_least("n", 3)}, ref("11"), "K = SL_2 x SL_n, w = C^2 (x) C^n + dual, z = gl_2",
        "U_1 is required for n = 2");
  b.add("11-u", {at_least("n", 2)}, ref("11"), "K = GL_2 x SL_n, w = C^2 (x) C^n + dual, z = gl_2");
  b.add("12", {at_least("n", 1)}, ref("12"), "K = GL_2 x Sp_n, w = C^2 (x) C^2n + dual, z = gl_2");
}

void add_table4(std::vector<CatalogEntry>& out) {
  EntryBuilder b{out, TableId::T4, ExpectedVerdict::Commutative, Method::Decomposition};
  auto ref = [](const std::string& row) { return table_row("4", row); };
  const std::string heis = "each (W + R) is a Heisenberg algebra on W + W*";
  b.add("1", {at_least("n", 2)}, ref("1"), "K = GL_n, n = (C^n + R) + sl_n", heis);
  // The Sp_2 x C* component is non-commutative from degree 5.
  b.add("2", {}, ref("2"), "K = GL_4, n = (C^4 + Lambda^2 C^4 + R) + R^6", heis).min_degree = 5;
  b.add("3", {at_least("n", 2)}, ref("3"), "K = C* x GL_n, n = (C^n + R) + (Lambda^2 C^n + R)", heis);
  b.add("4", {}, ref("4"), "K = SL_4, n = (C^4 + R^6) + R^6",
        "HS_0^2 H^2 + R is read as R^6 = Lambda^2 C^4 with the bracket from Lambda^2 V and Lambda^2 V*");
  b.add("5", {}, ref("5"), "K = GL_2 x GL_4, n = (C^2 (x) C^4 + gl_2) + R^6", heis);
  b.add("6", {at_least("m", 1)}, ref("6"), "K = SL_4 x GL_m, n = (C^4 (x) C^m + R) + R^6", heis);
  b.add("7", {at_least("m", 1), at_least("n", 1)}, ref("7"), "K = GL_m x GL_n, n = (C^m (x) C^n + R) + (C^m + R)",
        heis);
  b.add("8", {at_least("m", 1), at_least("p", 1)}, ref("8"),
        "K = GL_m x SL_2 x GL_p, n = (C^m (x) C^2 + R) + (C^2 (x) C^p + R)", heis);
  b.add("9", {at_least("n", 1)}, ref("9"), "K = C* x C* x Sp_n, n = (H^n + R) + (H^n + R)", heis);
  for (const std::string alt : {"sp1", "u1", "e"}) {
    CatalogEntry& e = b.add("10-" + alt, {at_least("n", 1)}, ref("10"),
                            "K = Sp_n x Sp_1 x " + alt + ", n = (H^n + H_0) + H^1 (x) H^n",
                            "third factor: Sp_1, U_1 or trivial");
    // Without the third factor the (H + H_0, Sp_1) component is non-commutative from degree 8.
    if (alt == "e") e.min_degree = 8;
  }
  for (const std::string alt : {"sp1", "u1"})
    b.add("11-" + alt, {at_least("n", 1), at_least("m", 1)}, ref("11"),
          "K = Sp_n x " + alt + " x Sp_m, n = (H^n + H_0) + H^n (x) H^m", "second factor: Sp_1 or U_1");
  for (const std::string alt : {"sp1", "u1", "e"})
    b.add("12-" + alt, {at_least("n", 2)}, ref("12"), "K = Sp_n x " + alt + ", n = (H^n + H_0) + HS_0^2 H^n",
          "HS_0^2 H^n vanishes for n = 1");
  for (const std::string alt : {"so2", "e"})
    b.add("13-" + alt, {}, ref("13"), "K = Spin_7 x " + alt + ", n = (C^8 + C^7) + C^7 (x) C^2");
  b.add("14", {}, ref("14"), "K = C* x Spin_7, n = (C^7 + R) + C^8", heis);
  b.add("15", {}, ref("15"), "K = U_1 x U_1 x Spin_8, n = (C^8_+ + R) + (C^8_- + R)").not_constructible =
      "needs both half-spin modules of Spin_8 (triality), not constructed";
  b.add("16", {}, ref("16"), "K = U_1 x Spin_10, n = (C^16 + R) + R^10").not_constructible =
      "needs the half-spin module of Spin_10, not constructed";
  const std::vector<std::pair<std::string, std::string>> unitary{{"su", "SL_n"}, {"u", "GL_n"}, {"usp", "C* x Sp_n/2"}};
  // SU_2 x SU_2 = SO_4 does not preserve the complex structure of C^2 (x) C^2.
  auto n_range = [](const std::string& tag) {
    return tag == "su" ? at_least("n", 3) : at_least("n", 2, tag == "usp" ? 2 : 1);
  };
  for (const auto& [tag, group] : unitary) {
    b.add("17-" + tag, {n_range(tag)}, ref("17"), "K = " + group + " x SL_2, n = (C^n (x) C^2 + R) + sl_2", heis);
    b.add("18-" + tag, {n_range(tag)}, ref("18"), "K = " + group + " x GL_2, n = (C^n (x) C^2 + R) + (C^2 + R)",
          heis);
    for (const auto& [tag2, group2] : unitary) {
      const bool even = tag == "usp" || tag2 == "usp", special = tag == "su" || tag2 == "su";
      ParamRange n = at_least("n", special ? (even ? 4 : 3) : 2, even ? 2 : 1);
      b.add("19-" + tag + "-" + tag2, {n}, ref("19"),
            "K = " + group + " x SL_2 x " + group2 + ", n = (C^n (x) C^2 + R) + (C^2 (x) C^n + R)", heis);
    }
    b.add("20-" + tag, {n_range(tag)}, ref("20"),
          "K = " + group + " x SL_2 x GL_4, n = (C^n (x) C^2 + R) + (C^2 (x) C^4 + R) + R^6", heis);
  }
  b.add("21", {}, ref("21"), "K = GL_4 x GL_2, n = R^6 + (C^4 (x) C^2 + R) + sl_2", heis);
  b.add("22", {}, ref("22"), "K = GL_4 x GL_2 x GL_4, n = R^6 + (C^4 (x) C^2 + R) + (C^2 (x) C^4 + R) + R^6", heis);
  b.add("23", {}, ref("23"), "K = C* x C* x SL_4, n = (C^4 + R) + (C^4 + R) + R^6", heis);
  for (const std::string alt : {"su", "u-su", "su-so2", "u-su-so2"})
    b.add("24-" + alt, {}, ref("24"), "K = " + alt + ", n = (C^4 + R) + R^6 (x) C^2", "optional U_1 and SO_2 factors");
}

void add_table_a(std::vector<CatalogEntry>& out) {
  EntryBuilder b{out, TableId::TA, ExpectedVerdict::Stabilizer, Method::StabilizerDimension};
  const std::string ref = "Table A_n-1";
  const auto n2 = std::vector{at_least("n", 2)};
  b.add("1", n2, ref, "sl_n on C^n + (C^n)*; stabilizer sl_n-1, dim (n-1)^2 - 1");
  b.add("2", n2, ref, "sl_n on Lambda^2 + Lambda^2*; stabilizer sl_2^[n/2], dim 3[n/2]");
  b.add("3", n2, ref, "sl_n on S^2 + S^2*; listed stabilizer u_1^[n/2], dim [n/2]");
  b.add("4", n2, ref, "sl_n adjoint; stabilizer a Cartan subalgebra, dim n-1");
  b.add("5", {}, ref, "sl_4 on Lambda^2 C^4; stabilizer sp_2, dim 10");
  b.add("6", {}, ref, "sl_6 on 2 Lambda^3 C^6; stabilizer u_1^2, dim 2");
}

void add_named(std::vector<CatalogEntry>& out) {
  EntryBuilder b{out, TableId::Named, ExpectedVerdict::Commutative, Method::Criterion};
  b.add("h2_su2", {}, "smallest Heisenberg-type space", "(H_2 x| SU_2)/SU_2, K = L = SL_2 on C^2 + (C^2)* + C");
  b.add("c2h2_su2", {}, "simplest counterexample", "((C^2 x H_2) x| SU_2)/SU_2").expected =
      ExpectedVerdict::NonCommutative;
  b.add("r4_so4_u2", {}, "the space (R^2n x| SO_2n)/U_n at n = 2", "L = SO_4, K = GL_2, n = C^4");
  b.add("h4_su4_sp2", {}, "the space (H_2n x| SU_2n)/Sp_n at n = 2", "L = SL_4, K = Sp_2, n = Heisenberg on C^4");
  b.add("r6_su4_u3", {}, table_row("2b", "1b"), "L = SL_4, K = S(GL_3 x GL_1), n = Lambda^2 C^4");
  b.add("diag_so3", {}, "((R^n x| SO_n) x SO_n)/SO_n at n = 3", "L = so_3 + so_3, K diagonal, n = C^3");
  b.add("ex6_sp", {at_least("n", 1)}, "Sp_n with n = H^n + H_0",
        "L = Sp_n x Sp_1, K = Sp_n x U_1, n = C^2n (x) C^2 + sp_1");
  b.add("h2_u2_su2", {}, "((H_n x| U_n) x SU_n)/U_n at n = 2", "L = GL_2 x SL_2, K = GL_2, n = Heisenberg on C^2");
  EntryBuilder s{out, TableId::Named, ExpectedVerdict::Spherical, Method::SphericalityCheck};
  s.add("sl2_torus", {}, "spherical pair (sl_2, torus)", "g = sl_2, h = diagonal torus");
  s.add("sl2x2_diag", {}, "spherical pair (sl_2^2, diagonal)", "g = sl_2 + sl_2, h = diagonal sl_2");
  s.add("so7_g2", {}, "spherical pair (so_7, g_2)", "g = so_7, h = g_2 (split octonions)");
  s.add("sl2x4_diag", {}, "non-spherical pair (sl_2^4, diagonal)", "g = sl_2^4, h = diagonal sl_2",
        "dim b + dim h = 8 + 3 < 12 = dim g")
      .expected = ExpectedVerdict::NotSpherical;
}

std::vector<CatalogEntry> build_registry() {
  std::vector<CatalogEntry> out;
  add_table1(out);
  add_table2a(out);
  add_table2b(out);
  add_table3(out);
  add_table4(out);
  add_table_a(out);
  add_named(out);
  return out;
}

std::string params_text(const Params& params) {
  std::string out;
  for (const auto& [name, value] : params) out += (out.empty() ? "" : "&") + name + "=" + std::to_string(value);
  return out;
}

bool expects_commutative(ExpectedVerdict v) { return v == ExpectedVerdict::Commutative; }

std::string verdict_text(const CommutativityVerdict& v) {
  return v.status == CommutativityStatus::NonCommutative ? "non-commutative" : "commutative";
}

std::string witness_text(const CommutativityVerdict& v) {
  if (!v.witness) return {};
  return "{" + to_string(v.witness->a) + ", " + to_string(v.witness->b) + "} = " + to_string(v.witness->bracket);
}

void record_direct(CatalogRow& row, const CommutativityVerdict& v) {
  row.observed = verdict_text(v);
  row.pass = (v.status != CommutativityStatus::NonCommutative) == expects_commutative(row.expected);
  row.detail = witness_text(v);
}

}  // namespace

std::string to_string(TableId table) {
  switch (table) {
    case TableId::T1: return "T1";
    case TableId::T2a: return "T2a";
    case TableId::T2b: return "T2b";
    case TableId::T3: return "T3";
    case TableId::T4: return "T4";
    case TableId::TA: return "TA";
    case TableId::Named: return "named";
  }
  return "?";
}

std::optional<TableId> parse_table(const std::string& text) {
  for (TableId t : {TableId::T1, TableId::T2a, TableId::T2b, TableId::T3, TableId::T4, TableId::TA, TableId::Named})
    if (to_string(t) == text) return t;
  return std::nullopt;
}

std::string to_string(ExpectedVerdict verdict) {
  switch (verdict) {
    case ExpectedVerdict::Commutative: return "commutative";
    case ExpectedVerdict::NonCommutative: return "non-commutative";
    case ExpectedVerdict::Spherical: return "spherical";
    case ExpectedVerdict::NotSpherical: return "not spherical";
    case ExpectedVerdict::Factorization: return "factorization";
    case ExpectedVerdict::Stabilizer: return "stabilizer";
  }
  return "?";
}

std::string to_string(Method method) {
  switch (method) {
    case Method::Criterion: return "criterion";
    case Method::Direct: return "direct";
    case Method::Decomposition: return "decomposition";
    case Method::FactorizationCheck: return "factorization";
    case Method::SphericalityCheck: return "sphericality";
    case Method::StabilizerDimension: return "stabilizer";
  }
  return "?";
}

Params CatalogEntry::minimal_params() const {
  Params out;
  for (const ParamRange& p : params) out[p.name] = p.min;
  return out;
}

std::string CatalogEntry::base_id() const {
  return table == TableId::Named ? "named/" + row : to_string(table) + "/row" + row;
}

std::string CatalogEntry::id(const Params& values) const {
  return values.empty() ? base_id() : base_id() + "?" + params_text(values);
}

void CatalogEntry::check_params(const Params& values) const {
  for (const auto& [name, value] : values) {
    auto it = std::find_if(params.begin(), params.end(), [&](const ParamRange& p) { return p.name == name; });
    if (it == params.end()) throw GelfandError(ErrorKind::RowOutOfRange, base_id() + " has no parameter " + name);
    if (value < it->min || (it->max && value > *it->max) || (value - it->min) % it->step != 0)
      throw GelfandError(ErrorKind::RowOutOfRange, base_id() + ": " + name + " = " + std::to_string(value) +
                                                       " is outside the declared range");
  }
  for (const ParamRange& p : params)
    if (!values.count(p.name)) throw GelfandError(ErrorKind::RowOutOfRange, base_id() + ": missing " + p.name);
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> registry = build_registry();
  return registry;
}

EntryRef find_entry(const std::string& id) {
  const auto question = id.find('?');
  std::string base = id.substr(0, question);
  if (base.find('/') == std::string::npos) base = "named/" + base;
  const CatalogEntry* entry = nullptr;
  for (const CatalogEntry& e : catalog())
    if (e.base_id() == base) entry = &e;
  if (!entry) throw GelfandError(ErrorKind::UnknownEntry, "no catalog entry " + id);
  Params params = entry->minimal_params();
  if (question != std::string::npos) {
    std::istringstream in(id.substr(question + 1));
    std::string item;
    while (std::getline(in, item, '&')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw GelfandError(ErrorKind::RowOutOfRange, "malformed parameter " + item);
      try {
        std::size_t used = 0;
        const std::string text = item.substr(eq + 1);
        const unsigned long value = std::stoul(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        params[item.substr(0, eq)] = value;
      } catch (const std::logic_error&) {
        throw GelfandError(ErrorKind::RowOutOfRange, "malformed parameter " + item);
      }
    }
  }
  entry->check_params(params);
  return {entry, params};
}

CatalogInstance build_instance(const CatalogEntry& entry, const Params& params) {
  if (entry.not_constructible) throw GelfandError(ErrorKind::InvalidInput, entry.base_id() + ": " + *entry.not_constructible);
  entry.check_params(params);
  const std::string& row = entry.row;
  switch (entry.table) {
    case TableId::T1:
      return std::stoul(row) <= 7 ? catalog_detail::table1(row, params) : catalog_detail::table1_fixed(row);
    case TableId::T2a:
      return catalog_detail::table2a(row, params, kDefaultSamples, 0);
    case TableId::T2b:
      return catalog_detail::table2b(row, params);
    case TableId::T3:
      return catalog_detail::table3(row, params);
    case TableId::T4:
      return catalog_detail::table4(row, params);
    case TableId::TA:
      return catalog_detail::table_a(row, params.count("n") ? params : Params{{"n", row == "5" ? 4u : 6u}});
    case TableId::Named:
      if (entry.method == Method::SphericalityCheck) return named_pair(row);
      return named(row, params);
  }
  throw GelfandError(ErrorKind::UnknownEntry, entry.base_id());
}

namespace {

SpaceSpec space_of(TableId table, const std::string& row, const Params& params) {
  for (const CatalogEntry& e : catalog())
    if (e.table == table && e.row == row) {
      CatalogInstance inst = build_instance(e, params);
      return std::get<SpaceSpec>(std::move(inst));
    }
  throw GelfandError(ErrorKind::RowOutOfRange, "unknown " + to_string(table) + " row " + row);
}

Params with_n(std::size_t n) { return n == 0 ? Params{} : Params{{"n", n}}; }

}  // namespace

SpaceSpec table2b_space(const std::string& row, std::size_t n) { return space_of(TableId::T2b, row, with_n(n)); }
SpaceSpec table3_space(const std::string& row, std::size_t n) { return space_of(TableId::T3, row, with_n(n)); }
SpaceSpec table4_space(const std::string& row, const Params& params) { return space_of(TableId::T4, row, params); }

SpaceSpec named_fixture(const std::string& name) {
  for (const CatalogEntry& e : catalog())
    if (e.table == TableId::Named && e.row == name && e.method != Method::SphericalityCheck)
      return named(name, e.minimal_params());
  throw GelfandError(ErrorKind::UnknownName, "no named space " + name);
}

std::size_t CatalogReport::passed() const {
  return std::count_if(rows.begin(), rows.end(), [](const CatalogRow& r) { return r.pass; });
}
std::size_t CatalogReport::failed() const {
  return std::count_if(rows.begin(), rows.end(), [](const CatalogRow& r) { return !r.pass && !r.skipped; });
}
std::size_t CatalogReport::skipped() const {
  return std::count_if(rows.begin(), rows.end(), [](const CatalogRow& r) { return r.skipped; });
}

std::vector<Params> parameter_sets(const CatalogEntry& entry, std::optional<std::size_t> max_rank) {
  std::vector<Params> out{{}};
  for (const ParamRange& p : entry.params) {
    std::size_t top = std::max(p.min, max_rank.value_or(p.min));
    if (p.max) top = std::min(top, *p.max);
    std::vector<Params> next;
    for (const Params& partial : out)
      for (std::size_t v = p.min; v <= top; v += p.step) {
        Params extended = partial;
        extended[p.name] = v;
        next.push_back(std::move(extended));
      }
    out = std::move(next);
  }
  return out;
}

CatalogRow verify_entry(const CatalogEntry& entry, const Params& params, std::size_t d_max, std::size_t samples,
                        std::uint64_t seed) {
  CatalogRow row{entry.id(params), entry.expected, entry.method, {}, false, false, 0, {}};
  if (entry.not_constructible) {
    row.skipped = true;
    row.observed = "not constructible";
    row.detail = *entry.not_constructible;
    return row;
  }
  row.degree = std::max(entry.min_degree, entry.degree_cap ? std::min(d_max, entry.degree_cap) : d_max);
  try {
    CatalogInstance inst = entry.table == TableId::T2a
                               ? CatalogInstance(catalog_detail::table2a(entry.row, params, samples, seed))
                               : build_instance(entry, params);
    switch (entry.method) {
      case Method::Criterion: {
        CriterionReport r = run_criterion(std::get<SpaceSpec>(inst), row.degree, samples, seed);
        if (r.direct) record_direct(row, *r.direct);
        row.observed += r.conditions_hold() ? ", conditions hold" : ", conditions fail";
        row.pass = row.pass && r.agreement;
        if (!r.agreement) row.detail += (row.detail.empty() ? "" : "; ") + std::string("criterion disagrees");
        for (const std::string& e : r.errors) row.detail += "; " + e;
        break;
      }
      case Method::Direct:
        record_direct(row, check_commutative_direct(std::get<SpaceSpec>(inst), row.degree));
        break;
      case Method::Decomposition: {
        HeisenbergDecomposition dec = heisenberg_type_decompose(std::get<SpaceSpec>(inst), row.degree, samples, seed);
        row.observed = dec.commutative() ? "commutative" : "non-commutative";
        row.pass = dec.commutative() == expects_commutative(entry.expected);
        std::string parts;
        for (const HeisenbergComponent& c : dec.components) {
          parts += (parts.empty() ? "" : " ") + std::to_string(c.n_dim) + "/" + std::to_string(c.k_dim);
          if (c.verdict.witness) row.detail += witness_text(c.verdict) + "; ";
        }
        row.detail += "components (dim n_i/dim k_i): " + parts;
        if (!dec.violations.empty()) row.detail += "; components bracket each other";
        break;
      }
      case Method::FactorizationCheck: {
        const FactorizationCase& fc = std::get<FactorizationCase>(inst);
        Factorization f = factorization_check(*fc.g, fc.g1, fc.g2);
        row.observed = (f.holds ? "factorization, intersection " : "no factorization, intersection ") +
                       std::to_string(f.intersection_dim);
        row.pass = f.holds && (!fc.expected_intersection || *fc.expected_intersection == f.intersection_dim);
        row.detail = "dim g = " + std::to_string(fc.g->dim()) + ", dim g1 = " + std::to_string(fc.g1.dim()) +
                     ", dim g2 = " + std::to_string(fc.g2.dim());
        if (fc.expected_intersection) row.detail += ", listed dim u = " + std::to_string(*fc.expected_intersection);
        break;
      }
      case Method::SphericalityCheck: {
        const SphericalityCase& sc = std::get<SphericalityCase>(inst);
        SphericalityVerdict v = sphericality_check(*sc.g, sc.h, std::max(samples, kSphericalitySamples), seed);
        row.observed = v.spherical ? "spherical" : "not spherical";
        row.pass = v.spherical == (entry.expected == ExpectedVerdict::Spherical);
        row.detail = "dim(b + Ad(u) h) = " + std::to_string(v.achieved_dim) + " of " + std::to_string(v.target_dim);
        if (v.dimension_obstruction) row.detail += "; dimension obstruction: dim b + dim h < dim g";
        break;
      }
      case Method::StabilizerDimension: {
        const StabilizerCase& st = std::get<StabilizerCase>(inst);
        const std::size_t dim = generic_stabilizer(st.act, samples, seed).stabilizer.dim();
        row.observed = "stabilizer dim " + std::to_string(dim);
        row.pass = dim == st.expected_dim;
        row.detail = "listed dim " + std::to_string(st.expected_dim);
        break;
      }
    }
  } catch (const GelfandError& e) {
    row.observed = "error";
    row.pass = false;
    row.detail = e.what();
  }
  return row;
}

CatalogReport verify_catalog(const CatalogFilter& filter, std::size_t d_max, std::size_t samples, std::uint64_t seed) {
  CatalogReport report;
  for (const CatalogEntry& e : catalog()) {
    const std::string base = e.base_id();
    const bool match = filter.pattern.empty() || filter.pattern == to_string(e.table) || filter.pattern == base ||
                       base.rfind(filter.pattern + "-", 0) == 0;
    if (!match) continue;
    for (const Params& p : parameter_sets(e, filter.max_rank))
      report.rows.push_back(verify_entry(e, p, d_max, samples, seed));
  }
  return report;
}

std::string catalog_document() {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const CatalogEntry& e : catalog()) {
    nlohmann::ordered_json params = nlohmann::ordered_json::array();
    for (const ParamRange& p : e.params) {
      nlohmann::ordered_json range{{"name", p.name}, {"min", p.min}, {"step", p.step}};
      if (p.max) range["max"] = *p.max;
      params.push_back(range);
    }
    nlohmann::ordered_json item{{"id", e.base_id()},
                                {"table", to_string(e.table)},
                                {"row", e.row},
                                {"params", params},
                                {"expected", to_string(e.expected)},
                                {"method", to_string(e.method)},
                                {"citation", e.citation},
                                {"construction", e.construction}};
    if (!e.notes.empty()) item["notes"] = e.notes;
    if (e.not_constructible) item["not_constructible"] = *e.not_constructible;
    if (e.degree_cap) item["degree_cap"] = e.degree_cap;
    if (e.min_degree) item["min_degree"] = e.min_degree;
    entries.push_back(item);
  }
  nlohmann::ordered_json doc{{"format", "gelfand-catalog"}, {"version", 1}, {"entries", entries}};
  return doc.dump(2) + "\n";
}

}  // namespace gelfand
