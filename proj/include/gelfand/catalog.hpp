#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gelfand/criterion.hpp"
#include "gelfand/space.hpp"
#include "gelfand/stabilizer.hpp"

namespace gelfand {

enum class TableId { T1, T2a, T2b, T3, T4, TA, Named };

std::string to_string(TableId table);
std::optional<TableId> parse_table(const std::string& text);

enum class ExpectedVerdict { Commutative, NonCommutative, Spherical, NotSpherical, Factorization, Stabilizer };

std::string to_string(ExpectedVerdict verdict);

/// How an entry is verified.
enum class Method {
  /// run_criterion: the three conditions, the direct check and their agreement.
  Criterion,
  /// check_commutative_direct (spaces with k = l).
  Direct,
  /// heisenberg_type_decompose: one direct check per component.
  Decomposition,
  FactorizationCheck,
  SphericalityCheck,
  StabilizerDimension,
};

std::string to_string(Method method);

struct ParamRange {
  std::string name;
  std::size_t min = 0;
  std::optional<std::size_t> max;
  /// Admissible values are min, min + step, ...
  std::size_t step = 1;
};

using Params = std::map<std::string, std::size_t>;

struct CatalogEntry {
  TableId table;
  /// Row label as printed in the table, with a suffix for enumerated
  /// alternatives ("10-u1").
  std::string row;
  std::vector<ParamRange> params;
  ExpectedVerdict expected;
  Method method;
  std::string citation;
  /// Groups and modules as built (complexified).
  std::string construction;
  std::string notes;
  /// Set for rows encoded as data only.
  std::optional<std::string> not_constructible;
  /// Upper bound on the degree cutoff for this row; 0 means none.
  std::size_t degree_cap = 0;
  /// Cutoff used even when a lower one is requested: the degree at which a
  /// known witness appears.
  std::size_t min_degree = 0;

  Params minimal_params() const;
  /// "T3/row6?n=2".
  std::string id(const Params& params) const;
  std::string base_id() const;
  /// Throws RowOutOfRange for values outside the declared ranges.
  void check_params(const Params& params) const;
};

/// Every entry, in table order.
const std::vector<CatalogEntry>& catalog();

struct EntryRef {
  const CatalogEntry* entry;
  Params params;
};

/// Resolves "T3/row6?n=2" (parameters default to their minimum). Throws
/// UnknownEntry or RowOutOfRange.
EntryRef find_entry(const std::string& id);

struct FactorizationCase {
  AlgebraPtr g;
  SubalgebraEmbedding g1, g2;
  /// The listed intersection dimension, when the table gives one.
  std::optional<std::size_t> expected_intersection;
};

struct SphericalityCase {
  AlgebraPtr g;
  SubalgebraEmbedding h;
};

struct StabilizerCase {
  ModuleAction act;
  std::size_t expected_dim = 0;
};

using CatalogInstance = std::variant<SpaceSpec, FactorizationCase, SphericalityCase, StabilizerCase>;

/// Builds the entry at the given parameters. Throws RowOutOfRange, and
/// InvalidInput for rows flagged not_constructible.
CatalogInstance build_instance(const CatalogEntry& entry, const Params& params);

SpaceSpec table2b_space(const std::string& row, std::size_t n = 0);
SpaceSpec table3_space(const std::string& row, std::size_t n = 0);
SpaceSpec table4_space(const std::string& row, const Params& params = {});
/// Named spaces; throws UnknownName.
SpaceSpec named_fixture(const std::string& name);

struct CatalogRow {
  std::string id;
  ExpectedVerdict expected;
  Method method;
  /// "commutative", "spherical", "intersection 3", ...
  std::string observed;
  bool pass = false;
  bool skipped = false;
  std::size_t degree = 0;
  /// Witness or failure detail.
  std::string detail;
};

struct CatalogReport {
  std::vector<CatalogRow> rows;

  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t skipped() const;
  bool all_pass() const { return failed() == 0; }
};

struct CatalogFilter {
  /// Table name ("T3"), entry id prefix ("T4/row10") or empty for all.
  std::string pattern;
  /// Also run parameter values up to this rank; the minimum otherwise.
  std::optional<std::size_t> max_rank;
};

/// Parameter sets of an entry selected by max_rank (the minimum when unset).
std::vector<Params> parameter_sets(const CatalogEntry& entry, std::optional<std::size_t> max_rank);

CatalogRow verify_entry(const CatalogEntry& entry, const Params& params, std::size_t d_max, std::size_t samples,
                        std::uint64_t seed);

/// Verifies every matching entry; flagged rows are reported as skipped.
CatalogReport verify_catalog(const CatalogFilter& filter, std::size_t d_max, std::size_t samples, std::uint64_t seed);

/// The registry as a JSON document; data/catalog.json holds a copy.
std::string catalog_document();

}  // namespace gelfand
