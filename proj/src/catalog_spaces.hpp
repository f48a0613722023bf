#pragma once

#include <cstdint>
#include <string>

#include "gelfand/catalog.hpp"

namespace gelfand::catalog_detail {

SpaceSpec table2b(const std::string& row, const Params& params);
SpaceSpec table3(const std::string& row, const Params& params);
SpaceSpec table4(const std::string& row, const Params& params);
/// Rows of Table 1 with a rank parameter (g = su_2n, so_2n+4, so_4n).
FactorizationCase table1(const std::string& row, const Params& params);
/// Fixed-rank rows 8 to 12: so_16, so_8 and the three so_7 lines.
FactorizationCase table1_fixed(const std::string& row);
/// g1 is the subgroup of the table, g2 a generic stabilizer of the module.
FactorizationCase table2a(const std::string& row, const Params& params, std::size_t samples, std::uint64_t seed);
StabilizerCase table_a(const std::string& row, const Params& params);
SpaceSpec named(const std::string& name, const Params& params);
SphericalityCase named_pair(const std::string& name);

}  // namespace gelfand::catalog_detail
