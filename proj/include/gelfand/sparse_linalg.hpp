#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "gelfand/rational.hpp"

namespace gelfand {

struct SparseEntry {
  std::uint32_t col;
  Integer val;
};

/// Integer row sorted by column with no zero entries.
using SparseRow = std::vector<SparseEntry>;

/// Rational row sorted by column with no zero entries.
using RationalRow = std::vector<std::pair<std::uint32_t, Rational>>;

/// Clears denominators and divides out the content; leading entry positive.
SparseRow to_integer_row(const RationalRow& row);
RationalRow to_rational_row(const Vector& dense);

/// Incremental fraction-free row echelon form over the integers.
///
/// Rows are kept primitive (content 1, positive leading entry) and the
/// pivot of a row is its smallest column index.
class Echelon {
 public:
  explicit Echelon(std::size_t cols);

  /// Reduces `row` by the stored pivots and stores the remainder.
  /// Returns true iff the rank grew.
  bool insert(SparseRow row);
  bool insert(const RationalRow& row);
  bool insert(const Vector& dense);

  /// True iff `dense` lies in the row span.
  bool contains(const Vector& dense) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t> pivot_columns() const;

  /// Basis of {x : row . x = 0 for every stored row}, one vector per
  /// free column in increasing column order, normalized to x[free] = 1.
  std::vector<Vector> kernel() const;

  /// Some x with M x = b where M holds rows over cols-1 unknowns and the
  /// last column stores b; empty when inconsistent.
  bool particular_solution(Vector& x) const;

 private:
  SparseRow reduce(SparseRow row) const;
  std::vector<SparseRow> fully_reduced() const;

  std::size_t cols_;
  std::vector<SparseRow> rows_;
  std::vector<std::int64_t> pivot_of_col_;
};

}  // namespace gelfand
