#include "gelfand/sparse_linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gelfand {

namespace {

void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& e : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.val.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().val < 0) g = -g;
  if (g != 1)
    for (auto& e : row) mpz_divexact(e.val.get_mpz_t(), e.val.get_mpz_t(), g.get_mpz_t());
}

// a * x - b * y, dropping cancelled entries.
SparseRow combine(const Integer& a, const SparseRow& x, const Integer& b,
                  const SparseRow& y) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  Integer t;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].col < y[j].col)) {
      out.push_back({x[i].col, a * x[i].val});
      ++i;
    } else if (i == x.size() || y[j].col < x[i].col) {
      out.push_back({y[j].col, -b * y[j].val});
      ++j;
    } else {
      t = a * x[i].val - b * y[j].val;
      if (t != 0) out.push_back({x[i].col, t});
      ++i;
      ++j;
    }
  }
  return out;
}

const Integer* find_entry(const SparseRow& row, std::uint32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const SparseEntry& e, std::uint32_t c) { return e.col < c; });
  if (it == row.end() || it->col != col) return nullptr;
  return &it->val;
}

}  // namespace

SparseRow to_integer_row(const RationalRow& row) {
  Integer den = 1;
  for (const auto& [c, q] : row)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  SparseRow out;
  out.reserve(row.size());
  for (const auto& [c, q] : row) {
    if (q == 0) continue;
    out.push_back({c, q.get_num() * (den / q.get_den())});
  }
  make_primitive(out);
  return out;
}

RationalRow to_rational_row(const Vector& dense) {
  RationalRow row;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) row.emplace_back(static_cast<std::uint32_t>(i), dense[i]);
  return row;
}

Echelon::Echelon(std::size_t cols) : cols_(cols), pivot_of_col_(cols, -1) {}

SparseRow Echelon::reduce(SparseRow row) const {
  while (!row.empty()) {
    std::int64_t p = pivot_of_col_[row.front().col];
    if (p < 0) break;
    const SparseRow& piv = rows_[static_cast<std::size_t>(p)];
    Integer g;
    mpz_gcd(g.get_mpz_t(), piv.front().val.get_mpz_t(), row.front().val.get_mpz_t());
    Integer a = piv.front().val / g;
    Integer b = row.front().val / g;
    row = combine(a, row, b, piv);
    make_primitive(row);
  }
  return row;
}

bool Echelon::insert(SparseRow row) {
  for (const auto& e : row)
    if (e.col >= cols_) throw std::out_of_range("Echelon row column out of range");
  row = reduce(std::move(row));
  if (row.empty()) return false;
  pivot_of_col_[row.front().col] = static_cast<std::int64_t>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

bool Echelon::insert(const RationalRow& row) { return insert(to_integer_row(row)); }

bool Echelon::insert(const Vector& dense) { return insert(to_rational_row(dense)); }

bool Echelon::contains(const Vector& dense) const {
  return reduce(to_integer_row(to_rational_row(dense))).empty();
}

std::vector<std::size_t> Echelon::pivot_columns() const {
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (pivot_of_col_[c] >= 0) cols.push_back(c);
  return cols;
}

std::vector<SparseRow> Echelon::fully_reduced() const {
  // Process pivots from the right so every row used for elimination is
  // already free of non-leading pivot columns.
  std::vector<SparseRow> out(rows_.size());
  std::vector<std::size_t> order;
  for (std::size_t c = cols_; c-- > 0;)
    if (pivot_of_col_[c] >= 0) order.push_back(static_cast<std::size_t>(pivot_of_col_[c]));
  for (std::size_t idx : order) {
    SparseRow row = rows_[idx];
    for (std::size_t k = 1; k < row.size();) {
      std::int64_t p = pivot_of_col_[row[k].col];
      if (p < 0) {
        ++k;
        continue;
      }
      const SparseRow& piv = out[static_cast<std::size_t>(p)];
      Integer g;
      mpz_gcd(g.get_mpz_t(), piv.front().val.get_mpz_t(), row[k].val.get_mpz_t());
      Integer a = piv.front().val / g;
      Integer b = row[k].val / g;
      std::uint32_t col = row[k].col;
      row = combine(a, row, b, piv);
      make_primitive(row);
      // Entries before `col` are unchanged; resume scanning right after it.
      k = 1;
      while (k < row.size() && row[k].col <= col) ++k;
    }
    out[idx] = std::move(row);
  }
  return out;
}

std::vector<Vector> Echelon::kernel() const {
  std::vector<std::size_t> free_cols;
  std::vector<std::int64_t> free_index(cols_, -1);
  for (std::size_t c = 0; c < cols_; ++c)
    if (pivot_of_col_[c] < 0) {
      free_index[c] = static_cast<std::int64_t>(free_cols.size());
      free_cols.push_back(c);
    }
  std::vector<Vector> basis(free_cols.size(), Vector(cols_));
  for (std::size_t f = 0; f < free_cols.size(); ++f) basis[f][free_cols[f]] = 1;
  for (const SparseRow& row : fully_reduced()) {
    const Integer& lead = row.front().val;
    std::uint32_t lead_col = row.front().col;
    for (std::size_t k = 1; k < row.size(); ++k) {
      std::int64_t f = free_index[row[k].col];
      Rational v(-row[k].val, lead);
      v.canonicalize();
      basis[static_cast<std::size_t>(f)][lead_col] = v;
    }
  }
  return basis;
}

bool Echelon::particular_solution(Vector& x) const {
  if (cols_ == 0) return false;
  std::uint32_t last = static_cast<std::uint32_t>(cols_ - 1);
  if (pivot_of_col_[last] >= 0) return false;
  x.assign(cols_ - 1, Rational(0));
  for (const SparseRow& row : fully_reduced()) {
    const Integer* b = find_entry(row, last);
    if (b == nullptr) continue;
    Rational v(*b, row.front().val);
    v.canonicalize();
    x[row.front().col] = v;
  }
  return true;
}

}  // namespace gelfand
