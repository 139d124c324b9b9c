#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vcg/int_matrix.hpp"

namespace vcg {

// Right-looking sparse elimination restricted to unit pivots, over Z (modulus 0) or Z/m.
// Each pivot is a unimodular Schur step, so the invariant factors of the input are
// 1 (once per pivot) followed by those of the remainder.
class SparseEliminator {
 public:
  explicit SparseEliminator(std::size_t cols, Integer modulus = 0);

  // Entries in any order; repeated columns are summed. Returns the row index.
  std::size_t add_row(std::vector<IntMatrix::Entry> entries);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool row_active(std::size_t r) const { return row_active_[r] != 0; }
  bool col_active(std::size_t c) const { return col_active_[c] != 0; }
  const std::vector<IntMatrix::Entry>& row(std::size_t r) const { return rows_[r]; }
  Integer entry(std::size_t r, std::size_t c) const;
  bool is_unit(const Integer& v) const;

  // Pivot on (r, c); throws std::domain_error if the entry is not a unit.
  void pivot(std::size_t r, std::size_t c);
  // Greedy unit pivoting on what remains, shortest columns first. Returns pivots performed.
  std::size_t eliminate_units();
  std::size_t pivots() const { return pivots_; }

  // Active rows and columns that still carry entries, as a compact matrix.
  struct Remainder {
    IntMatrix matrix;
    std::vector<std::size_t> row_ids, col_ids;
  };
  Remainder remainder() const;

 private:
  void normalize(Integer& v) const;

  std::size_t cols_;
  Integer modulus_;
  std::vector<std::vector<IntMatrix::Entry>> rows_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<char> row_active_, col_active_;
  std::size_t pivots_ = 0;
};

struct UnitEliminationResult {
  std::size_t unit_pivots = 0;
  IntMatrix remainder;
};

UnitEliminationResult eliminate_unit_pivots(const IntMatrix& a);

}  // namespace vcg
