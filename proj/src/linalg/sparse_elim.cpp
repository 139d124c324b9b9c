#include "vcg/sparse_elim.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace vcg {

SparseEliminator::SparseEliminator(std::size_t cols, Integer modulus)
    : cols_(cols), modulus_(std::move(modulus)), col_rows_(cols), col_active_(cols, 1) {
  if (modulus_ < 0) throw std::invalid_argument("SparseEliminator: negative modulus");
}

void SparseEliminator::normalize(Integer& v) const {
  if (modulus_ != 0) mpz_mod(v.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
}

bool SparseEliminator::is_unit(const Integer& v) const {
  if (modulus_ == 0) return v == 1 || v == -1;
  return gcd(v, modulus_) == 1 && modulus_ != 1;
}

std::size_t SparseEliminator::add_row(std::vector<IntMatrix::Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const IntMatrix::Entry& x, const IntMatrix::Entry& y) { return x.col < y.col; });
  std::vector<IntMatrix::Entry> row;
  row.reserve(entries.size());
  for (auto& e : entries) {
    if (e.col >= cols_) throw std::out_of_range("SparseEliminator::add_row: column out of range");
    if (!row.empty() && row.back().col == e.col)
      row.back().value += e.value;
    else
      row.push_back(std::move(e));
  }
  std::size_t w = 0;
  for (auto& e : row) {
    normalize(e.value);
    if (e.value != 0) row[w++] = std::move(e);
  }
  row.resize(w);
  std::size_t r = rows_.size();
  for (const auto& e : row) col_rows_[e.col].push_back(static_cast<std::uint32_t>(r));
  rows_.push_back(std::move(row));
  row_active_.push_back(1);
  return r;
}

Integer SparseEliminator::entry(std::size_t r, std::size_t c) const {
  const auto& row = rows_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const IntMatrix::Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) return it->value;
  return 0;
}

void SparseEliminator::pivot(std::size_t r, std::size_t c) {
  if (!row_active_[r] || !col_active_[c]) throw std::logic_error("SparseEliminator::pivot: inactive row or column");
  Integer u = entry(r, c);
  if (!is_unit(u)) throw std::domain_error("SparseEliminator::pivot: entry is not a unit");
  Integer inv;
  if (modulus_ == 0)
    inv = u;
  else
    mpz_invert(inv.get_mpz_t(), u.get_mpz_t(), modulus_.get_mpz_t());
  const auto& prow = rows_[r];
  std::vector<std::uint32_t> targets;
  targets.swap(col_rows_[c]);
  std::vector<IntMatrix::Entry> merged;
  for (std::uint32_t i : targets) {
    if (i == r || !row_active_[i]) continue;
    Integer a = entry(i, c);
    if (a == 0) continue;
    Integer f = a * inv;
    normalize(f);
    const auto& irow = rows_[i];
    merged.clear();
    merged.reserve(irow.size() + prow.size());
    std::size_t x = 0, y = 0;
    while (x < irow.size() || y < prow.size()) {
      if (y == prow.size() || (x < irow.size() && irow[x].col < prow[y].col)) {
        merged.push_back(irow[x++]);
      } else if (x == irow.size() || prow[y].col < irow[x].col) {
        Integer v = -f * prow[y].value;
        normalize(v);
        if (v != 0) {
          if (col_active_[prow[y].col]) col_rows_[prow[y].col].push_back(i);
          merged.push_back({prow[y].col, std::move(v)});
        }
        ++y;
      } else {
        Integer v = irow[x].value;
        mpz_submul(v.get_mpz_t(), f.get_mpz_t(), prow[y].value.get_mpz_t());
        normalize(v);
        if (v != 0) merged.push_back({irow[x].col, std::move(v)});
        ++x;
        ++y;
      }
    }
    rows_[i].swap(merged);
  }
  row_active_[r] = 0;
  col_active_[c] = 0;
  ++pivots_;
}

std::size_t SparseEliminator::eliminate_units() {
  std::size_t before = pivots_;
  for (;;) {
    std::vector<std::size_t> order;
    std::vector<std::size_t> count(cols_, 0);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!col_active_[c]) continue;
      auto& list = col_rows_[c];
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      std::size_t w = 0;
      for (std::uint32_t i : list)
        if (row_active_[i] && entry(i, c) != 0) list[w++] = i;
      list.resize(w);
      if (w) {
        count[c] = w;
        order.push_back(c);
      }
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return count[x] < count[y]; });
    bool progress = false;
    for (std::size_t c : order) {
      if (!col_active_[c]) continue;
      std::size_t best = rows_.size(), best_len = 0;
      for (std::uint32_t i : col_rows_[c]) {
        if (!row_active_[i]) continue;
        Integer v = entry(i, c);
        if (v == 0 || !is_unit(v)) continue;
        if (best == rows_.size() || rows_[i].size() < best_len) {
          best = i;
          best_len = rows_[i].size();
        }
      }
      if (best == rows_.size()) continue;
      pivot(best, c);
      progress = true;
    }
    if (!progress) break;
  }
  return pivots_ - before;
}

SparseEliminator::Remainder SparseEliminator::remainder() const {
  Remainder rem;
  std::vector<std::size_t> col_index(cols_, SIZE_MAX);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (!row_active_[r]) continue;
    bool any = false;
    for (const auto& e : rows_[r])
      if (col_active_[e.col]) {
        any = true;
        if (col_index[e.col] == SIZE_MAX) col_index[e.col] = 0;
      }
    if (any) rem.row_ids.push_back(r);
  }
  for (std::size_t c = 0; c < cols_; ++c)
    if (col_index[c] != SIZE_MAX) {
      col_index[c] = rem.col_ids.size();
      rem.col_ids.push_back(c);
    }
  rem.matrix = IntMatrix(rem.row_ids.size(), rem.col_ids.size());
  for (std::size_t k = 0; k < rem.row_ids.size(); ++k) {
    std::vector<IntMatrix::Entry> entries;
    for (const auto& e : rows_[rem.row_ids[k]])
      if (col_active_[e.col]) entries.push_back({col_index[e.col], e.value});
    std::sort(entries.begin(), entries.end(),
              [](const IntMatrix::Entry& x, const IntMatrix::Entry& y) { return x.col < y.col; });
    rem.matrix.set_row(k, std::move(entries));
  }
  return rem;
}

UnitEliminationResult eliminate_unit_pivots(const IntMatrix& a) {
  SparseEliminator el(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) el.add_row(a.row(r));
  el.eliminate_units();
  UnitEliminationResult out;
  out.unit_pivots = el.pivots();
  out.remainder = el.remainder().matrix;
  return out;
}

}  // namespace vcg
