#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "vcg/integer.hpp"

namespace vcg {

class DenseMatrix;

// Sparse integer matrix, row-major. Each row keeps its nonzero entries sorted by column.
class IntMatrix {
 public:
  struct Entry {
    std::size_t col;
    Integer value;
  };

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_dense(const DenseMatrix& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;

  Integer get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Integer& v);
  void add(std::size_t r, std::size_t c, const Integer& v);
  const std::vector<Entry>& row(std::size_t r) const { return data_[r]; }
  // Replace row r; entries must be sorted by column with nonzero values.
  void set_row(std::size_t r, std::vector<Entry> entries);

  DenseMatrix dense() const;
  IntMatrix transpose() const;
  std::vector<Integer> column(std::size_t c) const;
  std::vector<Integer> apply(const std::vector<Integer>& x) const;
  bool is_zero() const { return nnz() == 0; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::vector<Entry>> data_;
};

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  // row_i += f * row_j
  void add_row_multiple(std::size_t i, std::size_t j, const Integer& f);
  void add_col_multiple(std::size_t i, std::size_t j, const Integer& f);
  void negate_row(std::size_t i);
  void negate_col(std::size_t i);

  std::vector<Integer> column(std::size_t c) const;
  DenseMatrix columns(std::size_t from, std::size_t to) const;
  DenseMatrix rows_range(std::size_t from, std::size_t to) const;
  std::vector<Integer> apply(const std::vector<Integer>& x) const;
  DenseMatrix transpose() const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> a_;
};

// Determinant by fraction-free (Bareiss) elimination; square input.
Integer determinant(const DenseMatrix& a);

}  // namespace vcg
