#include "vcg/int_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vcg {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, Integer(1)});
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size(), c = r ? rows.begin()->size() : 0;
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
    std::size_t j = 0;
    for (long v : row) {
      if (v != 0) m.data_[i].push_back({j, Integer(v)});
      ++j;
    }
    ++i;
  }
  return m;
}

IntMatrix IntMatrix::from_dense(const DenseMatrix& d) {
  IntMatrix m(d.rows(), d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (d(i, j) != 0) m.data_[i].push_back({j, d(i, j)});
  return m;
}

std::size_t IntMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Integer IntMatrix::get(std::size_t r, std::size_t c) const {
  const auto& row = data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) return it->value;
  return 0;
}

void IntMatrix::set(std::size_t r, std::size_t c, const Integer& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix::set");
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) {
    if (v == 0)
      row.erase(it);
    else
      it->value = v;
  } else if (v != 0) {
    row.insert(it, {c, v});
  }
}

void IntMatrix::add(std::size_t r, std::size_t c, const Integer& v) {
  if (v == 0) return;
  set(r, c, get(r, c) + v);
}

void IntMatrix::set_row(std::size_t r, std::vector<Entry> entries) {
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k].col >= cols_ || entries[k].value == 0 || (k && entries[k].col <= entries[k - 1].col))
      throw std::invalid_argument("IntMatrix::set_row: entries must be sorted, nonzero, in range");
  }
  data_.at(r) = std::move(entries);
}

DenseMatrix IntMatrix::dense() const {
  DenseMatrix d(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& e : data_[i]) d(i, e.col) = e.value;
  return d;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& e : data_[i]) t.data_[e.col].push_back({i, e.value});
  return t;
}

std::vector<Integer> IntMatrix::column(std::size_t c) const {
  std::vector<Integer> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = get(i, c);
  return v;
}

std::vector<Integer> IntMatrix::apply(const std::vector<Integer>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("IntMatrix::apply: size mismatch");
  std::vector<Integer> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& e : data_[i]) y[i] += e.value * x[e.col];
  return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix product: shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  std::vector<Integer> acc(b.cols_);
  std::vector<char> touched(b.cols_, 0);
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    cols.clear();
    for (const auto& ea : a.data_[i])
      for (const auto& eb : b.data_[ea.col]) {
        if (!touched[eb.col]) {
          touched[eb.col] = 1;
          cols.push_back(eb.col);
        }
        acc[eb.col] += ea.value * eb.value;
      }
    std::sort(cols.begin(), cols.end());
    for (std::size_t j : cols) {
      if (acc[j] != 0) c.data_[i].push_back({j, acc[j]});
      acc[j] = 0;
      touched[j] = 0;
    }
  }
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    if (a.data_[i].size() != b.data_[i].size()) return false;
    for (std::size_t k = 0; k < a.data_[i].size(); ++k)
      if (a.data_[i][k].col != b.data_[i][k].col || a.data_[i][k].value != b.data_[i][k].value) return false;
  }
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << get(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void DenseMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void DenseMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void DenseMatrix::add_row_multiple(std::size_t i, std::size_t j, const Integer& f) {
  if (f == 0) return;
  Integer* ri = &a_[i * cols_];
  const Integer* rj = &a_[j * cols_];
  for (std::size_t c = 0; c < cols_; ++c)
    if (rj[c] != 0) mpz_addmul(ri[c].get_mpz_t(), f.get_mpz_t(), rj[c].get_mpz_t());
}

void DenseMatrix::add_col_multiple(std::size_t i, std::size_t j, const Integer& f) {
  if (f == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const Integer& x = (*this)(r, j);
    if (x != 0) mpz_addmul((*this)(r, i).get_mpz_t(), f.get_mpz_t(), x.get_mpz_t());
  }
}

void DenseMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void DenseMatrix::negate_col(std::size_t i) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) = -(*this)(r, i);
}

std::vector<Integer> DenseMatrix::column(std::size_t c) const {
  std::vector<Integer> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

DenseMatrix DenseMatrix::columns(std::size_t from, std::size_t to) const {
  DenseMatrix m(rows_, to - from);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = from; c < to; ++c) m(r, c - from) = (*this)(r, c);
  return m;
}

DenseMatrix DenseMatrix::rows_range(std::size_t from, std::size_t to) const {
  DenseMatrix m(to - from, cols_);
  for (std::size_t r = from; r < to; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r - from, c) = (*this)(r, c);
  return m;
}

std::vector<Integer> DenseMatrix::apply(const std::vector<Integer>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("DenseMatrix::apply: size mismatch");
  std::vector<Integer> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (x[c] != 0) mpz_addmul(y[r].get_mpz_t(), (*this)(r, c).get_mpz_t(), x[c].get_mpz_t());
  return y;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("DenseMatrix product: shape mismatch");
  DenseMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) mpz_addmul(c(i, j).get_mpz_t(), x.get_mpz_t(), b(k, j).get_mpz_t());
    }
  return c;
}

bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Integer determinant(const DenseMatrix& in) {
  if (in.rows() != in.cols()) throw std::invalid_argument("determinant: square matrix required");
  std::size_t n = in.rows();
  if (n == 0) return 1;
  DenseMatrix m = in;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace vcg
