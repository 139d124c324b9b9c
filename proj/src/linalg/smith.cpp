#include "vcg/smith.hpp"

#include <algorithm>
#include <limits>

#include "vcg/sparse_elim.hpp"

namespace vcg {

namespace {

class Reducer {
 public:
  Reducer(DenseMatrix a, unsigned want) : a_(std::move(a)), want_(want) {
    if (want_ & kWantU) u_ = DenseMatrix::identity(a_.rows());
    if (want_ & kWantUinv) uinv_ = DenseMatrix::identity(a_.rows());
    if (want_ & kWantV) v_ = DenseMatrix::identity(a_.cols());
    if (want_ & kWantVinv) vinv_ = DenseMatrix::identity(a_.cols());
  }

  DenseSnf run() {
    std::size_t m = a_.rows(), n = a_.cols(), t = 0;
    for (; t < std::min(m, n); ++t) {
      if (!choose_pivot(t)) break;
      settle(t);
      if (a_(t, t) < 0) negate_row(t);
    }
    DenseSnf out;
    out.rank = t;
    out.diag.resize(std::min(m, n));
    for (std::size_t k = 0; k < t; ++k) out.diag[k] = a_(k, k);
    out.U = std::move(u_);
    out.V = std::move(v_);
    out.Uinv = std::move(uinv_);
    out.Vinv = std::move(vinv_);
    return out;
  }

 private:
  // Smallest magnitude nonzero in the trailing block, ties broken by fewest nonzeros in its row and column.
  bool choose_pivot(std::size_t t) {
    std::size_t m = a_.rows(), n = a_.cols();
    std::vector<std::size_t> rc(m, 0), cc(n, 0);
    bool any = false;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a_(i, j) != 0) {
          ++rc[i];
          ++cc[j];
          any = true;
        }
    if (!any) return false;
    std::size_t bi = 0, bj = 0, best_count = std::numeric_limits<std::size_t>::max();
    const Integer* best = nullptr;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        const Integer& x = a_(i, j);
        if (x == 0) continue;
        int c = best ? cmpabs(x, *best) : -1;
        std::size_t count = rc[i] + cc[j];
        if (c < 0 || (c == 0 && count < best_count)) {
          best = &x;
          best_count = count;
          bi = i;
          bj = j;
        }
      }
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void settle(std::size_t t) {
    std::size_t m = a_.rows(), n = a_.cols();
    for (;;) {
      bool again = false;
      std::size_t smallest = 0;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a_(i, t) == 0) continue;
        Integer q = round_div(a_(i, t), a_(t, t));
        add_row(i, t, -q);
        if (a_(i, t) != 0 && (!again || cmpabs(a_(i, t), a_(smallest, t)) < 0)) {
          again = true;
          smallest = i;
        }
      }
      if (again) {
        swap_rows(t, smallest);
        continue;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a_(t, j) == 0) continue;
        Integer q = round_div(a_(t, j), a_(t, t));
        add_col(j, t, -q);
        if (a_(t, j) != 0 && (!again || cmpabs(a_(t, j), a_(t, smallest)) < 0)) {
          again = true;
          smallest = j;
        }
      }
      if (again) {
        swap_cols(t, smallest);
        continue;
      }
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!divides(a_(t, t), a_(i, j))) {
            bad = i;
            break;
          }
      if (bad == m) return;
      add_row(t, bad, Integer(1));
    }
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    a_.swap_rows(i, j);
    if (want_ & kWantU) u_.swap_rows(i, j);
    if (want_ & kWantUinv) uinv_.swap_cols(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    a_.swap_cols(i, j);
    if (want_ & kWantV) v_.swap_cols(i, j);
    if (want_ & kWantVinv) vinv_.swap_rows(i, j);
  }
  // row_i += f row_j
  void add_row(std::size_t i, std::size_t j, const Integer& f) {
    if (f == 0) return;
    a_.add_row_multiple(i, j, f);
    if (want_ & kWantU) u_.add_row_multiple(i, j, f);
    if (want_ & kWantUinv) uinv_.add_col_multiple(j, i, -f);
  }
  // col_i += f col_j
  void add_col(std::size_t i, std::size_t j, const Integer& f) {
    if (f == 0) return;
    a_.add_col_multiple(i, j, f);
    if (want_ & kWantV) v_.add_col_multiple(i, j, f);
    if (want_ & kWantVinv) vinv_.add_row_multiple(j, i, -f);
  }
  void negate_row(std::size_t i) {
    a_.negate_row(i);
    if (want_ & kWantU) u_.negate_row(i);
    if (want_ & kWantUinv) uinv_.negate_col(i);
  }

  DenseMatrix a_, u_, v_, uinv_, vinv_;
  unsigned want_;
};

}  // namespace

DenseSnf smith_dense(DenseMatrix a, unsigned want) { return Reducer(std::move(a), want).run(); }

std::vector<Integer> SnfResult::diagonal() const {
  std::vector<Integer> d(std::min(D.rows(), D.cols()));
  for (std::size_t t = 0; t < d.size(); ++t) d[t] = D.get(t, t);
  return d;
}

std::size_t SnfResult::rank() const {
  std::size_t r = 0;
  for (const auto& x : diagonal())
    if (x != 0) ++r;
  return r;
}

SnfResult smith_normal_form(const IntMatrix& a) {
  DenseSnf s = smith_dense(a.dense(), kWantU | kWantV);
  SnfResult r;
  r.U = IntMatrix::from_dense(s.U);
  r.V = IntMatrix::from_dense(s.V);
  r.D = IntMatrix(a.rows(), a.cols());
  for (std::size_t t = 0; t < s.rank; ++t) r.D.set(t, t, s.diag[t]);
  return r;
}

Invariants invariant_factors(const IntMatrix& a) {
  UnitEliminationResult pre = eliminate_unit_pivots(a);
  Invariants inv;
  inv.rank = pre.unit_pivots;
  inv.factors.assign(pre.unit_pivots, Integer(1));
  if (pre.remainder.rows() && pre.remainder.cols()) {
    DenseSnf s = smith_dense(pre.remainder.dense(), 0);
    inv.rank += s.rank;
    for (std::size_t t = 0; t < s.rank; ++t) inv.factors.push_back(s.diag[t]);
  }
  return inv;
}

std::size_t rank(const IntMatrix& a) { return invariant_factors(a).rank; }

FinAb cokernel_invariants(const IntMatrix& a) {
  Invariants inv = invariant_factors(a);
  std::vector<Integer> orders = inv.factors;
  orders.resize(a.rows(), Integer(0));
  return FinAb::from_cyclic(orders);
}

IntMatrix kernel_basis(const IntMatrix& a) {
  DenseSnf s = smith_dense(a.dense(), kWantV);
  std::size_t n = a.cols();
  return IntMatrix::from_dense(s.V.columns(s.rank, n));
}

}  // namespace vcg
