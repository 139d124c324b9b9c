#include "vcg/lattice.hpp"

#include <sstream>
#include <stdexcept>

#include "vcg/errors.hpp"

namespace vcg {

void check_complex(const IntMatrix& d_out, const IntMatrix& d_in, const Integer& modulus) {
  if (d_out.cols() != d_in.rows()) {
    std::ostringstream os;
    os << "not a complex: d_out has " << d_out.cols() << " columns but d_in has " << d_in.rows() << " rows";
    throw ComplexError(os.str());
  }
  IntMatrix prod = d_out * d_in;
  for (std::size_t r = 0; r < prod.rows(); ++r)
    for (const auto& e : prod.row(r)) {
      if (modulus != 0 && divides(modulus, e.value)) continue;
      std::ostringstream os;
      os << "not a complex: (d_out·d_in)[" << r << "][" << e.col << "] = " << e.value;
      if (modulus != 0) os << " (mod " << modulus << ")";
      throw ComplexError(os.str());
    }
}

Subquotient subquotient(const IntMatrix& d_out, const IntMatrix& d_in, const Integer& modulus) {
  check_complex(d_out, d_in, modulus);
  const std::size_t n = d_out.cols();
  Subquotient sq;
  sq.ambient_ = n;
  sq.d_out_ = d_out;
  sq.modulus_ = modulus;

  // Basis of the cocycle lattice L, with a coordinate map x -> (C x)_t / e_t.
  DenseMatrix basis;
  if (modulus == 0) {
    DenseSnf s = smith_dense(d_out.dense(), kWantV | kWantVinv);
    basis = s.V.columns(s.rank, n);
    sq.coord_ = s.Vinv.rows_range(s.rank, n);
    sq.coord_div_.assign(n - s.rank, Integer(1));
  } else {
    // L = projection of ker [d_out | -m I].
    // Rows vanishing modulo m impose nothing.
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < d_out.rows(); ++i)
      for (const auto& e : d_out.row(i))
        if (!divides(modulus, e.value)) {
          live.push_back(i);
          break;
        }
    std::size_t r = live.size();
    DenseMatrix aug(r, n + r);
    for (std::size_t i = 0; i < r; ++i) {
      for (const auto& e : d_out.row(live[i])) aug(i, e.col) = e.value;
      aug(i, n + i) = -modulus;
    }
    DenseSnf ks = smith_dense(aug, kWantV);
    std::size_t kdim = n + r - ks.rank;
    DenseMatrix gens(n, kdim);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < kdim; ++j) gens(i, j) = ks.V(i, ks.rank + j);
    DenseSnf ls = smith_dense(gens, kWantU | kWantUinv);
    basis = DenseMatrix(n, ls.rank);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < ls.rank; ++t) basis(i, t) = ls.Uinv(i, t) * ls.diag[t];
    sq.coord_ = ls.U.rows_range(0, ls.rank);
    sq.coord_div_.assign(ls.diag.begin(), ls.diag.begin() + ls.rank);
  }
  const std::size_t k = sq.coord_div_.size();

  // Boundary generators, expressed in L-coordinates.
  std::size_t m = d_in.cols() + (modulus == 0 ? 0 : n);
  DenseMatrix y(k, m);
  DenseMatrix din = d_in.dense();
  auto to_coords = [&](const std::vector<Integer>& x, std::size_t col) {
    std::vector<Integer> c = sq.coord_.apply(x);
    for (std::size_t t = 0; t < k; ++t) {
      if (!divides(sq.coord_div_[t], c[t])) throw ComplexError("subquotient: boundary outside cocycle lattice");
      y(t, col) = c[t] / sq.coord_div_[t];
    }
  };
  for (std::size_t j = 0; j < d_in.cols(); ++j) to_coords(din.column(j), j);
  if (modulus != 0)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Integer> e(n);
      e[j] = modulus;
      to_coords(e, d_in.cols() + j);
    }

  DenseSnf qs = smith_dense(y, kWantU | kWantUinv);
  sq.quot_ = qs.U;
  std::vector<Integer> orders;
  for (std::size_t t = 0; t < k; ++t) {
    Integer d = t < qs.rank ? qs.diag[t] : Integer(0);
    if (d == 1) continue;
    sq.kept_.push_back(t);
    sq.orders_.push_back(d);
    orders.push_back(d);
    std::vector<Integer> lift(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t s = 0; s < k; ++s)
        if (qs.Uinv(s, t) != 0) lift[i] += basis(i, s) * qs.Uinv(s, t);
    sq.lifts_.push_back(std::move(lift));
  }
  sq.group_ = FinAb::from_cyclic(orders);
  return sq;
}

std::vector<Integer> Subquotient::coordinates(const std::vector<Integer>& z) const {
  if (z.size() != ambient_) throw ComplexError("coordinates: vector has wrong length");
  for (const auto& v : d_out_.apply(z))
    if (modulus_ == 0 ? v != 0 : !divides(modulus_, v)) throw ComplexError("coordinates: vector is not a cocycle");
  std::vector<Integer> c = coord_.apply(z);
  for (std::size_t t = 0; t < c.size(); ++t) {
    if (!divides(coord_div_[t], c[t])) throw ComplexError("coordinates: vector is not a cocycle");
    c[t] /= coord_div_[t];
  }
  std::vector<Integer> q = quot_.apply(c);
  std::vector<Integer> out;
  for (std::size_t g = 0; g < kept_.size(); ++g) {
    Integer v = q[kept_[g]];
    if (orders_[g] != 0) v = mod(v, orders_[g]);
    out.push_back(v);
  }
  return out;
}

LinearSolver::LinearSolver(const IntMatrix& a)
    : rows_(a.rows()), cols_(a.cols()), snf_(smith_dense(a.dense(), kWantU | kWantV)) {}

std::optional<std::vector<Integer>> LinearSolver::solve(const std::vector<Integer>& b) const {
  if (b.size() != rows_) return std::nullopt;
  std::vector<Integer> ub = snf_.U.apply(b);
  std::vector<Integer> y(cols_);
  for (std::size_t t = 0; t < rows_; ++t) {
    if (t < snf_.rank) {
      if (!divides(snf_.diag[t], ub[t])) return std::nullopt;
      y[t] = ub[t] / snf_.diag[t];
    } else if (ub[t] != 0) {
      return std::nullopt;
    }
  }
  return snf_.V.apply(y);
}

}  // namespace vcg

namespace vcg {

namespace {

IntMatrix with_relations(const IntMatrix& m, const std::vector<Integer>& dst_orders) {
  if (dst_orders.size() != m.rows()) throw std::invalid_argument("hom: target orders do not match the matrix rows");
  IntMatrix out(m.rows(), m.cols() + m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& e : m.row(r)) out.set(r, e.col, e.value);
    out.set(r, m.cols() + r, dst_orders[r]);
  }
  return out;
}

}  // namespace

FinAb hom_cokernel(const IntMatrix& m, const std::vector<Integer>& dst_orders) {
  return cokernel_invariants(with_relations(m, dst_orders));
}

FinAb hom_kernel(const IntMatrix& m, const std::vector<Integer>& src_orders, const std::vector<Integer>& dst_orders) {
  if (src_orders.size() != m.cols()) throw std::invalid_argument("hom_kernel: source orders do not match the matrix columns");
  std::size_t k = m.cols(), l = m.rows();
  // Pairs (x, y) with M x + D y = 0, modulo (0, e_j) for free targets and the lifts of D_src.
  IntMatrix d_out = with_relations(m, dst_orders);
  std::vector<std::vector<Integer>> gens;
  for (std::size_t j = 0; j < l; ++j)
    if (dst_orders[j] == 0) {
      std::vector<Integer> g(k + l, 0);
      g[k + j] = 1;
      gens.push_back(std::move(g));
    }
  for (std::size_t t = 0; t < k; ++t) {
    if (src_orders[t] == 0) continue;
    std::vector<Integer> g(k + l, 0);
    g[t] = src_orders[t];
    for (std::size_t j = 0; j < l; ++j) {
      Integer img = m.get(j, t) * src_orders[t];
      if (dst_orders[j] == 0) {
        if (img != 0) throw std::invalid_argument("hom_kernel: matrix is not a homomorphism on a torsion generator");
        continue;
      }
      if (!divides(dst_orders[j], img)) throw std::invalid_argument("hom_kernel: matrix is not a homomorphism on a torsion generator");
      g[k + j] = -img / dst_orders[j];
    }
    gens.push_back(std::move(g));
  }
  IntMatrix d_in(k + l, gens.size());
  for (std::size_t c = 0; c < gens.size(); ++c)
    for (std::size_t r = 0; r < k + l; ++r)
      if (gens[c][r] != 0) d_in.set(r, c, gens[c][r]);
  return subquotient(d_out, d_in).group();
}

}  // namespace vcg

namespace vcg {

// Integral LLL with exact Gram–Schmidt data: d[i] are Gram determinants, lambda[k][j] = d[j+1]·μ_kj.
void lll_reduce(std::vector<std::vector<Integer>>& b) {
  const std::size_t n = b.size();
  if (n <= 1) return;
  auto dot = [](const std::vector<Integer>& x, const std::vector<Integer>& y) {
    Integer s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != 0 && y[i] != 0) mpz_addmul(s.get_mpz_t(), x[i].get_mpz_t(), y[i].get_mpz_t());
    return s;
  };
  auto exact = [](const Integer& num, const Integer& den) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
  };
  // 1-indexed as in the textbook formulation; d[0] = 1.
  std::vector<Integer> d(n + 1, 0);
  std::vector<std::vector<Integer>> lam(n + 1, std::vector<Integer>(n + 1, 0));
  std::vector<std::vector<Integer>> v(n + 1);
  for (std::size_t i = 0; i < n; ++i) v[i + 1] = std::move(b[i]);
  d[0] = 1;
  d[1] = dot(v[1], v[1]);
  if (d[1] == 0) throw std::invalid_argument("lll_reduce: zero vector");
  std::size_t k = 2, kmax = 1;

  auto red = [&](std::size_t k, std::size_t l) {
    Integer twice = 2 * lam[k][l];
    if (cmpabs(twice, d[l]) <= 0) return;
    Integer q = round_div(lam[k][l], d[l]);
    for (std::size_t c = 0; c < v[k].size(); ++c)
      if (v[l][c] != 0) mpz_submul(v[k][c].get_mpz_t(), q.get_mpz_t(), v[l][c].get_mpz_t());
    lam[k][l] -= q * d[l];
    for (std::size_t i = 1; i < l; ++i) lam[k][i] -= q * lam[l][i];
  };
  auto swap = [&](std::size_t k) {
    std::swap(v[k], v[k - 1]);
    for (std::size_t j = 1; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    Integer l = lam[k][k - 1];
    Integer B = exact(d[k - 2] * d[k] + l * l, d[k - 1]);
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      Integer t = lam[i][k];
      lam[i][k] = exact(d[k] * lam[i][k - 1] - l * t, d[k - 1]);
      lam[i][k - 1] = exact(B * t + l * lam[i][k], d[k]);
    }
    d[k - 1] = B;
  };

  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 1; j <= k; ++j) {
        Integer u = dot(v[k], v[j]);
        for (std::size_t i = 1; i < j; ++i) u = exact(d[i] * u - lam[k][i] * lam[j][i], d[i - 1]);
        if (j < k)
          lam[k][j] = u;
        else if (u == 0)
          throw std::invalid_argument("lll_reduce: dependent vectors");
        else
          d[k] = u;
      }
    }
    red(k, k - 1);
    if (4 * d[k] * d[k - 2] < 3 * d[k - 1] * d[k - 1] - 4 * lam[k][k - 1] * lam[k][k - 1]) {
      swap(k);
      if (k > 2) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 1;) red(k, l);
      ++k;
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] = std::move(v[i + 1]);
}

}  // namespace vcg
