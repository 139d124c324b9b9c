#include "vcg/bar.hpp"

#include <omp.h>

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "vcg/errors.hpp"
#include "vcg/sparse_elim.hpp"

namespace vcg {
namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

using Faces = std::vector<std::pair<std::uint64_t, std::int64_t>>;

bool unit(const Integer& modulus, std::int64_t v) {
  if (modulus == 0) return v == 1 || v == -1;
  return gcd(Integer(v), modulus) == 1;
}

std::vector<std::pair<std::uint64_t, Integer>> merge_faces(Faces f, const Integer& modulus) {
  std::sort(f.begin(), f.end());
  std::vector<std::pair<std::uint64_t, Integer>> out;
  for (std::size_t i = 0; i < f.size();) {
    std::size_t j = i;
    std::int64_t s = 0;
    for (; j < f.size() && f[j].first == f[i].first; ++j) s += f[j].second;
    Integer v = s;
    if (modulus != 0) v = mod(v, modulus);
    if (v != 0) out.emplace_back(f[i].first, v);
    i = j;
  }
  return out;
}

// Extract the listed rows and columns of an eliminator as a matrix.
IntMatrix extract(const SparseEliminator& e, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  std::vector<std::size_t> at(e.cols(), kNone);
  for (std::size_t k = 0; k < cols.size(); ++k) at[cols[k]] = k;
  IntMatrix m(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<IntMatrix::Entry> row;
    for (const auto& en : e.row(rows[r]))
      if (at[en.col] != kNone) row.push_back({at[en.col], en.value});
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.col < y.col; });
    m.set_row(r, std::move(row));
  }
  return m;
}

// Unit pivots in d_in remove their rows from the middle basis, then unit pivots in d_out remove
// their columns; each step is a Gaussian elimination of the complex.
BarComplex::Cohomology reduce_pair(const IntMatrix& d_out, const IntMatrix& d_in, const std::vector<std::uint64_t>& basis,
                                   const Integer& modulus) {
  BarComplex::Cohomology out;
  const std::size_t mid_dim = d_in.rows();
  SparseEliminator in(d_in.cols(), modulus);
  for (std::size_t r = 0; r < mid_dim; ++r) in.add_row(d_in.row(r));
  out.pivots += in.eliminate_units();
  SparseEliminator o(mid_dim, modulus);
  for (std::size_t r = 0; r < d_out.rows(); ++r) {
    std::vector<IntMatrix::Entry> row;
    for (const auto& e : d_out.row(r))
      if (in.row_active(e.col)) row.push_back(e);
    o.add_row(std::move(row));
  }
  out.pivots += o.eliminate_units();
  std::vector<std::size_t> mid, out_rows, in_cols;
  for (std::size_t c = 0; c < mid_dim; ++c)
    if (in.row_active(c) && o.col_active(c)) mid.push_back(c);
  for (std::size_t r = 0; r < o.rows(); ++r)
    if (o.row_active(r)) out_rows.push_back(r);
  for (std::size_t c = 0; c < in.cols(); ++c)
    if (in.col_active(c)) in_cols.push_back(c);
  IntMatrix a = extract(o, out_rows, mid), b = extract(in, mid, in_cols);
  check_complex(a, b, modulus);
  out.sq = subquotient(a, b, modulus);
  for (std::size_t c : mid) out.basis.push_back(basis[c]);
  return out;
}

}  // namespace

BarComplex::BarComplex(const FiniteGroup& g, Coefficients m) : group_(g), coeffs_(std::move(m)) {
  const std::size_t n = g.order();
  q_ = n - 1;
  const std::uint32_t id = g.index_of(identity_element());
  if (id != 0) throw std::logic_error("BarComplex: identity must have index 0");
  len_.assign(n, -1);
  sgen_.assign(n, 0);
  par_.assign(n, 0);
  len_[0] = 0;
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    std::uint32_t h = queue.front();
    queue.pop_front();
    for (std::uint32_t s : g.generators()) {
      std::uint32_t x = g.mul(s, h);
      if (len_[x] >= 0) continue;
      len_[x] = len_[h] + 1;
      sgen_[x] = s;
      par_[x] = h;
      queue.push_back(x);
    }
  }
  for (int l : len_)
    if (l < 0) throw std::logic_error("BarComplex: standard generators do not generate");
}

std::uint64_t BarComplex::cells(int n) const {
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k) c *= q_;
  return c;
}

std::vector<std::uint32_t> BarComplex::decode(std::uint64_t code, int n) const {
  std::vector<std::uint32_t> t(n);
  for (int k = n - 1; k >= 0; --k) {
    t[k] = std::uint32_t(code % q_) + 1;
    code /= q_;
  }
  return t;
}

std::uint64_t BarComplex::encode(const std::vector<std::uint32_t>& t) const {
  std::uint64_t code = 0;
  for (std::uint32_t g : t) code = code * q_ + (g - 1);
  return code;
}

Faces BarComplex::faces(const std::vector<std::uint32_t>& t) const {
  const int k = int(t.size());
  Faces out;
  out.reserve(k + 1);
  // Place values q^j, so faces can be coded without building the tuples.
  std::vector<std::uint64_t> pw(k + 1, 1);
  for (int j = 1; j <= k; ++j) pw[j] = pw[j - 1] * q_;
  std::vector<std::uint64_t> prefix(k + 1, 0), suffix(k + 1, 0);
  for (int j = 0; j < k; ++j) prefix[j + 1] = prefix[j] * q_ + (t[j] - 1);
  for (int j = k - 1; j >= 0; --j) suffix[j] = suffix[j + 1] + (t[j] - 1) * pw[k - 1 - j];
  std::int64_t rho = coeffs_.rho(t[0]);
  if (coeffs_.modulus != 0) rho %= coeffs_.modulus.get_si();
  out.emplace_back(suffix[1], rho);
  for (int i = 1; i < k; ++i) {
    std::uint32_t g = group_.mul(t[i - 1], t[i]);
    if (g == 0) continue;
    std::uint64_t code = (prefix[i - 1] * q_ + (g - 1)) * pw[k - 1 - i] + suffix[i + 1];
    out.emplace_back(code, i % 2 ? -1 : 1);
  }
  out.emplace_back(prefix[k - 1], k % 2 ? -1 : 1);
  return out;
}

std::vector<std::pair<std::uint64_t, Integer>> BarComplex::coboundary_row(int n, std::uint64_t code) const {
  return merge_faces(faces(decode(code, n + 1)), coeffs_.modulus);
}

IntMatrix BarComplex::coboundary(int n) const {
  const std::uint64_t rows = cells(n + 1), cols = cells(n);
  IntMatrix d(rows, cols);
  for (std::uint64_t r = 0; r < rows; ++r) {
    std::vector<IntMatrix::Entry> row;
    for (auto& [c, v] : coboundary_row(n, r)) row.push_back({c, v});
    d.set_row(r, std::move(row));
  }
  return d;
}

Integer BarComplex::pair_entry(const std::vector<std::uint32_t>& tau, std::uint64_t sigma) const {
  std::int64_t s = 0;
  for (auto& [c, v] : faces(tau))
    if (c == sigma) s += v;
  return s;
}

bool BarComplex::designated(std::uint32_t s, std::uint32_t h) const {
  std::uint32_t g = group_.mul(s, h);
  return g != 0 && len_[g] >= 2 && sgen_[g] == s && par_[g] == h;
}

BarComplex::Partner BarComplex::partner(int n, std::uint64_t code) const {
  const auto t = decode(code, n);
  for (int i = 0; i < n; i += 2) {
    if (len_[t[i]] >= 2) {
      std::vector<std::uint32_t> tau(t.begin(), t.begin() + i);
      tau.push_back(sgen_[t[i]]);
      tau.push_back(par_[t[i]]);
      tau.insert(tau.end(), t.begin() + i + 1, t.end());
      Integer e = pair_entry(tau, code);
      if (!unit(coeffs_.modulus, e.get_si())) return {};
      return {Match::Up, encode(tau), i, len_[t[i]]};
    }
    if (i + 1 >= n) return {};
    if (designated(t[i], t[i + 1])) {
      std::uint32_t g = group_.mul(t[i], t[i + 1]);
      std::vector<std::uint32_t> sigma(t.begin(), t.begin() + i);
      sigma.push_back(g);
      sigma.insert(sigma.end(), t.begin() + i + 2, t.end());
      std::uint64_t sc = encode(sigma);
      Integer e = pair_entry(t, sc);
      if (!unit(coeffs_.modulus, e.get_si())) return {};
      return {Match::Down, sc, i, len_[g]};
    }
  }
  return {};
}

bool BarComplex::certify_acyclic(int n) const {
  if (n < 0) return true;
  const std::uint64_t total = cells(n);
  std::vector<std::uint64_t> up(total, kNone);
#pragma omp parallel for schedule(dynamic, 1024)
  for (std::int64_t c = 0; c < std::int64_t(total); ++c) {
    Partner p = partner(n, std::uint64_t(c));
    if (p.kind == Match::Up) up[c] = p.code;
  }
  // 0 unvisited, 1 on the stack, 2 done
  std::vector<std::uint8_t> color(total, 0);
  struct Frame {
    std::uint64_t node;
    std::vector<std::uint64_t> next;
    std::size_t at;
  };
  auto successors = [&](std::uint64_t s) {
    std::vector<std::uint64_t> out;
    for (auto& [c, v] : merge_faces(faces(decode(up[s], n + 1)), coeffs_.modulus))
      if (c != s && up[c] != kNone) out.push_back(c);
    return out;
  };
  for (std::uint64_t root = 0; root < total; ++root) {
    if (up[root] == kNone || color[root]) continue;
    std::vector<Frame> stack;
    stack.push_back({root, successors(root), 0});
    color[root] = 1;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.at == f.next.size()) {
        color[f.node] = 2;
        stack.pop_back();
        continue;
      }
      std::uint64_t c = f.next[f.at++];
      if (color[c] == 1) return false;
      if (color[c] == 0) {
        color[c] = 1;
        stack.push_back({c, successors(c), 0});
      }
    }
  }
  return true;
}

BarComplex::Reduced BarComplex::morse_coboundary(int n, Assembly assembly) const {
  const bool parallel = assembly == Assembly::Parallel;
  const std::uint64_t nrows = cells(n + 1), ncols = cells(n);

  std::vector<std::uint8_t> col_kind(ncols);
#pragma omp parallel for schedule(dynamic, 1024) if (parallel)
  for (std::int64_t c = 0; c < std::int64_t(ncols); ++c) col_kind[c] = std::uint8_t(partner(n, std::uint64_t(c)).kind);

  std::vector<Partner> row_partner(nrows);
#pragma omp parallel for schedule(dynamic, 1024) if (parallel)
  for (std::int64_t r = 0; r < std::int64_t(nrows); ++r) row_partner[r] = partner(n + 1, std::uint64_t(r));

  std::vector<std::uint64_t> kept;
  for (std::uint64_t r = 0; r < nrows; ++r)
    if (row_partner[r].kind != Match::Up) kept.push_back(r);

  std::vector<std::vector<IntMatrix::Entry>> rows(kept.size());
#pragma omp parallel for schedule(dynamic, 256) if (parallel)
  for (std::int64_t k = 0; k < std::int64_t(kept.size()); ++k) {
    for (auto& [c, v] : coboundary_row(n, kept[k]))
      if (col_kind[c] != std::uint8_t(Match::Down)) rows[k].push_back({c, v});
  }

  SparseEliminator el(ncols, coeffs_.modulus);
  for (auto& r : rows) el.add_row(std::move(r));

  struct Pivot {
    int pos, length;
    std::size_t row;
    std::uint64_t col;
  };
  std::vector<Pivot> pivots;
  Reduced out;
  for (std::size_t k = 0; k < kept.size(); ++k) {
    const Partner& p = row_partner[kept[k]];
    if (p.kind == Match::Down)
      pivots.push_back({p.pos, p.length, k, p.code});
    else
      out.rows.push_back(kept[k]);
  }
  std::stable_sort(pivots.begin(), pivots.end(), [](const Pivot& x, const Pivot& y) {
    return x.pos != y.pos ? x.pos < y.pos : x.length < y.length;
  });
  for (const auto& p : pivots) el.pivot(p.row, p.col);
  out.pivots = pivots.size();

  std::vector<std::size_t> row_ids, col_ids;
  for (std::size_t k = 0; k < kept.size(); ++k)
    if (row_partner[kept[k]].kind != Match::Down) row_ids.push_back(k);
  for (std::uint64_t c = 0; c < ncols; ++c)
    if (col_kind[c] == std::uint8_t(Match::Critical)) {
      col_ids.push_back(c);
      out.cols.push_back(c);
    }
  out.d = extract(el, row_ids, col_ids);
  return out;
}

BarComplex::Cohomology BarComplex::generic_cohomology(int n) const {
  IntMatrix d_in = n >= 1 ? coboundary(n - 1) : IntMatrix(cells(n), 0);
  std::vector<std::uint64_t> basis(cells(n));
  for (std::uint64_t c = 0; c < basis.size(); ++c) basis[c] = c;
  Cohomology out = reduce_pair(coboundary(n), d_in, basis, coeffs_.modulus);
  out.morse = false;
  return out;
}

BarComplex::Cohomology BarComplex::cohomology(int n, Assembly assembly, bool allow_morse) const {
  if (n < 0) throw std::invalid_argument("BarComplex::cohomology: negative degree");
  if (allow_morse) {
    bool certified = true;
    for (int k = std::max(0, n - 2); k <= n + 1 && certified; ++k) certified = certify_acyclic(k);
    if (certified) {
      try {
        Reduced out = morse_coboundary(n, assembly);
        IntMatrix d_in(out.cols.size(), 0);
        std::size_t pivots = out.pivots;
        if (n >= 1) {
          Reduced in = morse_coboundary(n - 1, assembly);
          if (in.rows != out.cols) throw std::logic_error("BarComplex: critical cells disagree");
          d_in = std::move(in.d);
          pivots += in.pivots;
        }
        check_complex(out.d, d_in, coeffs_.modulus);
        Cohomology c = reduce_pair(out.d, d_in, out.cols, coeffs_.modulus);
        c.pivots += pivots;
        return c;
      } catch (const std::domain_error&) {
      }
    }
  }
  return generic_cohomology(n);
}

}  // namespace vcg
