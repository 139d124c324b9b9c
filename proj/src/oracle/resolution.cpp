#include "vcg/resolution.hpp"

#include <stdexcept>

#include "vcg/errors.hpp"
#include "vcg/smith.hpp"

namespace vcg {

namespace {

IntMatrix columns_to_matrix(const std::vector<ModuleVector>& cols, std::size_t dim) {
  IntMatrix m(dim, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r)
      if (cols[c][r] != 0) m.set(r, c, cols[c][r]);
  return m;
}

ModuleVector column_of(const IntMatrix& m, std::size_t c) {
  ModuleVector v(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m.get(r, c);
  return v;
}

// Row echelon form over Z/p, used only to score candidate generators.
class ModpEchelon {
 public:
  explicit ModpEchelon(std::int64_t p) : kP(p) {}
  bool insert(const ModuleVector& x) {
    std::vector<std::int64_t> v(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) v[i] = mpz_fdiv_ui(x[i].get_mpz_t(), kP);
    for (const auto& [col, row] : rows_) {
      if (v[col] == 0) continue;
      std::int64_t f = v[col];
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = (v[i] + (kP - f) * row[i]) % kP;
    }
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c] == 0) continue;
      std::int64_t inv = inverse(v[c]);
      for (auto& e : v) e = e * inv % kP;
      for (auto& [col, row] : rows_) {
        if (row[c] == 0) continue;
        std::int64_t f = row[c];
        for (std::size_t i = 0; i < v.size(); ++i) row[i] = (row[i] + (kP - f) * v[i]) % kP;
      }
      rows_.emplace_back(c, std::move(v));
      return true;
    }
    return false;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::int64_t inverse(std::int64_t a) const {
    std::int64_t r = 1, b = a, e = kP - 2;
    while (e) {
      if (e & 1) r = r * b % kP;
      b = b * b % kP;
      e >>= 1;
    }
    return r;
  }
  std::int64_t kP;
  std::vector<std::pair<std::size_t, std::vector<std::int64_t>>> rows_;
};

// A large prime for rank, plus the primes dividing |G|, where the lattice index can hide.
std::vector<std::int64_t> scoring_primes(std::size_t order) {
  std::vector<std::int64_t> ps = {2147483629};
  std::size_t m = order;
  for (std::size_t q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      ps.push_back(static_cast<std::int64_t>(q));
      while (m % q == 0) m /= q;
    }
  if (m > 1) ps.push_back(static_cast<std::int64_t>(m));
  return ps;
}

}  // namespace

FreeResolution::FreeResolution(const FiniteGroup& g, int top_degree)
    : group_(std::make_shared<const FiniteGroup>(g)) {
  if (top_degree < 0) throw std::invalid_argument("FreeResolution: negative degree");
  const std::size_t N = g.order();
  const std::vector<std::int64_t> primes = scoring_primes(N);
  ranks_.push_back(1);
  boundary_.emplace_back();
  for (int n = 1; n <= top_degree; ++n) {
    std::size_t dim = ranks_[n - 1] * N;
    IntMatrix kernel = kernel_basis(z_matrix(n - 1));
    std::vector<ModuleVector> cand;
    for (std::size_t c = 0; c < kernel.cols(); ++c) cand.push_back(column_of(kernel, c));
    lll_reduce(cand);

    std::vector<ModuleVector> chosen, span;
    std::vector<ModpEchelon> echelons;
    for (std::int64_t q : primes) echelons.emplace_back(q);
    auto orbit = [&](const ModuleVector& v) {
      std::vector<ModuleVector> out;
      for (std::uint32_t h = 0; h < N; ++h) out.push_back(act(h, v));
      return out;
    };
    for (;;) {
      std::vector<char> inside(cand.size(), 0);
      bool complete = true;
      if (!span.empty()) {
        LinearSolver s(columns_to_matrix(span, dim));
        for (std::size_t c = 0; c < cand.size(); ++c) {
          inside[c] = s.solve(cand[c]).has_value();
          complete = complete && inside[c];
        }
      } else {
        complete = cand.empty();
      }
      if (complete) break;
      // Score: rank modulo every scoring prime; full everywhere means the orbit completes the kernel.
      std::size_t best = cand.size(), best_score = 0;
      const std::size_t full = kernel.cols() * primes.size();
      for (std::size_t c = 0; c < cand.size(); ++c) {
        if (inside[c]) continue;
        std::vector<ModuleVector> orb = orbit(cand[c]);
        std::size_t score = 0;
        for (const auto& e : echelons) {
          ModpEchelon trial = e;
          for (const auto& v : orb) trial.insert(v);
          score += trial.rank();
        }
        if (best == cand.size() || score > best_score) {
          best = c;
          best_score = score;
        }
        if (best_score == full) break;
      }
      chosen.push_back(cand[best]);
      for (auto& v : orbit(cand[best])) {
        for (auto& e : echelons) e.insert(v);
        span.push_back(std::move(v));
      }
    }
    ranks_.push_back(chosen.size());
    boundary_.push_back(std::move(chosen));
  }
  solvers_.resize(ranks_.size());
  homotopy_.resize(ranks_.size());
}

ModuleVector FreeResolution::act(std::uint32_t g, const ModuleVector& x) const {
  const std::size_t N = group_->order();
  ModuleVector y(x.size(), 0);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] == 0) continue;
    std::size_t j = k / N;
    std::uint32_t h = static_cast<std::uint32_t>(k % N);
    y[j * N + group_->mul(g, h)] += x[k];
  }
  return y;
}

IntMatrix FreeResolution::z_matrix(int n) const {
  const std::size_t N = group_->order();
  if (n == 0) {
    IntMatrix eps(1, N);
    for (std::size_t g = 0; g < N; ++g) eps.set(0, g, 1);
    return eps;
  }
  std::vector<ModuleVector> cols;
  for (std::size_t i = 0; i < rank(n); ++i)
    for (std::uint32_t g = 0; g < N; ++g) cols.push_back(act(g, boundary(n, i)));
  return columns_to_matrix(cols, rank(n - 1) * N);
}

ModuleVector FreeResolution::apply_boundary(int n, const ModuleVector& x) const {
  const std::size_t N = group_->order();
  if (n == 0) {
    Integer s = 0;
    for (const auto& v : x) s += v;
    return {s};
  }
  ModuleVector y(rank(n - 1) * N, 0);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] == 0) continue;
    ModuleVector t = act(static_cast<std::uint32_t>(k % N), boundary(n, k / N));
    for (std::size_t q = 0; q < y.size(); ++q)
      if (t[q] != 0) y[q] += x[k] * t[q];
  }
  return y;
}

IntMatrix FreeResolution::cochain_differential(int n, const Coefficients& m) const {
  if (n + 1 > top_degree()) throw CapacityError("resolution computed only through degree " + std::to_string(top_degree()));
  const std::size_t N = group_->order();
  IntMatrix d(rank(n + 1), rank(n));
  for (std::size_t i = 0; i < rank(n + 1); ++i) {
    const ModuleVector& b = boundary(n + 1, i);
    for (std::size_t j = 0; j < rank(n); ++j) {
      Integer s = 0;
      for (std::uint32_t g = 0; g < N; ++g)
        if (b[j * N + g] != 0) s += b[j * N + g] * static_cast<long>(m.rho(g));
      if (m.modulus != 0) s = mod(s, m.modulus);
      if (s != 0) d.set(i, j, s);
    }
  }
  return d;
}

Subquotient FreeResolution::cohomology(int n, const Coefficients& m) const {
  IntMatrix d_out = cochain_differential(n, m);
  IntMatrix d_in = n == 0 ? IntMatrix(rank(0), 0) : cochain_differential(n - 1, m);
  check_complex(d_out, d_in, m.modulus);
  return subquotient(d_out, d_in, m.modulus);
}

const LinearSolver& FreeResolution::solver(int n) const {
  if (n > top_degree()) throw CapacityError("resolution computed only through degree " + std::to_string(top_degree()));
  if (!solvers_[n]) solvers_[n] = std::make_unique<LinearSolver>(z_matrix(n));
  return *solvers_[n];
}

ModuleVector FreeResolution::lift(int n, const ModuleVector& x) const {
  const std::size_t N = group_->order();
  if (n == -1) {
    ModuleVector y(N, 0);
    y[0] = x.at(0);
    return y;
  }
  auto y = solver(n + 1).solve(x);
  if (!y) throw ComplexError("FreeResolution::lift: element of degree " + std::to_string(n) + " is not a boundary");
  return *y;
}

ModuleVector FreeResolution::homotopy(int n, const ModuleVector& x) const {
  const std::size_t N = group_->order();
  if (n == -1) return lift(-1, x);
  if (n + 1 > top_degree()) throw CapacityError("resolution computed only through degree " + std::to_string(top_degree()));
  auto& h = homotopy_[n];
  if (h.empty()) {
    std::size_t dim = rank(n) * N;
    for (std::size_t k = 0; k < dim; ++k) {
      ModuleVector b(dim, 0);
      b[k] = 1;
      ModuleVector r = homotopy(n - 1, apply_boundary(n, b));
      for (std::size_t q = 0; q < dim; ++q) b[q] -= r[q];
      h.push_back(lift(n, b));
    }
  }
  ModuleVector y(rank(n + 1) * N, 0);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] == 0) continue;
    for (std::size_t q = 0; q < y.size(); ++q)
      if (h[k][q] != 0) y[q] += x[k] * h[k][q];
  }
  return y;
}

ChainLift::ChainLift(const FreeResolution& p, const std::vector<std::uint32_t>& theta_perm, int top_degree)
    : p_(p), perm_(theta_perm) {
  const std::size_t N = p.group().order();
  if (top_degree > p.top_degree()) throw CapacityError("ChainLift: resolution too short");
  ModuleVector e0(N, 0);
  e0[0] = 1;
  images_.push_back({e0});
  for (int n = 1; n <= top_degree; ++n) {
    std::vector<ModuleVector> imgs;
    for (std::size_t i = 0; i < p.rank(n); ++i) imgs.push_back(p.lift(n - 1, apply(n - 1, p.boundary(n, i))));
    images_.push_back(std::move(imgs));
  }
}

ModuleVector ChainLift::apply(int n, const ModuleVector& x) const {
  const std::size_t N = p_.group().order();
  ModuleVector y(p_.rank(n) * N, 0);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] == 0) continue;
    ModuleVector t = p_.act(perm_[k % N], image(n, k / N));
    for (std::size_t q = 0; q < y.size(); ++q)
      if (t[q] != 0) y[q] += x[k] * t[q];
  }
  return y;
}

IntMatrix ChainLift::cochain_map(int n) const {
  const std::size_t N = p_.group().order();
  IntMatrix t(p_.rank(n), p_.rank(n));
  for (std::size_t i = 0; i < p_.rank(n); ++i)
    for (std::size_t j = 0; j < p_.rank(n); ++j) {
      Integer s = 0;
      for (std::size_t g = 0; g < N; ++g) s += image(n, i)[j * N + g];
      if (s != 0) t.set(i, j, s);
    }
  return t;
}

}  // namespace vcg
