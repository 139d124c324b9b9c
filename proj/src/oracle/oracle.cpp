#include "vcg/oracle.hpp"

#include <sstream>
#include <stdexcept>

#include "vcg/errors.hpp"

namespace vcg {
namespace {

std::uint64_t ipow(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

// Saturating (|G|−1)^k as a double, for size messages.
double cell_estimate(std::size_t order, int k) {
  double r = 1;
  for (int j = 0; j < k; ++j) r *= double(order - 1);
  return r;
}

Integer reduce(const Integer& v, const Integer& modulus) { return modulus == 0 ? v : mod(v, modulus); }

}  // namespace

int default_degree_cap(std::size_t order) { return order <= 12 ? 6 : 4; }

void check_bar_capacity(std::size_t order, int n, const OracleCaps& caps) {
  if (n < 0) throw std::invalid_argument("negative degree");
  int cap = caps.max_degree >= 0 ? caps.max_degree : default_degree_cap(order);
  double rows = cell_estimate(order, n + 1);
  if (n > cap || rows > double(caps.cell_budget)) {
    std::ostringstream os;
    os << "bar complex at degree " << n << " for |G| = " << order << ": (|G|-1)^" << (n + 1) << " = " << rows
       << " cells (budget " << caps.cell_budget << ", degree cap " << cap << ")";
    throw CapacityError(os.str());
  }
}

CupOracle::CupOracle(const GroupSpec& spec, int top_degree)
    : group_(std::make_shared<FiniteGroup>(FiniteGroup::build(spec))),
      p_(std::make_unique<FreeResolution>(*group_, top_degree)),
      bar_(std::make_unique<BarComplex>(*group_, Coefficients::integers())) {
  to_bar_.resize(top_degree + 1);
  from_bar_.resize(top_degree + 1);
}

const Subquotient& CupOracle::cohomology(int n) const {
  auto it = cohomology_.find(n);
  if (it == cohomology_.end()) it = cohomology_.emplace(n, p_->cohomology(n, Coefficients::integers())).first;
  return it->second;
}

const std::map<std::uint64_t, Integer>& CupOracle::to_bar(int n, std::size_t i) const {
  auto& level = to_bar_.at(n);
  if (level.empty()) {
    const std::size_t N = group_->order();
    for (std::size_t k = 0; k < p_->rank(n); ++k) {
      std::map<std::uint64_t, Integer> img;
      if (n == 0) {
        img[0] = 1;
      } else {
        const std::uint64_t shift = ipow(N - 1, n - 1);
        const ModuleVector& d = p_->boundary(n, k);
        for (std::size_t x = 0; x < d.size(); ++x) {
          std::size_t g = x % N;
          if (d[x] == 0 || g == 0) continue;
          for (const auto& [code, v] : to_bar(n - 1, x / N)) img[(g - 1) * shift + code] += d[x] * v;
        }
        for (auto it = img.begin(); it != img.end();) it = it->second == 0 ? img.erase(it) : std::next(it);
      }
      level.push_back(std::move(img));
    }
  }
  return level.at(i);
}

const ModuleVector& CupOracle::from_bar(int n, std::uint64_t code) const {
  auto& memo = from_bar_.at(n);
  if (auto it = memo.find(code); it != memo.end()) return it->second;
  const std::size_t N = group_->order();
  ModuleVector out;
  if (n == 0) {
    out.assign(N, 0);
    out[0] = 1;
  } else {
    auto t = bar_->decode(code, n);
    ModuleVector x = p_->act(t[0], from_bar(n - 1, bar_->encode(std::vector<std::uint32_t>(t.begin() + 1, t.end()))));
    auto add = [&](const std::vector<std::uint32_t>& face, int sign) {
      const ModuleVector& y = from_bar(n - 1, bar_->encode(face));
      for (std::size_t k = 0; k < y.size(); ++k)
        if (y[k] != 0) x[k] += sign * y[k];
    };
    for (int i = 1; i < n; ++i) {
      std::uint32_t g = group_->mul(t[i - 1], t[i]);
      if (g == 0) continue;
      std::vector<std::uint32_t> face(t.begin(), t.begin() + i - 1);
      face.push_back(g);
      face.insert(face.end(), t.begin() + i + 1, t.end());
      add(face, i % 2 ? -1 : 1);
    }
    add(std::vector<std::uint32_t>(t.begin(), t.end() - 1), n % 2 ? -1 : 1);
    out = p_->homotopy(n - 1, x);
  }
  return memo.emplace(code, std::move(out)).first->second;
}

Integer CupOracle::evaluate(const std::vector<Integer>& z, const ModuleVector& x) const {
  const std::size_t N = group_->order();
  Integer s = 0;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] != 0) s += x[k] * z[k / N];
  return s;
}

std::vector<Integer> CupOracle::cocycle(int p, const std::vector<Integer>& u) const {
  const Subquotient& sq = cohomology(p);
  if (u.size() != sq.lifts().size()) throw std::invalid_argument("CupOracle: class has the wrong number of coordinates");
  std::vector<Integer> z(p_->rank(p), 0);
  for (std::size_t t = 0; t < u.size(); ++t)
    for (std::size_t i = 0; i < z.size(); ++i) z[i] += u[t] * sq.lifts()[t][i];
  return z;
}

BarCochain CupOracle::representative(int n, std::size_t t) const {
  const Subquotient& sq = cohomology(n);
  const auto& z = sq.lifts().at(t);
  BarCochain f{n, std::vector<Integer>(bar_->cells(n))};
  for (std::uint64_t c = 0; c < f.values.size(); ++c) f.values[c] = evaluate(z, from_bar(n, c));
  return f;
}

std::vector<Integer> CupOracle::class_of(const BarCochain& f) const {
  const int n = f.degree;
  if (f.values.size() != bar_->cells(n)) throw std::invalid_argument("CupOracle::class_of: cochain has the wrong size");
  std::vector<Integer> w(p_->rank(n), 0);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (const auto& [code, v] : to_bar(n, i)) w[i] += v * f.values[code];
  return cohomology(n).coordinates(w);
}

std::vector<Integer> CupOracle::cup(int p, const std::vector<Integer>& u, int q, const std::vector<Integer>& v) const {
  const auto zu = cocycle(p, u), zv = cocycle(q, v);
  const std::uint64_t split = ipow(group_->order() - 1, q);
  std::unordered_map<std::uint64_t, Integer> uval, vval;
  auto value = [&](std::unordered_map<std::uint64_t, Integer>& memo, const std::vector<Integer>& z, int deg,
                   std::uint64_t code) -> const Integer& {
    auto it = memo.find(code);
    if (it == memo.end()) it = memo.emplace(code, evaluate(z, from_bar(deg, code))).first;
    return it->second;
  };
  std::vector<Integer> w(p_->rank(p + q), 0);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (const auto& [code, c] : to_bar(p + q, i)) {
      const Integer& x = value(uval, zu, p, code / split);
      if (x == 0) continue;
      w[i] += c * x * value(vval, zv, q, code % split);
    }
  return cohomology(p + q).coordinates(w);
}

BarCochain aw_cup(const GroupSpec& spec, const BarCochain& f, const BarCochain& g, const OracleCaps& caps) {
  const std::size_t order = static_cast<std::size_t>(spec.order());
  const std::uint64_t q = order - 1;
  if (f.values.size() != ipow(q, f.degree) || g.values.size() != ipow(q, g.degree))
    throw std::invalid_argument("aw_cup: cochain sizes do not match the group");
  if (cell_estimate(order, f.degree + g.degree) > double(caps.dense_cells))
    throw CapacityError("aw_cup: degree " + std::to_string(f.degree + g.degree) + " cochain exceeds " +
                        std::to_string(caps.dense_cells) + " cells");
  BarCochain out{f.degree + g.degree, std::vector<Integer>(f.values.size() * g.values.size())};
  for (std::size_t x = 0; x < f.values.size(); ++x) {
    if (f.values[x] == 0) continue;
    for (std::size_t y = 0; y < g.values.size(); ++y) out.values[x * g.values.size() + y] = f.values[x] * g.values[y];
  }
  return out;
}

BarCohomology bar_cohomology(const GroupSpec& spec, const Coefficients& coeffs, int n, const OracleCaps& caps,
                             Assembly assembly) {
  validate(spec);
  FiniteGroup g = FiniteGroup::build(spec, caps.max_order);
  check_bar_capacity(g.order(), n, caps);
  if (!coeffs.trivial() && coeffs.action.size() != g.order())
    throw std::invalid_argument("bar_cohomology: coefficient action does not match the group");
  BarComplex bar(g, coeffs);
  auto c = bar.cohomology(n, assembly);
  BarCohomology out;
  out.group = c.sq.group();
  out.morse = c.morse;
  if (bar.cells(n) > caps.representative_cells) return out;

  CupOracle oracle(spec, n + 1);
  Subquotient sq = oracle.resolution().cohomology(n, coeffs);
  if (!(sq.group() == out.group))
    throw std::logic_error("bar_cohomology: resolutions disagree on " + spec.name() + " in degree " + std::to_string(n));
  const std::size_t N = g.order();
  for (const auto& z : sq.lifts()) {
    BarCochain f{n, std::vector<Integer>(bar.cells(n))};
    for (std::uint64_t code = 0; code < f.values.size(); ++code) {
      const ModuleVector& x = oracle.from_bar(n, code);
      Integer s = 0;
      for (std::size_t k = 0; k < x.size(); ++k)
        if (x[k] != 0) s += x[k] * coeffs.rho(std::uint32_t(k % N)) * z[k / N];
      f.values[code] = reduce(s, coeffs.modulus);
    }
    out.representatives.push_back(std::move(f));
  }
  return out;
}

FinAb periodic_cohomology(std::int64_t m, const Coefficients& coeffs, int n) {
  if (m < 2) throw ValidationError("periodic_cohomology: m >= 2 required");
  if (n < 0) throw std::invalid_argument("periodic_cohomology: negative degree");
  FiniteGroup g = FiniteGroup::build(GroupSpec::cyclic(m));
  const Integer rho = coeffs.rho(g.generators().at(0));
  // Hom(P_k, M) = M; the coboundary out of degree k is t − 1 for even k and N for odd k.
  auto d = [&](int k) {
    Integer v;
    if (k % 2 == 0) {
      v = rho - 1;
    } else {
      Integer pw = 1;
      v = 0;
      for (std::int64_t j = 0; j < m; ++j, pw *= rho) v += pw;
    }
    IntMatrix a(1, 1);
    v = reduce(v, coeffs.modulus);
    if (v != 0) a.set(0, 0, v);
    return a;
  };
  IntMatrix d_in = n >= 1 ? d(n - 1) : IntMatrix(1, 0);
  return subquotient(d(n), d_in, coeffs.modulus).group();
}

InducedAction induced_action(const FreeResolution& p, const std::vector<std::uint32_t>& perm, int n) {
  Subquotient sq = p.cohomology(n, Coefficients::integers());
  ChainLift lift(p, perm, n);
  IntMatrix t = lift.cochain_map(n);
  InducedAction out;
  out.orders = sq.orders();
  out.matrix = IntMatrix(sq.lifts().size(), sq.lifts().size());
  for (std::size_t c = 0; c < sq.lifts().size(); ++c) {
    auto coords = sq.coordinates(t.apply(sq.lifts()[c]));
    for (std::size_t r = 0; r < coords.size(); ++r)
      if (coords[r] != 0) out.matrix.set(r, c, coords[r]);
  }
  return out;
}

InducedAction induced_action(const GroupSpec& spec, const ThetaSpec& theta, int n) {
  FiniteGroup g = FiniteGroup::build(spec);
  auto map = theta_permutation(g, theta);
  FreeResolution p(g, n + 1);
  return induced_action(p, map.perm, n);
}

FinAb fz_cohomology(const GroupSpec& spec, const ThetaSpec& theta, int n) {
  if (n < 0) throw std::invalid_argument("fz_cohomology: negative degree");
  const int k = n % 2 == 0 ? n : n - 1;
  InducedAction a = induced_action(spec, theta, k);
  IntMatrix m = a.matrix;
  for (std::size_t i = 0; i < m.rows(); ++i) m.add(i, i, -1);
  return n % 2 == 0 ? hom_kernel(m, a.orders, a.orders) : hom_cokernel(m, a.orders);
}

}  // namespace vcg
