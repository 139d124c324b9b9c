#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "vcg/bar.hpp"
#include "vcg/closed_form.hpp"
#include "vcg/coefficients.hpp"
#include "vcg/finab.hpp"
#include "vcg/group.hpp"
#include "vcg/resolution.hpp"

namespace vcg {

struct OracleCaps {
  std::size_t max_order = FiniteGroup::kDefaultCap;
  int max_degree = -1;                        // < 0: 6 when |G| ≤ 12, else 4
  std::uint64_t cell_budget = 25'000'000;     // (|G|−1)^{n+1} rows of d^n
  std::uint64_t representative_cells = 50'000;  // explicit cochains only up to this many n-cells
  std::uint64_t dense_cells = 2'000'000;         // largest cochain aw_cup will materialize
};

int default_degree_cap(std::size_t order);
// Throws CapacityError with the size estimate when H^n over the bar complex exceeds the caps.
void check_bar_capacity(std::size_t order, int n, const OracleCaps& caps);

// A normalized bar cochain, values indexed by n-cell code.
struct BarCochain {
  int degree = 0;
  std::vector<Integer> values;
};

struct BarCohomology {
  FinAb group;
  std::vector<BarCochain> representatives;  // one per generator; empty beyond representative_cells
  bool morse = true;
};

// H^n(G; M). coeffs must be indexed by FiniteGroup::build(spec).
BarCohomology bar_cohomology(const GroupSpec& spec, const Coefficients& coeffs, int n, const OracleCaps& caps = {},
                             Assembly assembly = Assembly::Parallel);

// H^n(Z_m; M) from the 2-periodic resolution with differentials t − 1 and N = 1 + t + … + t^{m−1}.
// coeffs indexed by FiniteGroup::build(Cyclic(m)).
FinAb periodic_cohomology(std::int64_t m, const Coefficients& coeffs, int n);

// Cup products and change of resolution between a computed free resolution P and the bar complex,
// integer coefficients.
class CupOracle {
 public:
  CupOracle(const GroupSpec& spec, int top_degree);

  const FiniteGroup& group() const { return *group_; }
  const FreeResolution& resolution() const { return *p_; }
  // H^n(G; Z) through P, cached; needs n < top_degree.
  const Subquotient& cohomology(int n) const;

  // Generator t of H^n as a bar cocycle, pulled back along Bar → P.
  BarCochain representative(int n, std::size_t t) const;
  // Generator coordinates of the class of a bar cocycle, pulled back along P → Bar.
  std::vector<Integer> class_of(const BarCochain& f) const;
  // [u] ⌣ [v] for classes given in generator coordinates of H^p and H^q.
  std::vector<Integer> cup(int p, const std::vector<Integer>& u, int q, const std::vector<Integer>& v) const;

  // P_n → Bar_n on e_i: bar codes with integer coefficients (group coefficient always 1).
  const std::map<std::uint64_t, Integer>& to_bar(int n, std::size_t i) const;
  // Bar_n → P_n on the cell [b_1|…|b_n].
  const ModuleVector& from_bar(int n, std::uint64_t code) const;

 private:
  Integer evaluate(const std::vector<Integer>& cocycle, const ModuleVector& x) const;
  std::vector<Integer> cocycle(int p, const std::vector<Integer>& u) const;

  std::shared_ptr<FiniteGroup> group_;
  std::unique_ptr<FreeResolution> p_;
  std::unique_ptr<BarComplex> bar_;
  mutable std::map<int, Subquotient> cohomology_;
  mutable std::vector<std::vector<std::map<std::uint64_t, Integer>>> to_bar_;
  mutable std::vector<std::unordered_map<std::uint64_t, ModuleVector>> from_bar_;
};

// Alexander–Whitney product of bar cochains with integer coefficients:
// (f ⌣ g)(b_1,…,b_{p+q}) = f(b_1,…,b_p)·g(b_{p+1},…,b_{p+q}).
BarCochain aw_cup(const GroupSpec& spec, const BarCochain& f, const BarCochain& g, const OracleCaps& caps = {});

struct InducedAction {
  std::vector<Integer> orders;  // generator orders of H^n, 0 for Z
  IntMatrix matrix;             // column t: image of generator t, reduced modulo the orders
};

// The map θ(1)^* on H^n(F; Z) in the generator basis of the computed resolution.
InducedAction induced_action(const GroupSpec& spec, const ThetaSpec& theta, int n);
InducedAction induced_action(const FreeResolution& p, const std::vector<std::uint32_t>& perm, int n);

// H^n(F ⋊_θ Z; Z): ker(T − 1) on H^n(F) for even n, coker(T − 1) on H^{n−1}(F) for odd n.
FinAb fz_cohomology(const GroupSpec& spec, const ThetaSpec& theta, int n);

// The family-1 product of two named generators replayed from integer representatives on the
// factor resolutions: Z (two-term), Z_b and Z_a (periodic), multiplied through their diagonals.
CohClass paper_cup_oracle(const GroupSpec& spec, const ThetaSpec& theta, const Symbol& lhs, const Symbol& rhs);

}  // namespace vcg
